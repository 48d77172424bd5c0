from enum import Enum
from typing import Dict, Iterable, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, computed_field

IntTuple = Tuple[int, ...]


class Strategy(str, Enum):
    """
    Which construction produced a decomposition.
    """
    ORACLE = "oracle"
    LP_ROUNDING = "lp-rounding"
    LP_FALLBACK = "lp-fallback"
    FACE_DESCENT = "face-descent"


class Term(BaseModel):
    """
    One Hilbert basis element with its positive multiplicity.
    """
    model_config = ConfigDict(frozen=True)

    element: IntTuple = Field(description="Hilbert basis element")
    multiplicity: PositiveInt = Field(description="Positive integer coefficient")


DescentAction = Literal["interior-step", "pigeonhole-step", "face-projection", "stuck", "terminal-oracle"]


class DescentStep(BaseModel):
    """
    One step of a face descent, recorded in ambient coordinates.
    """
    model_config = ConfigDict(frozen=True)

    action: DescentAction
    point: IntTuple = Field(description="Remaining point before the step")
    element: Optional[IntTuple] = Field(default=None, description="Basis element spent in the step")
    multiplicity: Optional[int] = Field(default=None, description="How often the element was subtracted")
    rows: Optional[IntTuple] = Field(default=None, description="Rows of the current cone made tight")
    dimension: int = Field(ge=0, description="Dimension of the current face after the step")


class DescentTrace(BaseModel):
    """
    Ordered record of a face descent.
    """
    steps: List[DescentStep] = Field(default_factory=list)

    @property
    def stuck(self) -> bool:
        return any(s.action == "stuck" for s in self.steps)

    @property
    def stuck_dimension(self) -> Optional[int]:
        for s in self.steps:
            if s.action == "stuck":
                return s.dimension
        return None

    def projection_dimensions(self) -> List[int]:
        return [s.dimension for s in self.steps if s.action == "face-projection"]


class Decomposition(BaseModel):
    """
    ``point = Σ multiplicity · element`` over distinct Hilbert basis elements.
    """
    model_config = ConfigDict(frozen=True)

    point: IntTuple = Field(description="The decomposed cone point")
    terms: List[Term] = Field(default_factory=list, description="Distinct elements with multiplicities")
    strategy: Strategy
    certified_bound: Optional[int] = Field(default=None, description="Proven upper bound on the length")
    trace: Optional[DescentTrace] = Field(default=None, description="Face descent record, when available")

    @computed_field
    @property
    def length(self) -> int:
        return len(self.terms)

    def total(self) -> IntTuple:
        result = [0] * len(self.point)
        for term in self.terms:
            for j, v in enumerate(term.element):
                result[j] += term.multiplicity * v
        return tuple(result)

    def as_pairs(self) -> List[Tuple[IntTuple, int]]:
        return [(t.element, t.multiplicity) for t in self.terms]

    @classmethod
    def from_pairs(
        cls,
        point: Iterable[int],
        pairs: Iterable[Tuple[Iterable[int], int]],
        strategy: Strategy,
        certified_bound: Optional[int] = None,
        trace: Optional[DescentTrace] = None,
    ) -> "Decomposition":
        """Build a decomposition, merging equal elements and dropping zero multiplicities."""
        merged: Dict[IntTuple, int] = {}
        for element, multiplicity in pairs:
            key = tuple(int(v) for v in element)
            merged[key] = merged.get(key, 0) + int(multiplicity)
        terms = [Term(element=e, multiplicity=c) for e, c in sorted(merged.items()) if c > 0]
        return cls(
            point=tuple(int(v) for v in point),
            terms=terms,
            strategy=strategy,
            certified_bound=certified_bound,
            trace=trace,
        )
