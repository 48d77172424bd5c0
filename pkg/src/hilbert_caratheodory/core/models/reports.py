from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, computed_field

IntTuple = Tuple[int, ...]


class EligibilityReport(BaseModel):
    """
    Whether a point lies in the set D where the LP-rounding bound is certified.
    """
    point: IntTuple
    in_D: Optional[bool] = Field(default=None, description="Exact strip test result; None when not computed")
    vertex_multipliers_ok: bool = Field(description="λ_i >= delta_H on the support of the LP vertex")
    delta_H: int = Field(ge=1, description="Largest maximal minor of the Hilbert matrix")
    vertex_basis: IntTuple = Field(default=(), description="Basic columns of the LP vertex")
    multipliers: List[str] = Field(default_factory=list, description="LP vertex values as exact fractions")
    strips_tested: int = Field(default=0, ge=0)


class DecompositionCheck(BaseModel):
    """
    Result of checking a decomposition against a Hilbert basis.
    """
    valid: bool
    messages: List[str] = Field(default_factory=list)


class HilbertVerificationReport(BaseModel):
    """
    Certification of a claimed Hilbert basis over a box.
    """
    box: int = Field(ge=0)
    elements: int = Field(ge=0)
    checked_points: int = Field(default=0, ge=0)
    irreducibility_failures: List[IntTuple] = Field(default_factory=list)
    generation_failures: List[IntTuple] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.irreducibility_failures and not self.generation_failures


class SuiteRecord(BaseModel):
    """
    One instance of a seeded experiment suite.
    """
    index: int
    passed: bool
    detail: str


class SuiteSummary(BaseModel):
    """
    Aggregate outcome of a seeded experiment suite.
    """
    kind: str
    seed: int
    count: int
    records: List[SuiteRecord] = Field(default_factory=list)

    @computed_field
    @property
    def failures(self) -> int:
        return sum(1 for r in self.records if not r.passed)

    @computed_field
    @property
    def passed(self) -> bool:
        return self.failures == 0
