from typing import List, Optional

from pydantic import BaseModel, Field


class RunConfig(BaseModel):
    """
    Command name, inputs and flags of one CLI run; echoed into reports.
    """
    command: str
    inputs: List[str] = Field(default_factory=list, description="Input file paths")
    point: Optional[List[int]] = None
    box: Optional[int] = Field(default=None, ge=1)
    boxes: Optional[List[int]] = None
    strategy: Optional[str] = None
    k: Optional[int] = Field(default=None, ge=0)
    cap: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None
    count: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=1)
    delta_max: Optional[int] = Field(default=None, ge=1)
    kind: Optional[str] = None
    strict: bool = False
    exact_membership: bool = False
    threads: int = Field(default=1, ge=1)
    output: Optional[str] = None

    def header_lines(self) -> List[str]:
        """``# key: value`` lines for every flag that was set, in field order."""
        lines = []
        for name, value in self.model_dump(exclude_none=True).items():
            if name in ("threads", "output"):
                continue
            if isinstance(value, list):
                value = " ".join(str(v) for v in value)
            lines.append(f"# {name}: {value}")
        return lines
