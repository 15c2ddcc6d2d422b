"""
Job and report schemas for the command line front end.
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class Command(str, Enum):
    """Recognised commands."""

    VALIDATE = "validate"
    PREPROJECTIVE = "preprojective"
    THEOREM_A = "theorem-a"
    THEOREM_B = "theorem-b"
    LOCAL_PROJECTIVITY = "prop-3.3"
    TRACE_DIAGRAM = "prop-3.10"
    TRANSLATIONS = "prop-4.2"
    PHI_KERNEL = "lemma-4.1"


class ReportStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    INPUT_ERROR = "input-error"


class FieldSpec(BaseModel):
    """A coefficient field."""
    kind: str
    p: Optional[int] = None
    k: Optional[int] = None
    modulus: Optional[List[int]] = None
    n: Optional[int] = None

    class Config:
        extra = "forbid"
        json_schema_extra = {"example": {"kind": "extension", "p": 3, "k": 2}}

    def to_spec(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


class GroupSpec(BaseModel):
    """A vertex group: cyclic of a given order or an explicit table."""
    cyclic: Optional[int] = Field(default=None, ge=1)
    table: Optional[List[List[int]]] = None

    class Config:
        extra = "forbid"

    @model_validator(mode="after")
    def exactly_one(self) -> "GroupSpec":
        if (self.cyclic is None) == (self.table is None):
            raise ValueError("a group is given by exactly one of 'cyclic' or 'table'")
        return self


class BisetSpec(BaseModel):
    """Action tables: left[g][x] and right[x][h]."""
    size: int = Field(..., ge=1)
    left: List[List[int]]
    right: List[List[int]]
    labels: Optional[List[str]] = None

    class Config:
        extra = "forbid"


class ArrowSpec(BaseModel):
    """An arrow between 1-based vertices; without a biset it carries a trivial singleton."""
    name: Optional[str] = None
    source: int = Field(..., alias="from", ge=1)
    target: int = Field(..., alias="to", ge=1)
    biset: Optional[BisetSpec] = None

    class Config:
        extra = "forbid"
        populate_by_name = True


class EIQuiverSpec(BaseModel):
    vertices: int = Field(..., ge=1)
    groups: Optional[List[GroupSpec]] = None
    arrows: List[ArrowSpec] = Field(default_factory=list)

    class Config:
        extra = "forbid"


class CartanSpec(BaseModel):
    """A Cartan triple with a 1-based orientation."""
    C: List[List[int]]
    D: List[int]
    Omega: List[Tuple[int, int]] = Field(default_factory=list)

    class Config:
        extra = "forbid"


class RepresentationSpec(BaseModel):
    """
    Vertex actions (one integer matrix per group element, per vertex) and
    balanced arrow matrices on KX(α) (x)_K M_s.
    """
    name: str = "M"
    dims: Optional[List[int]] = None
    vertex_actions: List[List[List[List[int]]]]
    arrow_maps: List[List[List[int]]] = Field(default_factory=list)

    class Config:
        extra = "forbid"


class JobSpec(BaseModel):
    """One invocation: a command, its payload and the run parameters."""
    command: Command
    quiver: Optional[EIQuiverSpec] = None
    cartan: Optional[CartanSpec] = None
    representations: List[RepresentationSpec] = Field(default_factory=list)
    field: FieldSpec
    maxdeg: int = Field(..., ge=0)
    seed: int = 0
    out: Optional[str] = None

    @model_validator(mode="after")
    def one_payload(self) -> "JobSpec":
        if (self.quiver is None) == (self.cartan is None):
            raise ValueError("the payload must be either an EI quiver or a Cartan triple")
        return self


class CheckRecord(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class Report(BaseModel):
    """Versioned, deterministic report written by every command."""
    report_version: int
    command: str
    field: Dict[str, Any] = Field(default_factory=dict)
    seed: int = 0
    status: ReportStatus
    checks: List[CheckRecord] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
    error: Optional[str] = None

    class Config:
        use_enum_values = True
