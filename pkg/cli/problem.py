"""
Problem files: the JSON input of every CLI command.

Rationals may be given as integers or "p/q" strings; expressions as strings
in the coordinate grammar. Fields a command needs but the file lacks raise
InvalidInputError when the command asks for them.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import Rational

from connection.christoffel import Connection, connection_from_json
from core.expr import Expr
from core.parser import parse_expr
from core.rational import to_matrix, to_point
from core.ring import default_vars
from darboux.chart import SeedChart, chart_from_json
from darboux.representation import ConvexRep, rep_from_json
from exceptions import InvalidInputError
from forms.pform import PForm
from forms.serialization import form_from_json
from pfaff.subspace import Subspace

RationalText = Union[int, str]


def _text(value: Any) -> str:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"expected an expression string or integer, got {value!r}")
    return str(value)


class FormTerm(BaseModel):
    index: int
    coeff: str

    @field_validator("coeff", mode="before")
    @classmethod
    def coeff_as_text(cls, v):
        return _text(v)


class ChristoffelEntry(BaseModel):
    k: int
    i: int
    j: int
    coeff: str

    @field_validator("coeff", mode="before")
    @classmethod
    def coeff_as_text(cls, v):
        return _text(v)


class ChartModel(BaseModel):
    k: Optional[int] = None
    base: Optional[List[RationalText]] = None
    a: str = "1"
    y: List[str]
    p: List[str] = Field(default_factory=list)

    @field_validator("a", mode="before")
    @classmethod
    def a_as_text(cls, v):
        return _text(v)

    @field_validator("y", "p", mode="before")
    @classmethod
    def functions_as_text(cls, v):
        return [_text(item) for item in v]


class SubspaceModel(BaseModel):
    base: Optional[List[RationalText]] = None
    basis: List[List[RationalText]]


class ProblemFile(BaseModel):
    n: int
    vars: Optional[List[str]] = None
    omega: List[FormTerm]
    connection: List[ChristoffelEntry] = Field(default_factory=list)
    point: Optional[List[RationalText]] = None
    chart: Optional[ChartModel] = None
    subspace: Optional[SubspaceModel] = None
    S0: Optional[List[List[RationalText]]] = None
    u: Optional[str] = None
    rep: Optional[Dict[str, Any]] = None
    functions: Optional[List[str]] = None
    expected_rank: Optional[int] = None
    budget: Optional[int] = None
    seed: Optional[int] = None
    samples: Optional[int] = None

    @model_validator(mode="after")
    def check_shape(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.vars is not None and len(self.vars) != self.n:
            raise ValueError(f"{len(self.vars)} variable names for n = {self.n}")
        for term in self.omega:
            if not 1 <= term.index <= self.n:
                raise ValueError(f"omega index {term.index} outside 1..{self.n}")
        if self.point is not None and len(self.point) != self.n:
            raise ValueError(f"point has {len(self.point)} coordinates, expected {self.n}")
        for name in ("budget", "samples"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be nonnegative")
        return self

    # -- loaders -------------------------------------------------------

    def variables(self) -> Tuple[str, ...]:
        return tuple(self.vars) if self.vars is not None else default_vars(self.n)

    def base_point(self) -> Tuple[Rational, ...]:
        """The query point x; the origin when omitted."""
        return to_point(self.point) if self.point is not None else to_point([0] * self.n)

    def load_omega(self) -> PForm:
        terms = [{"indices": [t.index], "coeff": t.coeff} for t in self.omega]
        return form_from_json(terms, self.variables(), degree=1)

    def load_connection(self) -> Connection:
        return connection_from_json([entry.model_dump() for entry in self.connection], self.variables())

    def load_chart(self) -> SeedChart:
        if self.chart is None:
            raise InvalidInputError("this command needs a 'chart'", "problem")
        return chart_from_json(self.chart.model_dump(exclude_none=True), self.variables(), self.base_point())

    def load_subspace(self) -> Subspace:
        if self.subspace is None:
            raise InvalidInputError("this command needs a 'subspace'", "problem")
        base = self.subspace.base if self.subspace.base is not None else self.base_point()
        return Subspace(to_point(base), tuple(to_point(v) for v in self.subspace.basis))

    def load_S0(self) -> List[List[Rational]]:
        if self.S0 is None:
            raise InvalidInputError("this command needs 'S0'", "problem")
        return to_matrix(self.S0)

    def load_u(self) -> Expr:
        if self.u is None:
            raise InvalidInputError("this command needs a function 'u'", "problem")
        return parse_expr(self.u, self.variables())

    def load_rep(self) -> ConvexRep:
        if self.rep is None:
            raise InvalidInputError("this command needs a representation 'rep'", "problem")
        data = dict(self.rep)
        data.setdefault("base", [str(v) for v in self.base_point()])
        return rep_from_json(data, self.variables())

    def load_functions(self) -> List[Expr]:
        if self.functions is not None:
            return [parse_expr(text, self.variables()) for text in self.functions]
        return list(self.load_chart().functions)


def load_problem(path: Union[str, Path]) -> ProblemFile:
    """Read and validate a problem file; OSError, JSONDecodeError and ValidationError propagate."""
    text = Path(path).read_text(encoding="utf-8")
    return ProblemFile.model_validate(json.loads(text))


def problem_from_dict(data: Dict[str, Any]) -> ProblemFile:
    return ProblemFile.model_validate(data)
