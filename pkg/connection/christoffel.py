"""
Torsion-free affine connections given by Christoffel symbols Gamma^k_ij.

Symbols are stored once per unordered pair (i <= j), 0-based, and only when
nonzero; gamma(k, i, j) == gamma(k, j, i) by construction.
"""
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy import Rational

from core.expr import Expr
from core.parser import parse_expr
from core.rational import RationalLike, to_qq
from core.ring import coordinate_ring, ring_names
from exceptions import ConnectionConflictError, DimensionMismatchError, InvalidInputError, PoleError

Key = Tuple[int, int, int]


def _canonical(k: int, i: int, j: int) -> Key:
    return (k, i, j) if i <= j else (k, j, i)


class Connection:
    def __init__(self, ring, symbols: Mapping[Key, Expr] = None):
        self.ring = ring
        self.n = ring.ngens
        self._symbols: Dict[Key, Expr] = {}
        for (k, i, j), value in (symbols or {}).items():
            for index in (k, i, j):
                if not 0 <= index < self.n:
                    raise DimensionMismatchError(f"0..{self.n - 1}", index, "Christoffel index")
            if not isinstance(value, Expr):
                value = Expr.constant(ring, value)
            if not value.is_zero():
                self._symbols[_canonical(k, i, j)] = value

    @classmethod
    def flat(cls, ring) -> "Connection":
        """Gamma = 0: the coordinate connection."""
        return cls(ring)

    @classmethod
    def from_entries(cls, ring, entries: Iterable[Tuple[int, int, int, Any]]) -> "Connection":
        """
        Build from 0-based (k, i, j, value) entries.

        An entry may be given for (i, j), (j, i) or both; when both are given
        they must agree, otherwise ConnectionConflictError (1-based indices).
        """
        seen: Dict[Key, Expr] = {}
        for k, i, j, value in entries:
            if not isinstance(value, Expr):
                value = Expr.constant(ring, value)
            key = _canonical(k, i, j)
            if key in seen:
                if not seen[key].equals(value):
                    raise ConnectionConflictError(k + 1, i + 1, j + 1)
                continue
            seen[key] = value
        return cls(ring, seen)

    def gamma(self, k: int, i: int, j: int) -> Expr:
        value = self._symbols.get(_canonical(k, i, j))
        return Expr.zero(self.ring) if value is None else value

    def nonzero(self) -> List[Tuple[Key, Expr]]:
        return sorted(self._symbols.items())

    def is_flat(self) -> bool:
        return not self._symbols

    def evaluate(self, point: Sequence[RationalLike]) -> Dict[Key, Rational]:
        values = [to_qq(v) for v in point]
        try:
            return {key: g.evaluate_qq(values) for key, g in self._symbols.items()}
        except PoleError:
            raise PoleError(point)

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"k": k + 1, "i": i + 1, "j": j + 1, "coeff": str(value)}
            for (k, i, j), value in self.nonzero()
        ]

    def __repr__(self) -> str:
        return f"Connection(n={self.n}, nonzero={len(self._symbols)})"


def connection_from_json(data: Sequence[Mapping[str, Any]], vars: Sequence[str]) -> Connection:
    """Load {k, i, j, coeff} entries (1-based); symmetrized with conflict detection."""
    ring = coordinate_ring(vars)
    names = ring_names(ring)
    n = ring.ngens
    entries = []
    for entry in data or []:
        try:
            k, i, j = int(entry["k"]), int(entry["i"]), int(entry["j"])
            text = entry["coeff"]
        except (KeyError, TypeError, ValueError):
            raise InvalidInputError(f"connection entry {entry!r} needs integer k, i, j and coeff", "connection")
        if not all(1 <= index <= n for index in (k, i, j)):
            raise InvalidInputError(f"Christoffel indices ({k}, {i}, {j}) must lie in 1..{n}", "connection")
        entries.append((k - 1, i - 1, j - 1, parse_expr(str(text), names)))
    return Connection.from_entries(ring, entries)
