"""Cartan invariants m(Y, X) of kS."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .algebra import IdempotentSystem, left_basis_mul, multiply, span_rank
from .lattice import interval, mobius, support_of
from .lrb import LeftRegularBand
from .quiver import build_quiver, count_paths


@dataclass(frozen=True, eq=False)
class CartanMatrix:
    """``m[Y, X]``: rows indexed by Y, columns by X."""

    m: np.ndarray
    labels: tuple[str, ...]

    def __getitem__(self, key):
        return int(self.m[key])

    def __eq__(self, other):
        return isinstance(other, CartanMatrix) and np.array_equal(self.m, other.m)

    __hash__ = None

    def to_csv(self) -> str:
        rows = ["," + ",".join(_csv_cell(s) for s in self.labels)]
        for Y, label in enumerate(self.labels):
            rows.append(_csv_cell(label) + "," + ",".join(str(int(v)) for v in self.m[Y]))
        return "\n".join(rows) + "\n"

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "rows": "Y", "columns": "X", "matrix": self.m.tolist()}


def _csv_cell(s):
    return f'"{s}"' if any(c in s for c in ',"\n') else s


def over_set_count(S: LeftRegularBand, w: int, X: int, support=None) -> int:
    """#(w S_X): elements u of support X with w <= u."""
    _, supp = support or support_of(S)
    members = np.asarray(supp.members[X], dtype=np.int64)
    return int(np.count_nonzero(S.mult[w, members] == members))


def cartan_matrix(S: LeftRegularBand, support=None) -> CartanMatrix:
    """m(Y, X) = sum over Y <= W <= X of mu(Y, W) #(w S_X)."""
    L, supp = support or support_of(S)
    k = L.size
    reps = [m[0] for m in supp.members]
    counts = [[over_set_count(S, reps[W], X, (L, supp)) for X in range(k)] for W in range(k)]
    m = np.zeros((k, k), dtype=np.int64)
    for Y in range(k):
        for X in range(k):
            if L.leq[Y, X]:
                m[Y, X] = sum(mobius(L, Y, W) * counts[W][X] for W in interval(L, Y, X))
    m.setflags(write=False)
    return CartanMatrix(m, L.labels)


def cartan_oracle(S: LeftRegularBand, sys: IdempotentSystem, Y: int, X: int) -> int:
    """dim e_Y kS e_X, the rank of {e_Y s e_X : s in S}."""
    eY, eX = sys[Y], sys[X]
    seen = set()
    vecs = []
    for s in range(S.size):
        v = left_basis_mul(S, s, eX)
        if v and v not in seen:
            seen.add(v)
            vecs.append(multiply(S, eY, v))
    return span_rank(vecs)


def cartan_oracle_matrix(S: LeftRegularBand, sys: IdempotentSystem, support=None) -> CartanMatrix:
    L, _ = support or support_of(S)
    k = L.size
    m = np.array([[cartan_oracle(S, sys, Y, X) for X in range(k)] for Y in range(k)], dtype=np.int64)
    m.setflags(write=False)
    return CartanMatrix(m, L.labels)


def free_closed_form(i: int) -> int:
    """i! * sum_{j <= i} (-1)^j / j!, the Cartan invariant of a free band at distance i."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    total = factorial(i) * sum(Fraction((-1) ** j, factorial(j)) for j in range(i + 1))
    assert total.denominator == 1
    return int(total)


@dataclass(frozen=True)
class PathDimensionReport:
    paths: int
    cartan_sum: int
    size: int
    free: bool

    @property
    def ok(self) -> bool:
        # only free bands are known to be path algebras
        return not self.free or self.paths == self.cartan_sum == self.size

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} paths={self.paths} sum m={self.cartan_sum} #S={self.size}"


def path_dimension_check(S: LeftRegularBand, free: bool = False, support=None) -> PathDimensionReport:
    """Total number of quiver paths, the sum of the Cartan matrix and #S.

    Equality of all three is asserted only when ``free`` is set.
    """
    L, supp = support or support_of(S)
    Q = build_quiver(S, (L, supp))
    k = L.size
    paths = sum(count_paths(Q, X, Y) for X in range(k) for Y in range(k))
    total_m = int(cartan_matrix(S, (L, supp)).m.sum())
    return PathDimensionReport(paths, total_m, S.size, free)
