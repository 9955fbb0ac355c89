"""The quiver of kS computed three independent ways."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .algebra import (
    IdempotentSystem,
    multiply,
    radical_basis,
    radical_square_basis,
)
from .lattice import support_of
from .linalg import EchelonBasis
from .lrb import LeftRegularBand, sub_lrb


@dataclass(frozen=True, eq=False)
class Quiver:
    """Vertices are lattice indices; ``arrows[X, Y]`` counts arrows X -> Y."""

    arrows: np.ndarray
    labels: tuple[str, ...]

    @property
    def size(self) -> int:
        return self.arrows.shape[0]

    def __eq__(self, other):
        return isinstance(other, Quiver) and np.array_equal(self.arrows, other.arrows)

    __hash__ = None


def _witnesses(S, L, supp, X, y):
    """w with y < w and supp(w) < X."""
    m = S.mult
    col = supp.supp
    below_x = L.leq[col, X] & (col != X)
    above_y = m[y] == np.arange(S.size)
    above_y[y] = False
    return np.flatnonzero(below_x & above_y)


def arrow_count(S: LeftRegularBand, X: int, Y: int, y: int | None = None, support=None) -> int:
    """#(S_X / ~) - 1, or 0 when Y is not below X.

    ``y`` is an element of support Y; the smallest one by default.
    """
    L, supp = support or support_of(S)
    if not L.leq[Y, X]:
        return 0
    if y is None:
        y = supp.members[Y][0]
    elif supp[y] != Y:
        raise ValueError(f"element {S.labels[y]} does not have support {L.labels[Y]}")
    members = np.asarray(supp.members[X], dtype=np.int64)
    witnesses = _witnesses(S, L, supp, X, y).astype(np.int64)
    return int(_kernels.arrow_classes(S.mult, members, witnesses, np.int64(y))) - 1


def build_quiver(S: LeftRegularBand, support=None) -> Quiver:
    L, supp = support or support_of(S)
    k = L.size
    a = np.zeros((k, k), dtype=np.int64)
    for X in range(k):
        for Y in range(k):
            if Y != X and L.leq[Y, X]:
                a[X, Y] = arrow_count(S, X, Y, support=(L, supp))
    a.setflags(write=False)
    return Quiver(a, L.labels)


def local_band(S: LeftRegularBand, y: int, X: int, support=None):
    """The sub-band y S_{<=X}, with y as its identity."""
    L, supp = support or support_of(S)
    lower = np.flatnonzero(L.leq[supp.supp, X])
    seed = np.unique(S.mult[y, lower])
    return sub_lrb(S, seed.tolist())


def arrow_count_inductive(S: LeftRegularBand, X: int, Y: int, support=None) -> int:
    """a_XY read off as a_{top,bottom} in the sub-band y S_{<=X}."""
    L, supp = support or support_of(S)
    if not L.leq[Y, X]:
        return 0
    y = supp.members[Y][0]
    sub = local_band(S, y, X, (L, supp))
    if not sub.has_identity:
        raise ValueError("local band has no identity")
    Ls, _ = support_of(sub.band)
    return arrow_count(sub.band, Ls.top, Ls.bottom)


def ext_dimension(S: LeftRegularBand, sys: IdempotentSystem, X: int, Y: int, support=None) -> int:
    """dim e_Y (J / J^2) e_X by exact rank."""
    L, supp = support or support_of(S)
    eX, eY = sys[X], sys[Y]
    sandwich = lambda j: multiply(S, multiply(S, eY, j), eX)
    sq = EchelonBasis(sandwich(j)._c for j in radical_square_basis(S, (L, supp)))
    base = sq.rank
    for j in radical_basis(S, (L, supp)):
        sq.add(sandwich(j)._c)
    return sq.rank - base


def build_ext_quiver(S: LeftRegularBand, sys: IdempotentSystem, support=None) -> Quiver:
    L, supp = support or support_of(S)
    k = L.size
    a = np.zeros((k, k), dtype=np.int64)
    for X in range(k):
        for Y in range(k):
            a[X, Y] = ext_dimension(S, sys, X, Y, (L, supp))
    a.setflags(write=False)
    return Quiver(a, L.labels)


def count_paths(Q: Quiver, X: int, Y: int) -> int:
    """Number of directed paths from X to Y, counting the empty path when X == Y."""
    a = Q.arrows.tolist()
    k = Q.size

    @lru_cache(maxsize=None)
    def paths_to_y(v):
        if v == Y:
            return 1
        return sum(a[v][u] * paths_to_y(u) for u in range(k) if a[v][u])

    return paths_to_y(X)


def path_count_matrix(Q: Quiver) -> np.ndarray:
    """P[X, Y] = number of paths X -> Y, summing powers of the arrow matrix."""
    k = Q.size
    a = Q.arrows.astype(object)
    P = np.eye(k, dtype=object)
    power = np.eye(k, dtype=object)
    for _ in range(k):
        power = power.dot(a)
        if not power.any():
            break
        P = P + power
    else:
        raise ValueError("quiver has a cycle")
    return P.astype(np.int64)


def to_dot(Q: Quiver, name: str = "quiver") -> str:
    """DOT digraph; an arrow of multiplicity m appears as m parallel edges."""
    lines = [f"digraph {name} {{"]
    for X in range(Q.size):
        label = Q.labels[X].replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{X} [label="{label}"];')
    for X in range(Q.size):
        for Y in range(Q.size):
            lines.extend(f"  n{X} -> n{Y};" for _ in range(int(Q.arrows[X, Y])))
    lines.append("}")
    return "\n".join(lines) + "\n"


def agreement(S: LeftRegularBand, sys: IdempotentSystem, support=None):
    """Per-pair triple of (direct, inductive, ext) arrow counts."""
    L, supp = support or support_of(S)
    out = {}
    for X in range(L.size):
        for Y in range(L.size):
            out[X, Y] = (
                arrow_count(S, X, Y, support=(L, supp)),
                arrow_count_inductive(S, X, Y, (L, supp)),
                ext_dimension(S, sys, X, Y, (L, supp)),
            )
    return out
