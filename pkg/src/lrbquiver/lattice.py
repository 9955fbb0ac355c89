"""Support lattice of a left regular band, Möbius function, Hasse diagram."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .lrb import LeftRegularBand, LRBError


class StructureError(LRBError):
    """The preorder quotient is not a join-semilattice."""


@dataclass(frozen=True, eq=False)
class SupportLattice:
    """Finite lattice stored by its order and join tables.

    Indices follow a fixed linear extension (by rank, then by the smallest
    member of the support class), so ``bottom == 0`` and ``top == size - 1``.
    """

    leq: np.ndarray
    join: np.ndarray
    labels: tuple[str, ...]
    rank: np.ndarray
    _mu: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return self.leq.shape[0]

    def __len__(self):
        return self.size

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.leq[x, y])


@dataclass(frozen=True, eq=False)
class SupportMap:
    supp: np.ndarray          # supp[s] = lattice index
    members: tuple            # members[X] = sorted element indices of support X

    def __getitem__(self, s):
        return int(self.supp[s])

    def __len__(self):
        return len(self.supp)


def _longest_chain_ranks(leq):
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    rank = np.zeros(n, dtype=np.int64)
    # elements with fewer elements below come first in some linear extension
    for x in np.argsort(strict.sum(axis=0), kind="stable"):
        below = np.flatnonzero(strict[:, x])
        if below.size:
            rank[x] = rank[below].max() + 1
    return rank


def compute_support(S: LeftRegularBand) -> tuple[SupportLattice, SupportMap]:
    """Quotient ``S`` by the preorder ``y <~ x iff xy = x``."""
    if S.identity is None:
        raise StructureError("support lattice needs an identity element")
    m = S.mult
    n = S.size
    idx = np.arange(n)
    pre = m == idx[:, None]              # pre[x, y]: y <~ x
    equiv = pre & pre.T
    cls_min = np.argmax(equiv, axis=1)   # smallest member of each class
    reps = np.unique(cls_min)
    k = len(reps)
    raw = np.searchsorted(reps, cls_min)
    # raw_leq[A, B]: A <= B iff b a = b for representatives
    raw_leq = pre[np.ix_(reps, reps)].T
    rank = _longest_chain_ranks(raw_leq)
    perm = np.lexsort((reps, rank))      # new index -> raw index
    relabel = np.empty(k, dtype=np.int64)
    relabel[perm] = np.arange(k)
    supp = relabel[raw]
    leq = raw_leq[np.ix_(perm, perm)]
    rank = rank[perm]
    reps = reps[perm]

    join = np.full((k, k), -1, dtype=np.int64)
    for a in range(k):
        join[a] = supp[m[reps[a], reps]]
    _check_join(leq, join, S, reps)
    if supp[S.identity] != 0 or not leq[0].all() or not leq[:, k - 1].all():
        raise StructureError("support order has no bottom or no top")

    members = tuple(tuple(np.flatnonzero(supp == X).tolist()) for X in range(k))
    labels = tuple(S.labels[r] for r in reps)
    for arr in (leq, join, rank, supp):
        arr.setflags(write=False)
    return SupportLattice(leq, join, labels, rank), SupportMap(supp, members)


def _check_join(leq, join, S, reps):
    k = leq.shape[0]
    for a in range(k):
        for b in range(k):
            j = join[a, b]
            upper = leq[a] & leq[b]
            if not (upper[j] and leq[j][upper].all()):
                la, lb = S.labels[reps[a]], S.labels[reps[b]]
                raise StructureError(f"support classes of {la} and {lb} have no least upper bound")


def support_of(S: LeftRegularBand) -> tuple[SupportLattice, SupportMap]:
    """``compute_support`` cached on the semigroup."""
    if "support" not in S._cache:
        S._cache["support"] = compute_support(S)
    return S._cache["support"]


def mobius(L: SupportLattice, X: int, Y: int) -> int:
    """Möbius function of the lattice; zero unless X <= Y."""
    if not L.leq[X, Y]:
        return 0
    key = (X, Y)
    memo = L._mu
    if key not in memo:
        if X == Y:
            memo[key] = 1
        else:
            memo[key] = -sum(mobius(L, X, Z) for Z in interval(L, X, Y) if Z != Y)
    return memo[key]


def mobius_matrix(L: SupportLattice) -> np.ndarray:
    k = L.size
    return np.array([[mobius(L, X, Y) for Y in range(k)] for X in range(k)], dtype=np.int64)


def interval(L: SupportLattice, Y: int, X: int) -> list[int]:
    """Elements W with Y <= W <= X, in linear-extension order."""
    if not L.leq[Y, X]:
        return []
    return np.flatnonzero(L.leq[Y] & L.leq[:, X]).tolist()


def hasse_covers(L: SupportLattice) -> set[tuple[int, int]]:
    """Pairs (X, Y) with Y covered by X."""
    k = L.size
    strict = L.leq & ~np.eye(k, dtype=bool)
    # Y < Z < X for some Z
    between = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    cov = strict & ~between
    return {(int(x), int(y)) for y, x in zip(*np.nonzero(cov))}


def lattice_semigroup(L: SupportLattice) -> LeftRegularBand:
    """The lattice as a left regular band under join, bottom as identity."""
    return LeftRegularBand(np.array(L.join), identity=L.bottom, labels=L.labels)


def hasse_dot(L: SupportLattice, name: str = "lattice") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for X in range(L.size):
        lines.append(f'  n{X} [label="{_esc(L.labels[X])}"];')
    for X, Y in sorted(hasse_covers(L), key=lambda p: (p[1], p[0])):
        lines.append(f"  n{Y} -> n{X};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _esc(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')
