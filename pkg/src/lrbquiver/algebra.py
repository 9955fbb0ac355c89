"""The semigroup algebra kS over the rationals.

Elements are sparse: a mapping from element index to a nonzero rational.
Integral coefficients are kept as ``int``; anything else is a ``Fraction``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

import numpy as np

from .lattice import SupportLattice, mobius, support_of
from .linalg import EchelonBasis, rank
from .lrb import LeftRegularBand, LRBError

Scalar = Union[int, Fraction]


def _canon(q):
    if isinstance(q, Fraction) and q.denominator == 1:
        return int(q.numerator)
    return q


class AlgebraElement(Mapping[int, Scalar]):
    """Finitely supported rational combination of semigroup elements."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c = {}
        for k, v in items:
            v = _canon(Fraction(v) if isinstance(v, (float, str)) else v)
            if v:
                c[int(k)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        # c must already be canonical with no zeros
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, s: int) -> "AlgebraElement":
        return cls._raw({int(s): 1})

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls._raw({})

    def __getitem__(self, k):
        return self._c[k]

    def get(self, k, default=0):
        return self._c.get(k, default)

    def __iter__(self):
        return iter(sorted(self._c))

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other):
        out = dict(self._c)
        for k, v in other._c.items():
            y = _canon(out.get(k, 0) + v)
            if y:
                out[k] = y
            else:
                out.pop(k, None)
        return AlgebraElement._raw(out)

    def __neg__(self):
        return AlgebraElement._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q: Scalar) -> "AlgebraElement":
        q = _canon(Fraction(q) if isinstance(q, (float, str)) else q)
        if not q:
            return AlgebraElement.zero()
        return AlgebraElement._raw({k: _canon(v * q) for k, v in self._c.items()})

    def __rmul__(self, q):
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    def __repr__(self):
        return f"AlgebraElement({dict(sorted(self._c.items()))})"

    def format(self, labels: Sequence[str]) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            v = self._c[k]
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            term = labels[k] if mag == 1 else f"{mag}*{labels[k]}"
            parts.append((sign, term))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])


def element(S: LeftRegularBand, terms) -> AlgebraElement:
    """Build an element from ``{label_or_index: coeff}``."""
    out = {}
    for k, v in dict(terms).items():
        i = S.index(k) if isinstance(k, str) else int(k)
        out[i] = out.get(i, 0) + v
    return AlgebraElement(out)


def _accumulate(acc, k, v):
    y = acc.get(k, 0) + v
    if y:
        acc[k] = y
    else:
        del acc[k]


def _finish(acc):
    return AlgebraElement._raw({k: _canon(v) for k, v in acc.items() if v})


def multiply(S: LeftRegularBand, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the semigroup product."""
    table = S.table
    acc = {}
    vi = list(v._c.items())
    for a, ca in u._c.items():
        row = table[a]
        for b, cb in vi:
            k = row[b]
            acc[k] = acc.get(k, 0) + ca * cb
    return _finish(acc)


def left_basis_mul(S: LeftRegularBand, s: int, v: AlgebraElement) -> AlgebraElement:
    """The product ``s * v`` for a single semigroup element ``s``."""
    row = S.table[s]
    acc = {}
    for b, cb in v._c.items():
        k = row[b]
        acc[k] = acc.get(k, 0) + cb
    return _finish(acc)


def right_basis_mul(S: LeftRegularBand, v: AlgebraElement, s: int) -> AlgebraElement:
    table = S.table
    acc = {}
    for a, ca in v._c.items():
        k = table[a][s]
        acc[k] = acc.get(k, 0) + ca
    return _finish(acc)


def one(S: LeftRegularBand) -> AlgebraElement:
    if S.identity is None:
        raise LRBError("semigroup has no identity")
    return AlgebraElement.basis(S.identity)


def character(S: LeftRegularBand, X: int, u: AlgebraElement, support=None) -> Scalar:
    """chi_X(u): sum of the coefficients on elements of support <= X."""
    L, supp = support or support_of(S)
    below = L.leq[:, X]
    return _canon(sum(v for k, v in u._c.items() if below[supp.supp[k]]))


def linear_support(S: LeftRegularBand, u: AlgebraElement, support=None) -> AlgebraElement:
    """Image of ``u`` in kL under the linearised support map."""
    L, supp = support or support_of(S)
    acc = {}
    for k, v in u._c.items():
        X = int(supp.supp[k])
        acc[X] = acc.get(X, 0) + v
    return _finish(acc)


def lattice_idempotents(L: SupportLattice) -> list[AlgebraElement]:
    """E_X = sum over Y >= X of mu(X, Y) Y, in kL with product join."""
    out = []
    for X in range(L.size):
        out.append(AlgebraElement({Y: mobius(L, X, Y) for Y in np.flatnonzero(L.leq[X]).tolist()}))
    return out


# ---------------------------------------------------------------------------
# the idempotents e_X

Representative = Union[int, Sequence[tuple[int, Scalar]]]


@dataclass(frozen=True, eq=False)
class IdempotentSystem:
    """The family e_X together with the representatives used to build it."""

    idempotents: tuple[AlgebraElement, ...]
    representatives: tuple[AlgebraElement, ...]
    adapted_to: int | None = None

    def __getitem__(self, X):
        return self.idempotents[X]

    def __len__(self):
        return len(self.idempotents)

    def __iter__(self):
        return iter(self.idempotents)


def smallest_representatives(S: LeftRegularBand, support=None) -> list[int]:
    _, supp = support or support_of(S)
    return [m[0] for m in supp.members]


def largest_representatives(S: LeftRegularBand, support=None) -> list[int]:
    _, supp = support or support_of(S)
    return [m[-1] for m in supp.members]


def uniform_representatives(S: LeftRegularBand, support=None) -> list[list[tuple[int, Fraction]]]:
    """Equal weights over each whole support class."""
    _, supp = support or support_of(S)
    return [[(x, Fraction(1, len(m))) for x in m] for m in supp.members]


def adapted_representatives(S: LeftRegularBand, y: int, support=None) -> list[int]:
    """Smallest representatives, with x replaced by yx whenever supp(x) >= supp(y)."""
    L, supp = support or support_of(S)
    Y = supp[y]
    reps = smallest_representatives(S, (L, supp))
    return [S.table[y][x] if L.leq[Y, X] else x for X, x in enumerate(reps)]


def _as_rep(S, supp, X, rep) -> AlgebraElement:
    if isinstance(rep, (int, np.integer)):
        terms = [(int(rep), 1)]
    else:
        terms = [(int(x), lam) for x, lam in rep]
    u = AlgebraElement(dict(_merge(terms)))
    bad = [x for x in u if supp.supp[x] != X]
    if bad or not u:
        raise ValueError(f"representative for lattice element {X} has elements of the wrong support: {bad}")
    if _canon(sum(u.values())) != 1:
        raise ValueError(f"representative weights for lattice element {X} do not sum to 1")
    return u


def _merge(terms):
    acc = defaultdict(int)
    for x, lam in terms:
        acc[x] += lam
    return acc


def semigroup_idempotents(
    S: LeftRegularBand,
    reps: Sequence[Representative] | Callable | str | None = None,
    support=None,
    adapted_to: int | None = None,
) -> IdempotentSystem:
    """e_X = x - sum_{Y > X} x e_Y, computed from the top of the lattice down.

    ``reps`` picks the representative of each support class: ``None`` or
    ``"smallest"`` for the smallest element index, ``"largest"``,
    ``"uniform"`` for equal weights over the class, an explicit list (an
    element index or a weighted list of ``(index, weight)`` pairs per lattice
    element), or a callable ``(S, support) -> list``.
    """
    if S.identity is None:
        raise LRBError("idempotent construction needs an identity element")
    L, supp = support or support_of(S)
    if adapted_to is not None and reps is None:
        reps = adapted_representatives(S, adapted_to, (L, supp))
    if reps is None or reps == "smallest":
        reps = smallest_representatives(S, (L, supp))
    elif reps == "largest":
        reps = largest_representatives(S, (L, supp))
    elif reps == "uniform":
        reps = uniform_representatives(S, (L, supp))
    elif callable(reps):
        reps = reps(S, (L, supp))
    if len(reps) != L.size:
        raise ValueError("need one representative per lattice element")
    rep_elems = [_as_rep(S, supp, X, r) for X, r in enumerate(reps)]

    k = L.size
    e: list[AlgebraElement | None] = [None] * k
    for X in reversed(range(k)):
        x = rep_elems[X]
        acc = dict(x._c)
        above = [Y for Y in np.flatnonzero(L.leq[X]).tolist() if Y != X]
        for Y in above:
            for s, cs in x._c.items():
                row = S.table[s]
                for t, ct in e[Y]._c.items():
                    j = row[t]
                    acc[j] = acc.get(j, 0) - cs * ct
        e[X] = _finish(acc)
    return IdempotentSystem(tuple(e), tuple(rep_elems), adapted_to)


# ---------------------------------------------------------------------------
# verification


@dataclass
class CheckReport:
    """Named pass/fail checks; each failure carries a witness description."""

    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, bool(passed), detail))

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for name, passed, detail in other.checks:
            self.checks.append((prefix + name, passed, detail))

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.checks)

    def __bool__(self):
        return self.ok

    @property
    def failures(self):
        return [c for c in self.checks if not c[1]]

    def lines(self) -> list[str]:
        return [f"{'PASS' if p else 'FAIL'} {n}" + (f": {d}" if d and not p else "") for n, p, d in self.checks]


def verify_cspoi(S: LeftRegularBand, sys: IdempotentSystem, support=None) -> CheckReport:
    """Exact checks that the e_X form a complete system of primitive orthogonal idempotents."""
    L, supp = support or support_of(S)
    lab = L.labels
    e = sys.idempotents
    k = L.size
    report = CheckReport()

    total = AlgebraElement.zero()
    for ex in e:
        total = total + ex
    report.record("complete", total == one(S), f"sum of e_X = {total.format(S.labels)}")

    bad = [X for X in range(k) if multiply(S, e[X], e[X]) != e[X]]
    report.record("idempotent", not bad, f"e_X^2 != e_X for X in {[lab[X] for X in bad]}")

    bad = []
    for X in range(k):
        for Y in range(k):
            if X != Y and multiply(S, e[X], e[Y]):
                bad.append((lab[X], lab[Y]))
    report.record("orthogonal", not bad, f"e_X e_Y != 0 for {bad[:5]}")

    E = lattice_idempotents(L)
    bad = [X for X in range(k) if linear_support(S, e[X], (L, supp)) != E[X]]
    report.record("lifts", not bad, f"supp(e_X) != E_X for X in {[lab[X] for X in bad]}")

    bad = []
    for X in range(k):
        for w in range(S.size):
            if not L.leq[supp.supp[w], X] and left_basis_mul(S, w, e[X]):
                bad.append((S.labels[w], lab[X]))
    report.record("annihilation", not bad, f"w e_X != 0 for (w, X) in {bad[:5]}")
    return report


def idempotent_basis(S: LeftRegularBand, sys: IdempotentSystem, support=None) -> list[AlgebraElement]:
    """The family x e_supp(x), one member per element of S."""
    _, supp = support or support_of(S)
    return [left_basis_mul(S, x, sys[supp[x]]) for x in range(S.size)]


def span_rank(vectors: Iterable[AlgebraElement]) -> int:
    return rank(v._c for v in vectors)


def projective_checks(S: LeftRegularBand, sys: IdempotentSystem, X: int, support=None) -> CheckReport:
    """dim kS e_X = #S_X and x -> x e_X intertwines the dot action on kS_X."""
    L, supp = support or support_of(S)
    report = CheckReport()
    eX = sys[X]
    dim = span_rank(left_basis_mul(S, s, eX) for s in range(S.size))
    members = supp.members[X]
    report.record(f"dim kS e_{L.labels[X]}", dim == len(members), f"{dim} != #S_X = {len(members)}")

    image = {x: left_basis_mul(S, x, eX) for x in members}
    bad = []
    for y in range(S.size):
        for x in members:
            lhs = image[S.table[y][x]] if L.leq[supp.supp[y], X] else AlgebraElement.zero()
            if lhs != left_basis_mul(S, y, image[x]):
                bad.append((S.labels[y], S.labels[x]))
    report.record(f"equivariant e_{L.labels[X]}", not bad, f"phi(y.x) != y phi(x) for {bad[:5]}")
    return report


# ---------------------------------------------------------------------------
# radical


def radical_basis(S: LeftRegularBand, support=None) -> list[AlgebraElement]:
    """Basis of J = ker(supp): differences x - x0 within each support class."""
    key = "radical"
    if key not in S._cache:
        _, supp = support or support_of(S)
        S._cache[key] = [AlgebraElement._raw({x: 1, m[0]: -1}) for m in supp.members for x in m[1:]]
    return S._cache[key]


def radical_square_basis(S: LeftRegularBand, support=None) -> list[AlgebraElement]:
    """Basis of J^2 extracted from all pairwise products of the J basis."""
    key = "radical_square"
    if key not in S._cache:
        J = radical_basis(S, support)
        basis = EchelonBasis()
        out = []
        seen = set()
        for a in J:
            for b in J:
                p = multiply(S, a, b)
                if p and p not in seen:
                    seen.add(p)
                    if basis.add(p._c):
                        out.append(p)
        S._cache[key] = out
    return S._cache[key]


def radical_power_vanishes(S: LeftRegularBand, power: int, support=None) -> bool:
    """Whether every product of ``power`` radical basis elements is zero."""
    J = radical_basis(S, support)
    current = list(J)
    for _ in range(power - 1):
        nxt = {multiply(S, a, b) for a in current for b in J}
        nxt.discard(AlgebraElement.zero())
        basis = EchelonBasis()
        current = [v for v in nxt if basis.add(v._c)]
        if not current:
            return True
    return not current


# ---------------------------------------------------------------------------
# subalgebras k(yS) and kS_{<=Y}


def principal_right_ideal(S: LeftRegularBand, y: int) -> list[int]:
    """yS as sorted element indices."""
    return sorted(set(S.table[y]))


def truncate(S: LeftRegularBand, u: AlgebraElement, Y: int, support=None) -> AlgebraElement:
    """Projection of ``u`` onto the span of elements of support <= Y."""
    L, supp = support or support_of(S)
    below = L.leq[:, Y]
    return AlgebraElement._raw({k: v for k, v in u._c.items() if below[supp.supp[k]]})


def subalgebra_checks(S: LeftRegularBand, sys: IdempotentSystem, y: int, Y: int | None = None, support=None) -> CheckReport:
    """Idempotents of k(yS) and kS_{<=Y} obtained from a system adapted to ``y``.

    ``Y`` defaults to supp(y).
    """
    from .lrb import sub_lrb

    L, supp = support or support_of(S)
    report = CheckReport()
    if sys.adapted_to != y:
        report.record("adapted system", False, f"system adapted to {sys.adapted_to}, not to {S.labels[y]}")
        return report
    Yy = supp[y]
    if Y is None:
        Y = Yy
    upper = [X for X in range(L.size) if L.leq[Yy, X]]
    f = AlgebraElement.zero()
    for X in upper:
        f = f + sys[X]
    report.record("y = sum e_X over X >= supp(y)", f == AlgebraElement.basis(y), f.format(S.labels))
    ideal = principal_right_ideal(S, y)
    dim = span_rank(right_basis_mul(S, f, s) for s in range(S.size))
    report.record("dim (sum e_X) kS = #yS", dim == len(ideal), f"{dim} != {len(ideal)}")

    # {e_X : X >= supp(y)} inside k(yS)
    sub = sub_lrb(S, ideal)
    local = {int(g): i for i, g in enumerate(sub.embedding)}
    pulled = [_pull(sys[X], local) for X in upper]
    if any(p is None for p in pulled):
        report.record("e_X in k(yS)", False, "some e_X with X >= supp(y) leaves yS")
    else:
        sub_sys = _subsystem(sub.band, pulled)
        report.extend(verify_cspoi(sub.band, sub_sys), "k(yS) ")

    # truncations inside kS_{<=Y}
    lower_elems = [s for s in range(S.size) if L.leq[supp.supp[s], Y]]
    sub = sub_lrb(S, lower_elems)
    local = {int(g): i for i, g in enumerate(sub.embedding)}
    truncated = [_pull(truncate(S, sys[X], Y, (L, supp)), local) for X in range(L.size) if L.leq[X, Y]]
    sub_sys = _subsystem(sub.band, truncated)
    report.extend(verify_cspoi(sub.band, sub_sys), f"kS<={L.labels[Y]} ")
    return report


def _pull(u, local):
    if any(k not in local for k in u._c):
        return None
    return AlgebraElement._raw({local[k]: v for k, v in u._c.items()})


def _subsystem(band, elements):
    """Order a family of idempotents of a sub-band by the sub-band's own lattice."""
    Lb, suppb = support_of(band)
    by_top = {}
    for u in elements:
        top = linear_support(band, u, (Lb, suppb))
        # E_X has leading term X: the unique minimal support with nonzero coefficient
        X = min(top)
        by_top[X] = u
    idem = tuple(by_top.get(X, AlgebraElement.zero()) for X in range(Lb.size))
    return IdempotentSystem(idem, ())
