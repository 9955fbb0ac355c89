"""Exact rank computations over the rationals.

Vectors are sparse mappings ``column -> rational``. They are scaled to
primitive integer vectors and reduced fraction-free: eliminating with a
pivot row multiplies through instead of dividing, and each result is
divided by the gcd of its entries to keep the numbers small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping


def primitive(vec: Mapping[int, object]) -> dict[int, int]:
    """Scale a rational vector to coprime integers (sign fixed by the first column)."""
    items = [(c, v) for c, v in vec.items() if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    ints = {c: int(v * den) for c, v in items}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = min(ints)
    if ints[lead] < 0:
        g = -g
    return {c: v // g for c, v in ints.items()}


class EchelonBasis:
    """Incrementally built row-echelon basis of a subspace of Q^n.

    Rows are stored by pivot column; every stored row has a zero entry in
    the pivot columns of the rows added before it.
    """

    def __init__(self, vectors: Iterable[Mapping[int, object]] = ()):
        self.rows: dict[int, dict[int, int]] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "EchelonBasis":
        new = EchelonBasis()
        new.rows = dict(self.rows)
        return new

    def reduce(self, vec: Mapping[int, object]) -> dict[int, int]:
        """Integer multiple of ``vec`` minus its component in the span."""
        v = primitive(vec)
        rows = self.rows
        while v:
            hit = None
            for c in sorted(v):
                if c in rows:
                    hit = c
                    break
            if hit is None:
                break
            row = rows[hit]
            p, a = row[hit], v[hit]
            # v <- p*v - a*row, fraction free
            out = {c: p * x for c, x in v.items()}
            for c, x in row.items():
                y = out.get(c, 0) - a * x
                if y:
                    out[c] = y
                else:
                    out.pop(c, None)
            v = primitive(out)
        return v

    def add(self, vec: Mapping[int, object]) -> bool:
        """Add ``vec``; return whether it was independent of the basis."""
        v = self.reduce(vec)
        if not v:
            return False
        self.rows[min(v)] = v
        return True

    def contains(self, vec: Mapping[int, object]) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[Mapping[int, object]]) -> int:
    return EchelonBasis(vectors).rank


def independent_subset(vectors: list) -> list[int]:
    """Indices of a maximal independent subfamily, chosen greedily in order."""
    basis = EchelonBasis()
    return [i for i, v in enumerate(vectors) if basis.add(v)]


def relative_rank(vectors: Iterable[Mapping[int, object]], modulo: Iterable[Mapping[int, object]]) -> int:
    """dim(span(vectors) + span(modulo)) - dim span(modulo)."""
    basis = EchelonBasis(modulo)
    base = basis.rank
    for v in vectors:
        basis.add(v)
    return basis.rank - base
