"""Exact feasibility of homogeneous sign conditions by Fourier-Motzkin elimination.

A system is a list of rows ``(a, rel)`` meaning ``<a, v> rel 0`` with
``rel`` one of ``'>'``, ``'>='`` or ``'='`` and ``a`` a tuple of Fractions.
All right-hand sides are zero, so after eliminating every variable each
surviving row reads ``0 rel 0``; the system is infeasible exactly when a
strict row survives.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Row = tuple[tuple[Fraction, ...], str]


def _normalize(coeffs):
    """Scale to primitive integers; keeps the sign so inequalities survive."""
    den = 1
    for c in coeffs:
        if c:
            den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return tuple(ints)


def _substitute(rows, eq, var):
    """Use ``eq`` (with eq[var] != 0) to eliminate ``var`` from ``rows``."""
    out = []
    p = eq[var]
    for a, rel in rows:
        c = a[var]
        if c == 0:
            out.append((a, rel))
            continue
        # p > 0 or < 0: combine as p*a - c*eq, then flip sign if p < 0 to keep direction
        new = tuple(p * ai - c * ei for ai, ei in zip(a, eq))
        if p < 0:
            new = tuple(-x for x in new)
        out.append((_normalize(new), rel))
    return out


def feasible(rows: Sequence[tuple[Sequence, str]], dim: int) -> bool:
    """Decide whether some ``v`` in Q^dim satisfies every row."""
    system = []
    for a, rel in rows:
        if rel not in (">", ">=", "="):
            raise ValueError(f"unknown relation {rel!r}")
        if len(a) != dim:
            raise ValueError("row length does not match dimension")
        system.append((_normalize(a), rel))

    for var in range(dim):
        # equalities first: one substitution removes the variable everywhere
        pivot = next((a for a, rel in system if rel == "=" and a[var] != 0), None)
        if pivot is not None:
            rest = [(a, rel) for a, rel in system if a is not pivot]
            system = _substitute(rest, pivot, var)
        else:
            pos, neg, keep = [], [], []
            for a, rel in system:
                if a[var] > 0:
                    pos.append((a, rel))
                elif a[var] < 0:
                    neg.append((a, rel))
                else:
                    keep.append((a, rel))
            for ap, rp in pos:
                for an, rn in neg:
                    cp, cn = ap[var], -an[var]
                    new = tuple(cn * x + cp * y for x, y in zip(ap, an))
                    rel = ">" if ">" in (rp, rn) else ">="
                    keep.append((_normalize(new), rel))
            system = keep
        system = _dedupe(system)
        if any(rel == ">" and not any(a) for a, rel in system):
            return False
    return not any(rel == ">" for a, rel in system)


def _dedupe(system):
    rows = set(system)
    if any(rel == ">" and not any(a) for a, rel in rows):
        return [((0,) * len(next(iter(rows))[0]), ">")]
    # trivial rows carry no information; a strict row subsumes its weak twin
    return sorted((a, rel) for a, rel in rows
                  if any(a) and not (rel == ">=" and (a, ">") in rows))


def cell_nonempty(normals: Sequence[Sequence[Fraction]], signs: Sequence[int]) -> bool:
    """Whether ``{v : sign(<h_i, v>) = signs[i]}`` is nonempty."""
    dim = len(normals[0]) if normals else 0
    rows = []
    for h, s in zip(normals, signs):
        if s > 0:
            rows.append((tuple(h), ">"))
        elif s < 0:
            rows.append((tuple(-x for x in h), ">"))
        else:
            rows.append((tuple(h), "="))
    return feasible(rows, dim)
