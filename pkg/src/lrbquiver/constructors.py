"""Builders for the standard families of left regular bands."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .elimination import cell_nonempty
from .lrb import InvalidTableError, LeftRegularBand, SizeGuardError, validate_lrb

FREE_MAX = 6
BOOLEAN_MAX = 8
BRAID_MAX = 5
HYPERPLANES_MAX = 10

SIGN_CHARS = {0: "0", 1: "+", -1: "-"}
# 0 sorts first so the identity face lands at index 0
_SIGN_ORDER = (0, 1, -1)


def _guard(name, n, lo, hi, unsafe):
    if n < lo:
        raise ValueError(f"{name} needs n >= {lo}, got {n}")
    if n > hi and not unsafe:
        raise SizeGuardError(f"{name}({n}) exceeds the size guard {hi} (override with unsafe=True or --unsafe-size)")


def _from_elements(elements, product, labels) -> LeftRegularBand:
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mult = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        row = mult[i]
        for j, b in enumerate(elements):
            row[j] = index[product(a, b)]
    return LeftRegularBand(mult, identity=0, labels=tuple(labels))


def _letters(n):
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"x{i}" for i in range(n)]


def free_lrb(n: int, unsafe: bool = False) -> LeftRegularBand:
    """Free left regular band with identity on ``n`` letters.

    Elements are repetition-free words, ordered by length and then
    lexicographically; the empty word (labelled ``1``) is the identity.
    """
    _guard("free_lrb", n, 1, FREE_MAX, unsafe)
    words = [w for k in range(n + 1) for w in itertools.permutations(range(n), k)]

    def concat(u, v):
        seen = set(u)
        return u + tuple(c for c in v if c not in seen)

    letters = _letters(n)
    labels = ["".join(letters[c] for c in w) or "1" for w in words]
    return _from_elements(words, concat, labels)


def sign_product(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    if len(x) != len(y):
        raise ValueError(f"sign vectors differ in length: {len(x)} != {len(y)}")
    return tuple(a if a else b for a, b in zip(x, y))


def sign_label(x: Sequence[int]) -> str:
    return "".join(SIGN_CHARS[s] for s in x)


def _sign_key(x):
    return tuple(_SIGN_ORDER.index(s) for s in x)


def face_semigroup(faces: Sequence[Sequence[int]]) -> LeftRegularBand:
    """Face semigroup on a product-closed set of sign vectors containing 0."""
    faces = sorted({tuple(f) for f in faces}, key=_sign_key)
    if not faces or any(faces[0]):
        raise InvalidTableError("face set must contain the zero sign vector")
    return _from_elements(faces, sign_product, [sign_label(f) for f in faces])


def boolean_arrangement(n: int, unsafe: bool = False) -> LeftRegularBand:
    """Faces of the coordinate arrangement in R^n: all 3^n sign vectors."""
    _guard("boolean_arrangement", n, 1, BOOLEAN_MAX, unsafe)
    return face_semigroup(itertools.product((0, 1, -1), repeat=n))


def ordered_set_partitions(n: int):
    """All ordered set partitions of {1..n}, fewest blocks first."""
    ground = tuple(range(1, n + 1))
    out = []
    for k in range(1, n + 1):
        # assign each element a block number, keep surjective assignments
        for blocks in itertools.product(range(k), repeat=n):
            if len(set(blocks)) != k:
                continue
            out.append(tuple(frozenset(i for i, b in zip(ground, blocks) if b == j) for j in range(k)))
    out.sort(key=lambda p: (len(p), [sorted(b) for b in p]))
    return out


def compose_partitions(x, y):
    """Refine ``x`` by ``y``: blocks B_i & C_j in lexicographic (i, j) order."""
    return tuple(b & c for b in x for c in y if b & c)


def _partition_label(p):
    return "|".join("".join(str(i) for i in sorted(b)) for b in p)


def braid_arrangement(n: int, unsafe: bool = False) -> LeftRegularBand:
    """Faces of the braid arrangement x_i = x_j as ordered set partitions.

    The first block holds the smallest coordinates; the one-block partition
    is the identity.
    """
    _guard("braid_arrangement", n, 2, BRAID_MAX, unsafe)
    parts = ordered_set_partitions(n)
    return _from_elements(parts, compose_partitions, [_partition_label(p) for p in parts])


def partition_signs(p, n):
    """Sign vector of an ordered set partition on the normals e_i - e_j, i < j."""
    block = {i: k for k, b in enumerate(p) for i in b}
    signs = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        d = block[i] - block[j]
        signs.append((d > 0) - (d < 0))
    return tuple(signs)


def braid_normals(n: int) -> list[list[Fraction]]:
    rows = []
    for i, j in itertools.combinations(range(n), 2):
        r = [Fraction(0)] * n
        r[i], r[j] = Fraction(1), Fraction(-1)
        rows.append(r)
    return rows


def _parse_rational(v) -> Fraction:
    try:
        return Fraction(v) if not isinstance(v, float) else Fraction(str(v))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidTableError(f"bad rational {v!r}: {exc}") from None


def check_normals(normals) -> list[tuple[Fraction, ...]]:
    rows = [tuple(_parse_rational(v) for v in row) for row in normals]
    if not rows:
        raise InvalidTableError("arrangement needs at least one hyperplane")
    dim = len(rows[0])
    if dim == 0 or any(len(r) != dim for r in rows):
        raise InvalidTableError("normals must all have the same positive length")
    if any(not any(r) for r in rows):
        raise InvalidTableError("zero normal vector")
    if len(set(rows)) != len(rows):
        raise InvalidTableError("duplicate normal vector")
    return rows


def arrangement_faces(normals, unsafe: bool = False) -> LeftRegularBand:
    """Face semigroup of the central arrangement with the given normals.

    Sign vectors are decided exactly by Fourier-Motzkin elimination.
    Candidates are generated hyperplane by hyperplane and a prefix whose
    cell is already empty is not extended, which enumerates the same set as
    testing all 3^m vectors.
    """
    rows = check_normals(normals)
    m = len(rows)
    if m > HYPERPLANES_MAX and not unsafe:
        raise SizeGuardError(f"{m} hyperplanes exceeds the guard {HYPERPLANES_MAX}")
    faces = [()]
    for k in range(m):
        faces = [f + (s,) for f in faces for s in _SIGN_ORDER
                 if cell_nonempty(rows[: k + 1], f + (s,))]
    return face_semigroup(faces)


def load_arrangement(path) -> list[tuple[Fraction, ...]]:
    data = _read_json(path)
    try:
        normals = data["normals"]
    except (KeyError, TypeError):
        raise InvalidTableError("arrangement file needs a 'normals' field") from None
    rows = check_normals(normals)
    dim = data.get("dim")
    if dim is not None and int(dim) != len(rows[0]):
        raise InvalidTableError(f"dim {dim} does not match normal length {len(rows[0])}")
    return rows


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidTableError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidTableError(f"{path} is not valid JSON: {exc}") from None


def read_table(path) -> LeftRegularBand:
    """Parse a table file without checking the axioms."""
    return LeftRegularBand.from_json(_read_json(path))


def load_table(path) -> LeftRegularBand:
    """Parse a table file and reject it unless it is an LRB with identity."""
    S = read_table(path)
    report = validate_lrb(S)
    if not report.ok:
        raise InvalidTableError("; ".join(report.lines()), report)
    return S


def save_table(S: LeftRegularBand, path) -> None:
    Path(path).write_text(json.dumps(S.to_json(), indent=None) + "\n")
