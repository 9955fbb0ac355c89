"""Finite left regular bands stored as dense multiplication tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels


class LRBError(Exception):
    """Base class for errors raised by this package."""


class InvalidTableError(LRBError, ValueError):
    """The table is malformed or fails the band axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SizeGuardError(LRBError, ValueError):
    """A constructor was asked for something too large to build at desk scale."""


@dataclass(frozen=True, eq=False)
class LeftRegularBand:
    """A finite semigroup given by its multiplication table.

    ``mult[a, b]`` is the index of the product ``ab``. When an identity is
    present it sits at index 0. Instances are immutable; derived data is
    cached on first use.
    """

    mult: np.ndarray
    identity: int | None = 0
    labels: tuple[str, ...] = ()
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        mult = np.ascontiguousarray(np.asarray(self.mult, dtype=np.int64))
        if mult.ndim != 2 or mult.shape[0] != mult.shape[1] or mult.shape[0] == 0:
            raise InvalidTableError(f"multiplication table must be a nonempty square, got shape {mult.shape}")
        n = mult.shape[0]
        if mult.min() < 0 or mult.max() >= n:
            raise InvalidTableError("table entries must be element indices in range")
        mult.setflags(write=False)
        object.__setattr__(self, "mult", mult)
        labels = tuple(str(s) for s in self.labels) if self.labels else tuple(str(i) for i in range(n))
        if len(labels) != n:
            raise InvalidTableError(f"expected {n} labels, got {len(labels)}")
        object.__setattr__(self, "labels", labels)
        if self.identity is not None and not 0 <= self.identity < n:
            raise InvalidTableError(f"identity index {self.identity} out of range")

    @property
    def size(self) -> int:
        return self.mult.shape[0]

    def __len__(self):
        return self.size

    @cached_property
    def table(self) -> list[list[int]]:
        """The table as nested lists, for tight pure-Python loops."""
        return self.mult.tolist()

    def product(self, a: int, b: int) -> int:
        return product(self, a, b)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "identity": self.identity,
            "labels": list(self.labels),
            "mult": self.table,
        }

    @classmethod
    def from_json(cls, data: dict) -> "LeftRegularBand":
        try:
            mult = data["mult"]
            size = int(data["size"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidTableError(f"missing or bad field in table: {exc}") from None
        if len(mult) != size or any(len(row) != size for row in mult):
            raise InvalidTableError(f"table is not {size}x{size}")
        identity = data.get("identity")
        return cls(np.array(mult, dtype=np.int64), identity=identity, labels=tuple(data.get("labels") or ()))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def product(S: LeftRegularBand, a: int, b: int) -> int:
    n = S.size
    if not (0 <= a < n and 0 <= b < n):
        raise IndexError(f"element index out of range: ({a}, {b}) for size {n}")
    return int(S.mult[a, b])


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def lines(self) -> list[str]:
        if self.ok:
            return ["ok: left regular band with identity"]
        return [f"{v.axiom}: {v.message}" for v in self.violations]


def validate_lrb(S: LeftRegularBand) -> ValidationReport:
    """Check associativity, x^2 = x, xyx = xy and the identity law.

    Each violated axiom is reported once, with the first witness found.
    """
    m = S.mult
    n = S.size
    lab = S.labels
    report = ValidationReport()
    a, b, c = _kernels.assoc_witness(m)
    if a >= 0:
        report.violations.append(Violation(
            "associativity", (a, b, c),
            f"({lab[a]}{lab[b]}){lab[c]} != {lab[a]}({lab[b]}{lab[c]}) at ({lab[a]}, {lab[b]}, {lab[c]})"))
    idx = np.arange(n)
    bad = np.flatnonzero(m[idx, idx] != idx)
    if bad.size:
        x = int(bad[0])
        report.violations.append(Violation("LRB1", (x,), f"{lab[x]}*{lab[x]} = {lab[m[x, x]]} != {lab[x]}"))
    # (xy)x == xy for every pair
    xyx = m[m, idx[:, None]]
    bad = np.argwhere(xyx != m)
    if bad.size:
        x, y = (int(v) for v in bad[0])
        report.violations.append(Violation(
            "LRB2", (x, y), f"{lab[x]}{lab[y]}{lab[x]} != {lab[x]}{lab[y]} at ({lab[x]}, {lab[y]})"))
    e = S.identity
    if e is None:
        report.violations.append(Violation("identity", (), "no identity element declared"))
    else:
        bad = np.flatnonzero((m[e] != idx) | (m[:, e] != idx))
        if bad.size:
            x = int(bad[0])
            report.violations.append(Violation(
                "identity", (e, x), f"declared identity {lab[e]} fails at {lab[x]}"))
    return report


def natural_order(S: LeftRegularBand) -> np.ndarray:
    """Boolean matrix ``le`` with ``le[y, x]`` true iff ``y <= x``, i.e. ``yx = x``."""
    key = "natural_order"
    if key not in S._cache:
        le = S.mult == np.arange(S.size)[None, :]
        le.setflags(write=False)
        S._cache[key] = le
    return S._cache[key]


def find_identity(mult: np.ndarray) -> int | None:
    n = mult.shape[0]
    idx = np.arange(n)
    hits = np.flatnonzero(np.all(mult == idx[None, :], axis=1) & np.all(mult == idx[:, None], axis=0))
    return int(hits[0]) if hits.size else None


@dataclass(frozen=True, eq=False)
class SubBand:
    """A sub-semigroup together with its embedding into the parent."""

    band: LeftRegularBand
    embedding: np.ndarray  # embedding[i] = index in the parent

    @property
    def has_identity(self) -> bool:
        return self.band.identity is not None


def sub_lrb(S: LeftRegularBand, seed: Iterable[int]) -> SubBand:
    """Close ``seed`` under the product and relabel.

    Elements are numbered in first-seen order from the sorted seed, except
    that a two-sided identity of the closure, if any, is moved to index 0.
    """
    seed = sorted({int(s) for s in seed})
    if not seed:
        raise ValueError("seed must be nonempty")
    if seed[0] < 0 or seed[-1] >= S.size:
        raise IndexError("seed element out of range")
    order = _kernels.closure(S.mult, np.asarray(seed, dtype=np.int64))
    sub_mult = S.mult[np.ix_(order, order)]
    inverse = np.full(S.size, -1, dtype=np.int64)
    inverse[order] = np.arange(len(order))
    local = inverse[sub_mult]
    ident = find_identity(local)
    if ident is not None and ident != 0:
        perm = np.concatenate(([ident], np.delete(np.arange(len(order)), ident)))
        order = order[perm]
        inverse[order] = np.arange(len(order))
        local = inverse[S.mult[np.ix_(order, order)]]
        ident = 0
    band = LeftRegularBand(local, identity=ident, labels=tuple(S.labels[i] for i in order))
    order.setflags(write=False)
    return SubBand(band, order)


def from_table(mult: Sequence[Sequence[int]], labels: Sequence[str] = (), identity: int | None = 0) -> LeftRegularBand:
    return LeftRegularBand(np.asarray(mult, dtype=np.int64), identity=identity, labels=tuple(labels))
