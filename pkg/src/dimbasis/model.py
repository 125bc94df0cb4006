"""Domain model: dimension systems, quantities, dimensional matrices, invariants.

A dimensional matrix records, column by column, the integer exponents of each
quantity over an ordered list of base dimensions. An invariant is a power
product of the quantities whose value does not change under rescaling of the
base units; equivalently, an integer vector in the kernel of the matrix.

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from . import linalg

# Names may carry parentheses, slashes, dots, primes and signs so that labels
# like "S(t)" or "dP/l" stay legal; whitespace and commas are not allowed.
QUANTITY_NAME_RE = re.compile(r"[A-Za-z0-9_()./+'-]+")
DIMENSION_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


@dataclass(frozen=True)
class DimensionSystem:
    """Ordered base dimensions; the order fixes the row order of a matrix."""

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("a dimension system needs at least one dimension")
        if len(set(self.names)) != len(self.names):
            raise ValueError("dimension names must be unique")
        for name in self.names:
            if not DIMENSION_NAME_RE.fullmatch(name):
                raise ValueError(f"invalid dimension name: {name!r}")

    @property
    def size(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class Quantity:
    """A named quantity with one integer exponent per base dimension.

    ``display`` is an optional LaTeX string used only for rendering; the
    engine never parses it.
    """

    name: str
    dims: tuple[int, ...]
    display: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if not QUANTITY_NAME_RE.fullmatch(self.name):
            raise ValueError(f"invalid quantity name: {self.name!r}")
        for e in self.dims:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError(f"quantity {self.name!r}: non-integer exponent {e!r}")


@dataclass(frozen=True)
class DimensionalMatrix:
    """A validated dimensional matrix with its rank cached.

    Build instances through :func:`build_matrix`.
    """

    system: DimensionSystem
    quantities: tuple[Quantity, ...]
    rank: int

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(q.name for q in self.quantities)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """The matrix itself: one row per dimension, one column per quantity."""
        m = self.system.size
        return tuple(tuple(q.dims[i] for q in self.quantities) for i in range(m))

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(q.dims for q in self.quantities)

    def index_of(self, name: str) -> int:
        for j, q in enumerate(self.quantities):
            if q.name == name:
                return j
        raise KeyError(name)


def build_matrix(system: DimensionSystem, quantities: Sequence[Quantity]) -> DimensionalMatrix:
    """Validate quantities against the system and cache the rank."""
    qs = tuple(quantities)
    if not qs:
        raise ValueError("a dimensional matrix needs at least one quantity")
    seen: set[str] = set()
    for q in qs:
        if q.name in seen:
            raise ValueError(f"duplicate quantity name: {q.name!r}")
        seen.add(q.name)
        if len(q.dims) != system.size:
            raise ValueError(
                f"quantity {q.name!r} has {len(q.dims)} dimension exponents, "
                f"expected {system.size}"
            )
    rows = tuple(tuple(q.dims[i] for q in qs) for i in range(system.size))
    r = linalg.rank(rows)
    return DimensionalMatrix(system=system, quantities=qs, rank=r)


@dataclass(frozen=True)
class Invariant:
    """Exponent vector of a minimal invariant power product.

    Entries are coprime integers over the full quantity order (zeros where a
    quantity does not participate). Both orientations of a pair are valid
    Invariants; see :class:`InvariantPair` for the canonical representative.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        nonzero = [abs(e) for e in self.exponents if e]
        if not nonzero:
            raise ValueError("an invariant cannot have an all-zero exponent vector")
        if math.gcd(*nonzero) != 1:
            raise ValueError(f"exponents are not relatively prime: {self.exponents}")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j for j, e in enumerate(self.exponents) if e)

    def flipped(self) -> "Invariant":
        return Invariant(tuple(-e for e in self.exponents))

    def canonical(self) -> "Invariant":
        """The orientation with a positive first nonzero exponent."""
        first = next(e for e in self.exponents if e)
        return self if first > 0 else self.flipped()


@dataclass(frozen=True)
class InvariantPair:
    """An invariant together with its sign flip, stored canonically.

    Two pairs are equal exactly when their canonical exponent vectors are.
    Either orientation may be passed in; it is canonicalized on construction.
    """

    canonical: Invariant

    def __post_init__(self):
        object.__setattr__(self, "canonical", self.canonical.canonical())

    @classmethod
    def of(cls, invariant: Invariant) -> "InvariantPair":
        return cls(invariant)

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.canonical.exponents


def invariant_support(invariant: Invariant) -> frozenset[int]:
    """Indices of the quantities occurring in the invariant."""
    return invariant.support


def evaluate_invariant(invariant: Invariant, values: Sequence[float]) -> float:
    """Numerical value of the power product at the given quantity values.

    Floating point on purpose: this is for property checks and display, the
    exact engine never depends on it.
    """
    if len(values) != len(invariant.exponents):
        raise ValueError(
            f"expected {len(invariant.exponents)} values, got {len(values)}"
        )
    for v in values:
        if not v > 0:
            raise ValueError(f"quantity values must be strictly positive, got {v!r}")
    result = 1.0
    for v, e in zip(values, invariant.exponents):
        if e:
            result *= float(v) ** e
    return result
