"""Enumeration of basis sets, circuit sets and minimal-invariant bases.

Terminology, with the quantity columns of a dimensional matrix as ground set:

* basis set: a maximal independent set of columns (size = rank). These are
  the admissible "repeating variable" choices.
* circuit set: a minimal dependent set; every proper subset is independent.
  A column subset is a circuit exactly when its rank is one less than its
  size and the (then one-dimensional) kernel has no zero entry.
* circuit invariant: the primitive kernel vector supported on a circuit set,
  unique up to sign, stored as an :class:`~dimbasis.model.InvariantPair`.
* circuit basis: all circuit invariant pairs of the matrix.
* unified basis: the union over all basis sets of their reduced invariants,
  deduplicated at pair level.

Enumeration is exhaustive over column subsets and therefore intended for
desk-scale matrices; inputs are capped by ``max_n``. All outputs are in
deterministic lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from . import linalg
from .errors import DEFAULT_MAX_N, SizeLimitError
from .model import DimensionalMatrix, Invariant, InvariantPair


@dataclass(frozen=True)
class BasisSet:
    """Column indices of a maximal independent set of quantities."""

    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(self.indices)))
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("basis set indices must be distinct")

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices


@dataclass(frozen=True)
class CircuitSet:
    """Column indices of a minimal dependent set of quantities."""

    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(self.indices)))
        if not self.indices:
            raise ValueError("a circuit set cannot be empty")
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("circuit set indices must be distinct")

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices


@dataclass(frozen=True)
class BasisSetSystem:
    """The reduced invariants attached to one basis set.

    There is one invariant per non-basis quantity, in quantity order, each
    oriented so that the exponent of its non-basis quantity is positive and
    every other nonzero exponent lies in the basis.
    """

    basis: BasisSet
    invariants: tuple[Invariant, ...]


def _check_size(matrix: DimensionalMatrix, max_n: int) -> None:
    n = len(matrix.quantities)
    if n > max_n:
        raise SizeLimitError(n, max_n)


def _subset_rank(matrix: DimensionalMatrix, subset: Sequence[int]) -> int:
    if not subset:
        return 0
    m = matrix.system.size
    cols = matrix.columns
    rows = tuple(tuple(cols[j][i] for j in subset) for i in range(m))
    return linalg.rank(rows)


def _subset_kernel_vector(
    matrix: DimensionalMatrix, subset: Sequence[int]
) -> tuple | None:
    """The kernel vector of the chosen columns if it is one-dimensional."""
    m = matrix.system.size
    cols = matrix.columns
    rows = tuple(tuple(cols[j][i] for j in subset) for i in range(m))
    basis = linalg.kernel_basis(rows)
    if len(basis.vectors) != 1:
        return None
    return basis.vectors[0]


def enumerate_basis_sets(
    matrix: DimensionalMatrix, max_n: int = DEFAULT_MAX_N
) -> list[BasisSet]:
    """All size-r independent column subsets, lexicographically ordered.

    With rank 0 the single empty basis set is returned: every quantity is
    then dimensionless on its own.
    """
    _check_size(matrix, max_n)
    n = len(matrix.quantities)
    r = matrix.rank
    return [
        BasisSet(subset)
        for subset in combinations(range(n), r)
        if _subset_rank(matrix, subset) == r
    ]


def is_circuit_set(matrix: DimensionalMatrix, subset: Sequence[int]) -> bool:
    """Minimal-dependence test: rank |S|-1 and a fully supported kernel line."""
    subset = tuple(sorted(subset))
    if not subset or len(set(subset)) != len(subset):
        return False
    if _subset_rank(matrix, subset) != len(subset) - 1:
        return False
    vector = _subset_kernel_vector(matrix, subset)
    return vector is not None and all(x != 0 for x in vector)


def enumerate_circuit_sets(
    matrix: DimensionalMatrix, max_n: int = DEFAULT_MAX_N
) -> list[CircuitSet]:
    """All circuit sets, sorted lexicographically by index tuple.

    Circuits never have more than rank+1 members, so only subsets up to that
    size are examined.
    """
    _check_size(matrix, max_n)
    n = len(matrix.quantities)
    found = [
        CircuitSet(subset)
        for size in range(1, matrix.rank + 2)
        for subset in combinations(range(n), size)
        if is_circuit_set(matrix, subset)
    ]
    return sorted(found, key=lambda c: c.indices)


def circuit_invariant(matrix: DimensionalMatrix, circuit: CircuitSet) -> InvariantPair:
    """The invariant pair supported exactly on a circuit set."""
    subset = circuit.indices
    if _subset_rank(matrix, subset) != len(subset) - 1:
        raise ValueError(f"{subset} is not a circuit set of this matrix")
    vector = _subset_kernel_vector(matrix, subset)
    if vector is None or any(x == 0 for x in vector):
        raise ValueError(f"{subset} is not a circuit set of this matrix")
    n = len(matrix.quantities)
    full = [0] * n
    primitive = linalg.primitive_scale(vector)
    for k, j in enumerate(subset):
        full[j] = primitive[k]
    return InvariantPair.of(Invariant(tuple(full)))


def circuit_basis(
    matrix: DimensionalMatrix, max_n: int = DEFAULT_MAX_N
) -> list[InvariantPair]:
    """One invariant pair per circuit set, in circuit-set order.

    The number of pairs always lies between n - rank and C(n, rank + 1).
    """
    return [
        circuit_invariant(matrix, circuit)
        for circuit in enumerate_circuit_sets(matrix, max_n)
    ]


def basis_set_invariants(matrix: DimensionalMatrix, basis: BasisSet) -> BasisSetSystem:
    """Reduce each non-basis quantity against a basis set.

    Solving a non-basis column in terms of the basis columns yields a kernel
    vector with exponent 1 on that quantity; scaling it by a positive
    rational to primitive integers keeps that exponent positive.
    """
    n = len(matrix.quantities)
    r = matrix.rank
    if len(basis) != r or _subset_rank(matrix, basis.indices) != r:
        raise ValueError(f"{basis.indices} is not a basis set of this matrix")
    rows = matrix.rows
    invariants = []
    for i in range(n):
        if i in basis:
            continue
        coefficients = linalg.solve_in_basis(rows, basis.indices, i)
        vector = [0] * n  # type: list
        vector[i] = 1
        for j, c in zip(basis.indices, coefficients):
            vector[j] = -c
        invariants.append(Invariant(linalg.scale_to_primitive(vector)))
    return BasisSetSystem(basis=basis, invariants=tuple(invariants))


def unified_basis(
    matrix: DimensionalMatrix, max_n: int = DEFAULT_MAX_N
) -> list[Invariant]:
    """Union of all basis-set invariants, deduplicated at pair level.

    Each pair is reported once, in its canonical orientation, sorted by
    exponent vector. The result is always contained in the circuit basis
    when both are compared as pairs.
    """
    seen: set[tuple[int, ...]] = set()
    out: list[Invariant] = []
    for basis in enumerate_basis_sets(matrix, max_n):
        for invariant in basis_set_invariants(matrix, basis).invariants:
            canonical = invariant.canonical()
            if canonical.exponents not in seen:
                seen.add(canonical.exponents)
                out.append(canonical)
    return sorted(out, key=lambda inv: inv.exponents)
