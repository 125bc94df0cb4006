"""Independent brute-force oracles.

These deliberately avoid the package's elimination code: rank comes from
minor determinants (Laplace expansion), basis and circuit sets from their
set-theoretic definitions. Only usable for small matrices.
"""

from __future__ import annotations

from itertools import combinations

from dimbasis import DimensionalMatrix


def det(square: list[list[int]]) -> int:
    n = len(square)
    if n == 1:
        return square[0][0]
    total = 0
    for j in range(n):
        if square[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in square[1:]]
        total += (-1) ** j * square[0][j] * det(minor)
    return total


def oracle_rank(columns: list[tuple[int, ...]]) -> int:
    """Largest k with a nonzero k-by-k minor."""
    if not columns:
        return 0
    m = len(columns[0])
    for k in range(min(m, len(columns)), 0, -1):
        for row_sel in combinations(range(m), k):
            for col_sel in combinations(range(len(columns)), k):
                square = [[columns[c][r] for c in col_sel] for r in row_sel]
                if det(square) != 0:
                    return k
    return 0


def oracle_subset_rank(matrix: DimensionalMatrix, subset) -> int:
    cols = matrix.columns
    return oracle_rank([cols[j] for j in subset])


def oracle_basis_sets(matrix: DimensionalMatrix) -> list[tuple[int, ...]]:
    n = len(matrix.quantities)
    r = oracle_subset_rank(matrix, range(n))
    return [
        subset
        for subset in combinations(range(n), r)
        if oracle_subset_rank(matrix, subset) == r
    ]


def oracle_circuit_sets(matrix: DimensionalMatrix) -> list[tuple[int, ...]]:
    """Definitional check: dependent, with every proper subset independent."""
    n = len(matrix.quantities)
    circuits = []
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if oracle_subset_rank(matrix, subset) == size:
                continue  # independent, not even dependent
            proper_ok = all(
                oracle_subset_rank(matrix, proper) == len(proper)
                for k in range(size)
                for proper in combinations(subset, k)
            )
            if proper_ok:
                circuits.append(subset)
    return sorted(circuits)
