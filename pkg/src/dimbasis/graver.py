"""Graver bases of integer kernel lattices, at desk scale.

Order the nonzero integer kernel vectors of a dimensional matrix by
``x <= y  iff  x_i * y_i >= 0 and |x_i| <= |y_i| for every i`` (sign
compatible and entrywise no larger). The Graver basis is the set of minimal
elements under this order. Every circuit tuple is such a minimal element, so
the circuit basis embeds into the Graver basis; the converse can fail.

Two methods are provided:

* ``completion``: a Pottier-style completion. Starting from a lattice basis
  of the integer kernel plus negations, pairwise sums are reduced to normal
  form against the current set until closure, then non-minimal elements are
  discarded. The starting basis is saturated (see
  :func:`dimbasis.linalg.integer_kernel_basis`), which makes the result the
  full Graver basis regardless of processing order.
* ``brute_force``: enumerate kernel points with all entries bounded and keep
  the minimal ones. Exact for every element within the bound, but blind to
  Graver elements with larger entries; useful as an independent oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from . import linalg
from .enumeration import circuit_basis
from .errors import DEFAULT_MAX_N, SizeLimitError
from .model import DimensionalMatrix

Vector = tuple[int, ...]


@dataclass(frozen=True)
class GraverElement:
    """A minimal kernel vector and its sign flip, stored canonically."""

    exponents: Vector

    @classmethod
    def of(cls, vector: Sequence[int]) -> "GraverElement":
        v = tuple(vector)
        first = next((x for x in v if x), 0)
        if first == 0:
            raise ValueError("the zero vector is not a Graver element")
        if first < 0:
            v = tuple(-x for x in v)
        return cls(v)


def conforms(x: Sequence[int], y: Sequence[int]) -> bool:
    """Whether x <= y in the sign-compatible entrywise order."""
    return all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(x, y))


def _normal_form(v: Vector, generators: Iterable[Vector]) -> Vector:
    reduced = True
    while reduced and any(v):
        reduced = False
        for g in generators:
            if conforms(g, v):
                v = tuple(a - b for a, b in zip(v, g))
                reduced = True
                break
    return v


def _minimal_elements(vectors: Iterable[Vector]) -> set[Vector]:
    pool = set(vectors)
    return {
        v for v in pool
        if not any(w != v and conforms(w, v) for w in pool)
    }


def _completion(rows: Sequence[Sequence[int]]) -> set[Vector]:
    basis = [v for v in linalg.integer_kernel_basis(rows) if any(v)]
    generators: list[Vector] = []
    members: set[Vector] = set()
    queue: deque[Vector] = deque()

    def add(vector: Vector) -> None:
        queue.extend(tuple(a + b for a, b in zip(vector, g)) for g in generators)
        generators.append(vector)
        members.add(vector)

    for b in basis:
        for v in (b, tuple(-x for x in b)):
            if v not in members:
                add(v)
    while queue:
        s = _normal_form(queue.popleft(), generators)
        if not any(s) or s in members:
            continue
        add(s)
        t = tuple(-x for x in s)
        if t not in members:
            add(t)
    return _minimal_elements(members)


def _brute_force(rows: Sequence[Sequence[int]], bound: int) -> set[Vector]:
    n = len(rows[0])
    points = [
        c
        for c in product(range(-bound, bound + 1), repeat=n)
        if any(c) and all(sum(r * x for r, x in zip(row, c)) == 0 for row in rows)
    ]
    return _minimal_elements(points)


def graver_basis(
    matrix: DimensionalMatrix,
    method: str = "completion",
    *,
    bound: int | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> frozenset[GraverElement]:
    """Compute the Graver basis of the matrix kernel.

    Args:
        matrix: the dimensional matrix.
        method: "completion" (full basis) or "brute_force" (bounded search;
            requires ``bound`` and may miss elements beyond it).
        bound: entry bound for the brute-force method, at least 1.
        max_n: quantity-count cap.

    Returns:
        The basis as a frozenset of canonical pairs; each element stands for
        both of its orientations.
    """
    n = len(matrix.quantities)
    if n > max_n:
        raise SizeLimitError(n, max_n)
    rows = matrix.rows
    if method == "completion":
        vectors = _completion(rows)
    elif method == "brute_force":
        if bound is None or bound < 1:
            raise ValueError("brute_force needs an entry bound >= 1")
        vectors = _brute_force(rows, bound)
    else:
        raise ValueError(f"unknown Graver method: {method!r}")
    return frozenset(GraverElement.of(v) for v in vectors)


@dataclass(frozen=True)
class GraverContainment:
    """Result of checking the circuit tuples against the Graver basis."""

    contained: bool
    missing: tuple[Vector, ...]
    non_circuit_witnesses: tuple[Vector, ...]


def check_circuits_in_graver(
    matrix: DimensionalMatrix,
    method: str = "completion",
    *,
    bound: int | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> GraverContainment:
    """Verify that every circuit tuple is a Graver element.

    The report also lists Graver elements that are not circuit tuples (the
    containment is usually strict).
    """
    circuits = {pair.exponents for pair in circuit_basis(matrix, max_n)}
    graver = {g.exponents for g in graver_basis(matrix, method, bound=bound, max_n=max_n)}
    missing = tuple(sorted(circuits - graver))
    witnesses = tuple(sorted(graver - circuits))
    return GraverContainment(
        contained=not missing,
        missing=missing,
        non_circuit_witnesses=witnesses,
    )
