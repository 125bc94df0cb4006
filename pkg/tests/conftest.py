from __future__ import annotations

from pathlib import Path

import pytest

from dimbasis import DimensionSystem, DimensionalMatrix, Quantity, build_matrix

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def matrix_of(dimensions, quantities) -> DimensionalMatrix:
    """Build a matrix from (name, dims) pairs; test shorthand."""
    return build_matrix(
        DimensionSystem(tuple(dimensions)),
        tuple(Quantity(name, tuple(dims)) for name, dims in quantities),
    )


def pipe_matrix() -> DimensionalMatrix:
    # Turbulent pipe flow: pressure drop per length, density, viscosity,
    # diameter, velocity over (L, T, M).
    return matrix_of(
        ("L", "T", "M"),
        (
            ("dP/l", (-2, -2, 1)),
            ("rho", (-3, 0, 1)),
            ("mu", (-1, -1, 1)),
            ("d", (1, 0, 0)),
            ("u", (1, -1, 0)),
        ),
    )


def laminar_matrix() -> DimensionalMatrix:
    # Same flow with density dropped (laminar regime).
    return matrix_of(
        ("L", "T", "M"),
        (
            ("dP/l", (-2, -2, 1)),
            ("mu", (-1, -1, 1)),
            ("d", (1, 0, 0)),
            ("u", (1, -1, 0)),
        ),
    )


def falling_body_matrix() -> DimensionalMatrix:
    # Displacement of a falling body: S(t), initial position/velocity,
    # gravity, elapsed time over (L, T).
    return matrix_of(
        ("L", "T"),
        (
            ("S(t)", (1, 0)),
            ("S0", (1, 0)),
            ("V0", (1, -1)),
            ("g", (1, -2)),
            ("t", (0, 1)),
        ),
    )


def two_body_matrix() -> DimensionalMatrix:
    # Orbital period of two mutually attracting bodies over (L, T, M).
    return matrix_of(
        ("L", "T", "M"),
        (
            ("t", (0, 1, 0)),
            ("d", (1, 0, 0)),
            ("m1", (0, 0, 1)),
            ("m2", (0, 0, 1)),
            ("G", (3, -2, -1)),
        ),
    )


@pytest.fixture
def pipe() -> DimensionalMatrix:
    return pipe_matrix()


@pytest.fixture
def laminar() -> DimensionalMatrix:
    return laminar_matrix()


@pytest.fixture
def falling_body() -> DimensionalMatrix:
    return falling_body_matrix()


@pytest.fixture
def two_body() -> DimensionalMatrix:
    return two_body_matrix()
