from __future__ import annotations

import json
from fractions import Fraction

from dimbasis import BasisSet, Invariant, build_representation, equation_system
from dimbasis.render import (
    invariant_json,
    render_index_set,
    render_invariant,
    render_power_product,
    render_representation,
)

PIPE_NAMES = ("dP/l", "rho", "mu", "d", "u")
FALL_NAMES = ("S(t)", "S0", "V0", "g", "t")


def test_reynolds_text():
    inv = Invariant((0, 1, -1, 1, 1))
    assert render_invariant(inv, PIPE_NAMES) == "rho·d·u / mu"


def test_all_positive_has_no_fraction_bar():
    inv = Invariant((1, 2))
    assert render_invariant(inv, ("q1", "q2")) == "q1·q2^2"


def test_displacement_invariant_text():
    inv = Invariant((1, 0, 0, -1, -2))
    assert render_invariant(inv, FALL_NAMES) == "S(t) / (g·t^2)"


def test_slash_names_are_parenthesized():
    inv = Invariant((1, 1, -2, 3, 0))
    assert render_invariant(inv, PIPE_NAMES) == "(dP/l)·rho·d^3 / mu^2"


def test_latex_fraction():
    inv = Invariant((0, 1, -1, 1, 1))
    labels = (r"\Delta P/\ell", r"\rho", r"\mu", "d", "u")
    assert render_invariant(inv, labels, "latex") == r"\frac{\rho\, d\, u}{\mu}"


def test_single_denominator_factor_unparenthesized():
    inv = Invariant((1, -1, 0, 0, 0))
    assert render_invariant(inv, FALL_NAMES) == "S(t) / S0"


def test_fractional_exponents_in_prefactor():
    powers = [("d", Fraction(3, 2)), ("m1", Fraction(-1, 2)), ("G", Fraction(-1, 2))]
    assert render_power_product(powers) == "d^(3/2) / (m1^(1/2)·G^(1/2))"
    assert (
        render_power_product(powers, "latex")
        == r"\frac{d^{3/2}}{m1^{1/2}\, G^{1/2}}"
    )


def test_empty_product_renders_as_one():
    assert render_power_product([]) == "1"


def test_render_index_set():
    assert render_index_set((1, 2, 3), PIPE_NAMES) == "{rho, mu, d}"
    assert render_index_set((1,), PIPE_NAMES, "latex") == r"\{rho\}"


def test_render_representation_text(pipe):
    rep = build_representation(pipe, 0, BasisSet((1, 3, 4)), "Phi_3")
    line = render_representation(rep, PIPE_NAMES)
    assert line == "dP/l = (rho·u^2 / d) · Phi_3(mu / (rho·d·u))"


def test_render_representation_without_actives(laminar):
    rep = build_representation(laminar, 0, BasisSet((1, 2, 3)), "Phi_1")
    line = render_representation(rep, ("dP/l", "mu", "d", "u"))
    assert line == "dP/l = (mu·u / d^2) · Phi_1()"


def test_render_representation_latex(pipe):
    rep = build_representation(pipe, 0, BasisSet((1, 2, 3)), "Phi_1")
    labels = (r"\Delta P/\ell", r"\rho", r"\mu", "d", "u")
    line = render_representation(rep, labels, "latex")
    assert line == (
        r"\Delta P/\ell = \frac{\mu^{2}}{\rho\, d^{3}}\, "
        r"\Phi_{1}\left(\frac{\rho\, d\, u}{\mu}\right)"
    )


def test_json_round_trip_preserves_exponents(pipe):
    inv = Invariant((1, -2, 1, 0, -3))
    payload = json.loads(json.dumps(invariant_json(inv, PIPE_NAMES)))
    assert tuple(payload["exponents"]) == inv.exponents
    assert payload["text"] == render_invariant(inv, PIPE_NAMES)


def test_system_function_names_render_in_order(falling_body):
    system = equation_system(falling_body, 0, (4,))
    lines = [render_representation(rep, FALL_NAMES) for rep in system.representations]
    assert lines == [
        "S(t) = S0 · Phi_1(S0·g / V0^2, V0·t / S0)",
        "S(t) = S0 · Phi_2(V0^2 / (S0·g), g·t^2 / S0)",
        "S(t) = (V0^2 / g) · Phi_3(S0·g / V0^2, g·t / V0)",
    ]
