"""Linkage spec validation and constraint-system construction."""

from fractions import Fraction

import pytest

from locusforge.errors import DegenerateCoupler, InvalidSpec, ValidationError
from locusforge.linkage import (
    FULL_CONTEXT,
    REDUCED_CONTEXT,
    LinkageSpec,
    build_constraints,
    coupler_inverse,
    reduce_variables,
)
from locusforge.poly import Polynomial, canonicalize, parse_polynomial

F = Fraction


def spec_with(**kw):
    base = dict(A=(F(0), F(0)), B=(F(15), F(0)),
                f1=F(11, 2), f2=F(11, 2), g=F(12), u=F(0), v=F(0))
    base.update(kw)
    return LinkageSpec(**base)


# -- spec --------------------------------------------------------------------

def test_default_spec_matches_documented_values():
    spec = LinkageSpec.default()
    assert spec.A == (0, 0) and spec.B == (15, 0)
    assert spec.f1 == spec.f2 == F(11, 2) and spec.g == 12


def test_json_round_trip():
    payload = {"A": ["0", "0"], "B": ["15", "0"], "f1": "11/2",
               "f2": "11/2", "g": "12", "u": "1/2", "v": "2"}
    spec = LinkageSpec.from_json(payload)
    assert spec.u == F(1, 2) and spec.v == 2
    assert spec.to_json() == payload
    assert LinkageSpec.from_json(spec.to_json()) == spec


@pytest.mark.parametrize("mutation", [
    {"f1": F(0)}, {"f2": F(-1)}, {"g": F(0)},
    {"B": (F(0), F(0))},
])
def test_invalid_specs_rejected(mutation):
    with pytest.raises(InvalidSpec):
        spec_with(**mutation).validate()


@pytest.mark.parametrize("payload", [
    "not a dict",
    {},
    {"A": ["0"], "B": ["15", "0"], "f1": "1", "f2": "1", "g": "1", "u": "0", "v": "0"},
    {"A": ["0", "0"], "B": ["15", "0"], "f1": "zero", "f2": "1", "g": "1", "u": "0", "v": "0"},
])
def test_from_json_rejects_malformed(payload):
    with pytest.raises(InvalidSpec):
        LinkageSpec.from_json(payload)


# -- constraint construction --------------------------------------------------

def test_build_constraints_shape_and_radii():
    cs = build_constraints(LinkageSpec.default())
    assert cs.variables == FULL_CONTEXT
    assert len(cs.polynomials) == 5
    assert all(p.total_degree() <= 2 for p in cs.polynomials)
    circle_e, circle_h, coupler = cs.polynomials[:3]
    zero = (0,) * 6
    assert circle_e.coefficient(zero) == -F(121, 4)
    assert circle_h.coefficient(zero) == 225 - F(121, 4)
    assert coupler.coefficient(zero) == -144
    expected_e = parse_polynomial("Ex^2 + Ey^2 - 121/4", FULL_CONTEXT)
    assert circle_e == expected_e


def test_coupler_point_degenerations():
    cs0 = build_constraints(spec_with(u=F(0), v=F(0)))
    x_eq = parse_polynomial("x - Ex", FULL_CONTEXT)
    y_eq = parse_polynomial("y - Ey", FULL_CONTEXT)
    assert cs0.polynomials[3] == x_eq and cs0.polynomials[4] == y_eq

    cs1 = build_constraints(spec_with(u=F(1), v=F(0)))
    assert cs1.polynomials[3] == parse_polynomial("x - Hx", FULL_CONTEXT)
    assert cs1.polynomials[4] == parse_polynomial("y - Hy", FULL_CONTEXT)


# -- variable reduction --------------------------------------------------------

def test_coupler_inverse_midpoint_and_identity():
    hx, hy = coupler_inverse(spec_with(u=F(1, 2), v=F(0)))
    assert hx == parse_polynomial("2*x - Ex", REDUCED_CONTEXT)
    assert hy == parse_polynomial("2*y - Ey", REDUCED_CONTEXT)
    hx, hy = coupler_inverse(spec_with(u=F(1), v=F(0)))
    assert hx == parse_polynomial("x", REDUCED_CONTEXT)
    assert hy == parse_polynomial("y", REDUCED_CONTEXT)


def test_coupler_inverse_pure_rotation():
    # u=0, v=1: invert the 2x2 system by hand and substitute back to verify
    hx, hy = coupler_inverse(spec_with(u=F(0), v=F(1)))
    assert hx == parse_polynomial("Ex + y - Ey", REDUCED_CONTEXT)
    assert hy == parse_polynomial("Ey - x + Ex", REDUCED_CONTEXT)
    # back-substitution: x = Ex + u(Hx-Ex) - v(Hy-Ey) must become an identity
    ctx = REDUCED_CONTEXT
    Ex, Ey, x, y = (Polynomial.variable(ctx, n) for n in ctx)
    assert x - (Ex + 0 * (hx - Ex) - 1 * (hy - Ey)) == Polynomial.zero(ctx)
    assert y - (Ey + 0 * (hy - Ey) + 1 * (hx - Ex)) == Polynomial.zero(ctx)


def test_reduce_variables_rejects_degenerate_coupler():
    spec = spec_with(u=F(0), v=F(0))
    with pytest.raises(DegenerateCoupler):
        reduce_variables(build_constraints(spec), spec)


def test_reduce_variables_requires_full_system():
    spec = spec_with(u=F(1, 2), v=F(2))
    cs = reduce_variables(build_constraints(spec), spec)
    with pytest.raises(ValidationError):
        reduce_variables(cs, spec)


def test_reduce_variables_shape():
    spec = spec_with(u=F(1, 2), v=F(2))
    cs = reduce_variables(build_constraints(spec), spec)
    assert cs.variables == REDUCED_CONTEXT
    assert len(cs.polynomials) == 3
    assert all(p.total_degree() <= 2 for p in cs.polynomials)


def test_reduced_system_vanishes_at_rational_solution():
    # 3-4-5 construction: E=(3,4) on circle(A,5); H=(11,4) on circle(B,5); |EH|=8
    spec = LinkageSpec(A=(F(0), F(0)), B=(F(8), F(0)),
                       f1=F(5), f2=F(5), g=F(8), u=F(1, 2), v=F(2))
    e, h = (F(3), F(4)), (F(11), F(4))
    w = (h[0] - e[0], h[1] - e[1])
    m = (e[0] + spec.u * w[0] - spec.v * w[1],
         e[1] + spec.u * w[1] + spec.v * w[0])
    full = build_constraints(spec)
    at = {"Ex": e[0], "Ey": e[1], "Hx": h[0], "Hy": h[1], "x": m[0], "y": m[1]}
    assert all(p.evaluate(at) == 0 for p in full.polynomials)
    reduced = reduce_variables(full, spec)
    at_reduced = {"Ex": e[0], "Ey": e[1], "x": m[0], "y": m[1]}
    assert all(p.evaluate(at_reduced) == 0 for p in reduced.polynomials)


def test_reduced_system_vanishes_on_traced_samples():
    # float solutions of the full system satisfy the reduced one to 1e-9
    from locusforge.tracer import trace

    spec = spec_with(u=F(1, 2), v=F(2))
    reduced = reduce_variables(build_constraints(spec), spec)
    for pose in trace(spec, 24).poses:
        at = {"Ex": F(pose.E[0]), "Ey": F(pose.E[1]),
              "x": F(pose.M[0]), "y": F(pose.M[1])}
        for p in reduced.polynomials:
            assert abs(float(p.evaluate(at))) <= 1e-9


def test_equal_crank_mirror_symmetry_of_system():
    # A=(-a,0), B=(a,0), f1=f2, u=1/2: the system maps to itself under
    # (x,Ex,Hx) -> (-x,-Hx,-Ex), (y,Ey,Hy) -> (y,Hy,Ey), up to sign and order
    spec = LinkageSpec(A=(F(-15, 2), F(0)), B=(F(15, 2), F(0)),
                       f1=F(11, 2), f2=F(11, 2), g=F(12), u=F(1, 2), v=F(2))
    cs = build_constraints(spec)
    ctx = FULL_CONTEXT
    var = {n: Polynomial.variable(ctx, n) for n in ctx}
    mapping = {"x": -var["x"], "Ex": -var["Hx"], "Hx": -var["Ex"],
               "y": var["y"], "Ey": var["Hy"], "Hy": var["Ey"]}
    original = {canonicalize(p)[1] for p in cs.polynomials}
    mirrored = {canonicalize(p.substitute(mapping))[1] for p in cs.polynomials}
    assert original == mirrored
