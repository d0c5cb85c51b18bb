"""Acceptance suite: one test per release criterion, each printing a
[PASS]/[FAIL] line (run with ``pytest -s`` to see them inline).

Tolerances and time budgets are pinned here and are not to be loosened.
"""

import math
import random
import re
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest
from fastapi.testclient import TestClient

from locusforge.errors import Cancelled
from locusforge.fit import FitProblem, fit_implicit, required_points
from locusforge.groebner import buchberger, normal_form, s_polynomial
from locusforge.jobs import canonical_json
from locusforge.linkage import LinkageSpec
from locusforge.locus import HOLDS_PLAIN, locus_equation, prove_membership
from locusforge.poly import MonomialOrder, Polynomial, canonicalize, parse_polynomial
from locusforge.service import create_app
from locusforge.tracer import residuals, trace

F = Fraction
XY = ("x", "y")


@contextmanager
def criterion(name):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\n[FAIL] {name} ({time.perf_counter() - start:.2f}s)")
        raise
    print(f"\n[PASS] {name} ({time.perf_counter() - start:.2f}s)")


_cache: dict = {}


def generic_spec() -> LinkageSpec:
    return LinkageSpec.default(u=F(1, 2), v=F(2))


def sextic_result():
    if "sextic" not in _cache:
        _cache["sextic"] = locus_equation(generic_spec(), deadline_ms=120_000)
    return _cache["sextic"]


def test_c1_thales_proof():
    with criterion("C1 right-angle-on-circle proof is holds_plain in < 1 s"):
        start = time.perf_counter()
        hypotheses = [parse_polynomial("x^2 + y^2 - 1", XY)]
        thesis = (parse_polynomial("x + 1", XY) * parse_polynomial("x - 1", XY)
                  + parse_polynomial("y", XY) ** 2)
        result = prove_membership(hypotheses, thesis)
        elapsed = time.perf_counter() - start
        assert result.verdict == HOLDS_PLAIN
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_c2_circle_degenerations():
    with criterion("C2 u,v degenerations give the exact crank/rocker circles in < 5 s each"):
        start = time.perf_counter()
        res_e = locus_equation(LinkageSpec.default(u=0, v=0))
        t_e = time.perf_counter() - start
        assert res_e.strings == ["4*x^2 + 4*y^2 - 121"]
        assert t_e < 5.0

        start = time.perf_counter()
        res_h = locus_equation(LinkageSpec.default(u=1, v=0))
        t_h = time.perf_counter() - start
        # 4(x-15)^2 + 4y^2 - 121 expanded and canonicalized
        expected = canonicalize(
            4 * parse_polynomial("x - 15", XY) ** 2
            + 4 * parse_polynomial("y", XY) ** 2 - 121)[1]
        assert res_h.strings == [expected] == ["4*x^2 + 4*y^2 - 120*x + 779"]
        assert t_h < 5.0


def test_c3_sextic_structure():
    with criterion("C3 generic coupler point yields a principal sextic in < 120 s"):
        start = time.perf_counter()
        result = locus_equation(generic_spec(), deadline_ms=120_000)
        elapsed = time.perf_counter() - start
        _cache["sextic"] = result
        assert result.principal, "elimination ideal is not principal"
        assert result.total_degree == 6
        assert not result.degenerate
        assert elapsed < 120.0, f"took {elapsed:.1f}s"


def test_c4_trace_vs_locus_oracle():
    with criterion("C4 360-sample trace fits the sextic to 1e-6 with the exact feasibility arc in < 10 s"):
        start = time.perf_counter()
        spec = generic_spec()
        generator = sextic_result().generators[0]
        tr = trace(spec, 360)
        assert tr.poses and tr.skipped
        worst = float(np.max(residuals(generator, [p.M for p in tr.poses])))
        assert worst <= 1e-6, f"worst residual {worst:.3e}"

        # independent feasibility arc from the triangle inequalities
        f1, f2, g = float(spec.f1), float(spec.f2), float(spec.g)
        bx, by = float(spec.B[0]), float(spec.B[1])
        expected_skips = set()
        step = 2.0 * math.pi / 360
        for k in range(360):
            theta = k * step
            e = (f1 * math.cos(theta), f1 * math.sin(theta))
            d = math.hypot(bx - e[0], by - e[1])
            if d > f2 + g + 1e-12 or d < abs(f2 - g) - 1e-12:
                expected_skips.add((theta, "ccw"))
                expected_skips.add((theta, "cw"))
        assert set(tr.skipped) == expected_skips
        elapsed = time.perf_counter() - start
        assert elapsed < 10.0, f"took {elapsed:.1f}s"


def test_c5_implicit_curve_consistency():
    with criterion("C5 degree-6 least-squares fit agrees with the symbolic route; exact conic is byte-exact"):
        spec = generic_spec()
        poses = trace(spec, 360).poses
        fit_idx = np.linspace(0, len(poses) - 1, 27).astype(int)
        fit_points = [poses[i].M for i in fit_idx]
        result = fit_implicit(FitProblem(degree=6, points=fit_points,
                                         mode="leastsq"))

        held_idx = [i for i in np.linspace(0, len(poses) - 2, 100).astype(int)]
        held = np.asarray([poses[i].M for i in held_idx])
        exps = np.array(result.columns)
        coeffs = np.array(result.coefficients)
        values = (held[:, 0:1] ** exps[:, 0]) * (held[:, 1:2] ** exps[:, 1]) @ coeffs
        mass = float(np.sum(np.abs(coeffs)))
        scale = np.maximum(1.0, np.max(np.abs(held), axis=1)) ** 6
        worst = float(np.max(np.abs(values) / (mass * scale)))
        assert worst <= 1e-6, f"worst held-out residual {worst:.3e}"

        circle = fit_implicit(FitProblem(
            degree=2,
            points=[(F(1), F(0)), (F(-1), F(0)), (F(0), F(1)), (F(0), F(-1)),
                    (F(3, 5), F(4, 5))],
            mode="exact"))
        assert circle.string == "x^2 + y^2 - 1"


def test_c6_point_count_rule():
    with criterion("C6 required_points(n) = n(n+3)/2 for n = 1..10"):
        expected = {1: 2, 2: 5, 3: 9, 4: 14, 5: 20, 6: 27, 7: 35, 8: 44,
                    9: 54, 10: 65}
        for n in range(1, 11):
            assert required_points(n) == n * (n + 3) // 2 == expected[n]


def _random_ideal(rng, context):
    gens = []
    for _ in range(rng.randint(1, 3)):
        terms = {}
        for t in range(rng.randint(1, 3)):
            mono = [0] * len(context)
            degree = rng.randint(1, 3) if t == 0 else rng.randint(0, 3)
            for _ in range(degree):
                mono[rng.randrange(len(context))] += 1
            coeff = rng.randint(-3, 3)
            if coeff:
                terms[tuple(mono)] = terms.get(tuple(mono), 0) + coeff
        gens.append(Polynomial(context, terms))
    return [g for g in gens if not g.is_zero()]


def test_c7_groebner_property_suite():
    with criterion("C7 200 randomized ideals: GB criterion, ideal preservation, permutation invariance in < 60 s"):
        start = time.perf_counter()
        rng = random.Random(0xC0FFEE)
        orders = [MonomialOrder.grlex(), MonomialOrder.grevlex(),
                  MonomialOrder.lex()]
        context = ("x", "y", "z")
        checked = 0
        while checked < 200:
            gens = _random_ideal(rng, context)
            if not gens:
                continue
            order = orders[checked % 3]
            basis = buchberger(gens, order)
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    s = s_polynomial(basis[i], basis[j], order)
                    if not s.is_zero():
                        assert normal_form(s, basis, order).is_zero()
            for g in gens:
                assert normal_form(g, basis, order).is_zero()
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled, order) == basis
            checked += 1
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


def test_c8_mirror_symmetry():
    with criterion("C8 equal-crank symmetric locus is invariant under x -> -x, byte-exact"):
        spec = LinkageSpec(A=(F(-15, 2), F(0)), B=(F(15, 2), F(0)),
                           f1=F(11, 2), f2=F(11, 2), g=F(12),
                           u=F(1, 2), v=F(2))
        result = locus_equation(spec, deadline_ms=120_000)
        assert result.principal
        generator = result.generators[0]
        mirrored = generator.substitute(
            {"x": -Polynomial.variable(XY, "x")})
        assert canonicalize(mirrored)[1] == canonicalize(generator)[1]


def test_c9_determinism_and_deadline():
    with criterion("C9 /locus is byte-deterministic (wall-time field aside) and 408s promptly"):
        payload = LinkageSpec.default(u=F(1, 2), v=F(2)).to_json()
        body = canonical_json({"kind": "locus", "payload": payload,
                               "deadline_ms": 60_000})
        with TestClient(create_app()) as client:
            first = client.post("/locus", content=body,
                                headers={"content-type": "application/json"})
            second = client.post("/locus", content=body,
                                 headers={"content-type": "application/json"})
            assert first.status_code == second.status_code == 200
            mask = lambda s: re.sub(rb'"elapsed_ms":\d+', b'"elapsed_ms":0', s)
            assert mask(first.content) == mask(second.content)

            # deadline: 408 within 100 ms of the 1 ms deadline
            timed_body = canonical_json({"kind": "locus", "payload": payload,
                                         "deadline_ms": 1})
            start = time.perf_counter()
            r = client.post("/locus", content=timed_body,
                            headers={"content-type": "application/json"})
            elapsed = time.perf_counter() - start
            assert r.status_code == 408
            assert elapsed < 0.101, f"408 took {elapsed * 1000:.1f} ms"

        with pytest.raises(Cancelled):
            locus_equation(generic_spec(), deadline_ms=1)
