"""Floating-point forward kinematics of the linkage.

Samples the crank angle, solves the circle-circle intersection for H on the
requested assembly branch, and evaluates scale-normalized residuals of traced
points against symbolic loci.  All floats are 64-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoAssembly, ValidationError, ZeroPolynomial
from .linkage import LinkageSpec
from .poly import Polynomial

BRANCHES = ("ccw", "cw")

# absolute slack on the triangle-inequality feasibility band
FEASIBILITY_TOL = 1e-12
# grazing-tangency guard: tiny negative h^2 values clamp to zero
TANGENCY_CLAMP = 1e-14

FloatPoint = tuple[float, float]


@dataclass(frozen=True)
class Pose:
    theta: float
    branch: str
    E: FloatPoint
    H: FloatPoint
    M: FloatPoint


@dataclass
class Trace:
    poses: list[Pose]
    skipped: list[tuple[float, str]]


def circle_intersections(c0: FloatPoint, r0: float,
                         c1: FloatPoint, r1: float) -> tuple[FloatPoint, FloatPoint]:
    """Both intersection points of circle(c0, r0) and circle(c1, r1).

    The first returned point P satisfies cross(c1 - c0, P - c0) >= 0; at
    tangency both returned points coincide.  Raises NoAssembly for disjoint or
    nested circles (tolerance 1e-12 on the center distance).
    """
    dx, dy = c1[0] - c0[0], c1[1] - c0[1]
    d = math.hypot(dx, dy)
    if d <= FEASIBILITY_TOL:
        raise NoAssembly("concentric circles")
    if d - (r0 + r1) > FEASIBILITY_TOL or d + min(r0, r1) < max(r0, r1) - FEASIBILITY_TOL:
        raise NoAssembly("circles are disjoint or nested")
    a = (d * d + r0 * r0 - r1 * r1) / (2.0 * d)
    h2 = r0 * r0 - a * a
    if h2 < 0.0:
        if h2 > -TANGENCY_CLAMP:
            h2 = 0.0
        else:
            raise NoAssembly("circles graze beyond tolerance")
    h = math.sqrt(h2)
    ex, ey = dx / d, dy / d
    fx, fy = c0[0] + a * ex, c0[1] + a * ey
    # (-ey, ex) is the +90 degree rotation of the center axis
    plus = (fx - h * ey, fy + h * ex)
    minus = (fx + h * ey, fy - h * ex)
    return plus, minus


def solve_position(spec: LinkageSpec, theta: float, branch: str) -> Pose:
    """Pose at crank angle theta on the chosen assembly branch."""
    spec.validate()
    if branch not in BRANCHES:
        raise ValidationError(f"branch must be one of {BRANCHES}")
    ax, ay = float(spec.A[0]), float(spec.A[1])
    bx, by = float(spec.B[0]), float(spec.B[1])
    f1, f2, g = float(spec.f1), float(spec.f2), float(spec.g)
    e = (ax + f1 * math.cos(theta), ay + f1 * math.sin(theta))
    ccw, cw = circle_intersections(e, g, (bx, by), f2)
    h = ccw if branch == "ccw" else cw
    wx, wy = h[0] - e[0], h[1] - e[1]
    u, v = float(spec.u), float(spec.v)
    m = (e[0] + u * wx - v * wy, e[1] + u * wy + v * wx)
    return Pose(theta=theta, branch=branch, E=e, H=h, M=m)


def trace(spec: LinkageSpec, samples: int, branches=BRANCHES) -> Trace:
    """Uniform crank-angle sweep over [0, 2pi); infeasible grid points land in
    ``skipped`` rather than erroring."""
    if not isinstance(samples, int) or samples < 1:
        raise ValidationError("samples must be a positive integer")
    branch_list = [b for b in BRANCHES if b in set(branches)]
    if not branch_list or set(branches) - set(BRANCHES):
        raise ValidationError(f"branches must be a nonempty subset of {BRANCHES}")
    spec.validate()
    poses: list[Pose] = []
    skipped: list[tuple[float, str]] = []
    step = 2.0 * math.pi / samples
    for k in range(samples):
        theta = k * step
        for branch in branch_list:
            try:
                poses.append(solve_position(spec, theta, branch))
            except NoAssembly:
                skipped.append((theta, branch))
    return Trace(poses=poses, skipped=skipped)


CSV_HEADER = "theta,branch,Ex,Ey,Hx,Hy,Mx,My"


def trace_to_csv(tr: Trace) -> str:
    """Rows ordered by (theta, branch); skipped rows keep empty coordinates."""
    rows = []
    for p in tr.poses:
        rows.append((p.theta, p.branch,
                     f"{p.theta!r},{p.branch},{p.E[0]!r},{p.E[1]!r},"
                     f"{p.H[0]!r},{p.H[1]!r},{p.M[0]!r},{p.M[1]!r}"))
    for theta, branch in tr.skipped:
        rows.append((theta, branch, f"{theta!r},{branch},,,,,,"))
    rows.sort(key=lambda r: (r[0], r[1]))
    return "\n".join([CSV_HEADER] + [r[2] for r in rows]) + "\n"


def bar_length_errors(pose: Pose, spec: LinkageSpec) -> tuple[float, float, float]:
    """Relative errors of the three distance invariants |EA|, |HB|, |HE|."""
    def rel(p, q, length):
        return abs(math.dist(p, q) - length) / length
    return (rel(pose.E, (float(spec.A[0]), float(spec.A[1])), float(spec.f1)),
            rel(pose.H, (float(spec.B[0]), float(spec.B[1])), float(spec.f2)),
            rel(pose.H, pose.E, float(spec.g)))


def _float_terms(p: Polynomial):
    if p.is_zero():
        raise ZeroPolynomial("residual of the zero polynomial is undefined")
    if len(p.context) != 2:
        raise ValidationError("residuals expect a bivariate polynomial in (x, y)")
    exps = np.array(list(p.terms.keys()), dtype=np.int64)
    coeffs = np.array([float(c) for c in p.terms.values()])
    return exps, coeffs


def evaluate_at(p: Polynomial, xs, ys) -> np.ndarray:
    """Vectorized float evaluation of a bivariate polynomial."""
    exps, coeffs = _float_terms(p)
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    vals = (xs[..., None] ** exps[:, 0]) * (ys[..., None] ** exps[:, 1])
    return vals @ coeffs


def residual(p: Polynomial, point) -> float:
    """|p(point)| / (sum|coeffs| * max(1, |x|, |y|)^deg): scale-normalized so
    thresholds carry across specs."""
    exps, coeffs = _float_terms(p)
    x, y = float(point[0]), float(point[1])
    value = float(np.sum(coeffs * (x ** exps[:, 0]) * (y ** exps[:, 1])))
    mass = float(np.sum(np.abs(coeffs)))
    scale = max(1.0, abs(x), abs(y)) ** p.total_degree()
    return abs(value) / (mass * scale)


def residuals(p: Polynomial, points) -> np.ndarray:
    """Vectorized ``residual`` over an iterable of (x, y) points."""
    pts = np.asarray(list(points), dtype=float).reshape(-1, 2)
    exps, coeffs = _float_terms(p)
    values = (pts[:, 0:1] ** exps[:, 0]) * (pts[:, 1:2] ** exps[:, 1])
    mass = float(np.sum(np.abs(coeffs)))
    scale = np.maximum(1.0, np.max(np.abs(pts), axis=1)) ** p.total_degree()
    return np.abs(values @ coeffs) / (mass * scale)
