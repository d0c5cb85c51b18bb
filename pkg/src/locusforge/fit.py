"""Implicit polynomial curve fitting through sample points.

A curve of degree n has (n+1)(n+2)/2 monomial coefficients, determined up to
scale by n(n+3)/2 points.  Exact mode computes a rational nullspace vector of
the evaluation matrix by fraction-free (Bareiss) elimination; leastsq mode
finds the unit-norm coefficient vector minimizing ||V c|| by inverse power
iteration on V^T V.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import (
    InvalidDegree,
    NoCurve,
    NotEnoughPoints,
    RankDeficient,
    ValidationError,
)
from .poly import Polynomial, canonicalize, parse_rational

XY = ("x", "y")

POWER_ITERATION_TOL = 1e-12
POWER_ITERATION_MAX = 500
DISPLAY_NOISE_FLOOR = 1e-9
DISPLAY_DENOMINATOR = 10**6


def required_points(n: int) -> int:
    """Sample points needed to pin down a degree-n implicit curve: n(n+3)/2."""
    if not isinstance(n, int) or n < 1:
        raise InvalidDegree("curve degree must be an integer >= 1")
    return n * (n + 3) // 2


def monomial_columns(n: int) -> list[tuple[int, int]]:
    """All (x, y) exponent pairs of total degree <= n in descending graded-lex."""
    return [(i, d - i) for d in range(n, -1, -1) for i in range(d, -1, -1)]


@dataclass
class FitProblem:
    degree: int
    points: list
    mode: str = "exact"

    def validate(self) -> None:
        if self.mode not in ("exact", "leastsq"):
            raise ValidationError("mode must be 'exact' or 'leastsq'")
        need = required_points(self.degree)
        if len(self.points) < need:
            raise NotEnoughPoints(
                f"degree {self.degree} needs at least {need} points, "
                f"got {len(self.points)}")


@dataclass
class FitResult:
    polynomial: Polynomial
    string: str
    mode: str
    rank: int
    nullity: int
    columns: list[tuple[int, int]]
    coefficients: list[float]
    iterations: int = 0
    converged: bool = True
    sigma: float = 0.0

    def to_json(self) -> dict:
        from .poly import format_rational
        terms = [{"coeff": format_rational(self.polynomial.terms[m]),
                  "exps": list(m)}
                 for m in sorted(self.polynomial.terms,
                                 key=lambda m: (sum(m), m), reverse=True)]
        return {
            "polynomial": {"string": self.string, "terms": terms},
            "mode": self.mode,
            "rank": self.rank,
            "nullity": self.nullity,
            "degree": self.polynomial.total_degree(),
            "coefficients": [repr(c) for c in self.coefficients],
            "iterations": self.iterations,
            "converged": self.converged,
            "sigma": repr(self.sigma),
        }


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Fraction-free row echelon; returns the matrix and (row, col) pivots."""
    m = [row[:] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[tuple[int, int]] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        for i in range(r + 1, n_rows):
            factor = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, n_cols):
                row_i[j] = (row_i[j] * pivot - factor * row_r[j]) // prev
        pivots.append((r, c))
        prev = pivot
        r += 1
        if r == n_rows:
            break
    return m, pivots


def _exact_nullspace_vector(matrix: list[list[Fraction]]) -> tuple[list[Fraction], int, int]:
    """Unique (up to scale) rational nullspace vector; errors unless nullity=1."""
    n_cols = len(matrix[0])
    integer_rows = []
    for row in matrix:
        den = 1
        for value in row:
            den = lcm(den, value.denominator)
        integer_rows.append([int(value * den) for value in row])
    echelon, pivots = _bareiss_echelon(integer_rows)
    rank = len(pivots)
    nullity = n_cols - rank
    if nullity == 0:
        raise NoCurve("no curve of this degree passes through the points")
    if nullity > 1:
        raise RankDeficient(
            f"points leave {nullity} degrees of freedom; add points or lower the degree")
    free_col = next(c for c in range(n_cols) if c not in {c for _, c in pivots})
    solution = [Fraction(0)] * n_cols
    solution[free_col] = Fraction(1)
    for r, c in reversed(pivots):
        acc = Fraction(0)
        for j in range(c + 1, n_cols):
            if echelon[r][j]:
                acc += Fraction(echelon[r][j]) * solution[j]
        solution[c] = -acc / echelon[r][c]
    return solution, rank, nullity


def _inverse_iteration(b: np.ndarray, deflate=()) -> tuple[np.ndarray, int, bool]:
    """Inverse power iteration on a Gram matrix toward its smallest eigenvector
    (Tikhonov-shifted, which leaves eigenvectors unchanged), orthogonalized
    against already-found directions."""
    k = b.shape[0]
    shift = np.finfo(float).eps * (float(np.trace(b)) / k + 1e-300)
    a = b + shift * np.eye(k)
    c = np.full(k, 1.0 / np.sqrt(k))
    for d in deflate:
        c = c - (c @ d) * d
    c /= np.linalg.norm(c)
    for iteration in range(1, POWER_ITERATION_MAX + 1):
        try:
            z = np.linalg.solve(a, c)
        except np.linalg.LinAlgError:
            shift *= 10.0
            a = b + shift * np.eye(k)
            continue
        for d in deflate:
            z = z - (z @ d) * d
        norm = float(np.linalg.norm(z))
        if norm == 0.0 or not np.isfinite(norm):
            shift *= 10.0
            a = b + shift * np.eye(k)
            continue
        c_new = z / norm
        if float(c_new @ c) < 0.0:
            c_new = -c_new
        if float(np.linalg.norm(c_new - c)) < POWER_ITERATION_TOL:
            return c_new, iteration, True
        c = c_new
    return c, POWER_ITERATION_MAX, False


def _display_polynomial(coeffs: np.ndarray, columns) -> Polynomial:
    """Round float coefficients to a canonical polynomial (display only).

    Fixed-denominator rounding keeps the canonical integers bounded; clean
    small-rational fits (e.g. the unit circle) still round back exactly.
    """
    peak = float(np.max(np.abs(coeffs)))
    terms = {}
    for value, mono in zip(coeffs, columns):
        if abs(value) >= DISPLAY_NOISE_FLOOR * peak:
            rounded = Fraction(round(float(value) / peak * DISPLAY_DENOMINATOR),
                               DISPLAY_DENOMINATOR)
            if rounded:
                terms[mono] = rounded
    if not terms:
        terms[columns[int(np.argmax(np.abs(coeffs)))]] = Fraction(1)
    return Polynomial(XY, terms)


def fit_implicit(prob: FitProblem) -> FitResult:
    """Fit the implicit curve of ``prob.degree`` through ``prob.points``."""
    prob.validate()
    columns = monomial_columns(prob.degree)

    if prob.mode == "exact":
        points = [(Fraction(px), Fraction(py)) for px, py in prob.points]
        matrix = [[px**a * py**b for a, b in columns] for px, py in points]
        solution, rank, nullity = _exact_nullspace_vector(matrix)
        poly = Polynomial(XY, dict(zip(columns, solution)))
        canonical, text = canonicalize(poly)
        coeffs = [float(canonical.terms.get(m, 0)) for m in columns]
        return FitResult(polynomial=canonical, string=text, mode="exact",
                         rank=rank, nullity=nullity, columns=columns,
                         coefficients=coeffs)

    pts = np.asarray([(float(px), float(py)) for px, py in prob.points])
    v = (pts[:, 0:1] ** np.array([a for a, _ in columns])
         * pts[:, 1:2] ** np.array([b for _, b in columns]))
    m, k = v.shape
    # column equilibration: monomial columns span many orders of magnitude and
    # would otherwise push the small singular values below float noise
    norms = np.linalg.norm(v, axis=0)
    norms[norms == 0.0] = 1.0
    scaled = v / norms
    gram = scaled.T @ scaled
    # machine-zero threshold relative to ||scaled||_F <= sqrt(k)
    tol = max(m, k) * np.finfo(float).eps * np.sqrt(k)
    first, iterations, converged = _inverse_iteration(gram)
    second, _, _ = _inverse_iteration(gram, deflate=(first,))
    sigmas = (float(np.linalg.norm(scaled @ first)),
              float(np.linalg.norm(scaled @ second)))
    if sigmas[1] <= tol:
        raise RankDeficient("points leave more than one numeric degree of freedom")
    nullity = max(sum(1 for s in sigmas if s <= tol), k - m)
    rank = k - nullity
    direction = first / norms
    direction /= np.linalg.norm(direction)
    canonical, text = canonicalize(_display_polynomial(direction, columns))
    return FitResult(polynomial=canonical, string=text, mode="leastsq",
                     rank=rank, nullity=nullity, columns=columns,
                     coefficients=[float(c) for c in direction],
                     iterations=iterations, converged=converged,
                     sigma=float(np.linalg.norm(v @ direction)))


def parse_points(text: str, mode: str) -> list:
    """Parse 'x,y' rows; exact mode reads rationals, leastsq reads floats."""
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ValidationError(f"line {lineno}: expected 'x,y'")
        if mode == "exact":
            points.append((parse_rational(parts[0]), parse_rational(parts[1])))
        else:
            try:
                points.append((float(parts[0]), float(parts[1])))
            except ValueError as exc:
                raise ValidationError(f"line {lineno}: not a float") from exc
    return points
