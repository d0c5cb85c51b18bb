"""Planar 4-bar linkage model and its polynomial constraint system.

Fixed pivots A and B, cranks AE (length f1) and BH (length f2), coupler bar
EH (length g).  The tracked point M sits rigidly on the coupler frame:

    M = E + u*(H - E) + v*R90(H - E),   R90(a, b) = (-b, a)

so u = 0 lands on E and u = 1 on H, with v the offset perpendicular to EH.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCoupler, InvalidSpec, ValidationError
from .poly import Polynomial, format_rational, parse_rational

FULL_CONTEXT = ("Ex", "Ey", "Hx", "Hy", "x", "y")
REDUCED_CONTEXT = ("Ex", "Ey", "x", "y")
RETAINED = ("x", "y")

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class LinkageSpec:
    """Exact-rational slider state of the linkage explorer."""

    A: Point
    B: Point
    f1: Fraction
    f2: Fraction
    g: Fraction
    u: Fraction
    v: Fraction

    def validate(self) -> None:
        if not (self.f1 > 0 and self.f2 > 0 and self.g > 0):
            raise InvalidSpec("bar lengths f1, f2, g must be positive")
        if self.A == self.B:
            raise InvalidSpec("fixed pivots A and B must differ")

    @classmethod
    def default(cls, u=Fraction(0), v=Fraction(0)) -> "LinkageSpec":
        """Documented default: A=(0,0), B=(15,0), equal cranks 11/2, coupler 12."""
        return cls(A=(Fraction(0), Fraction(0)), B=(Fraction(15), Fraction(0)),
                   f1=Fraction(11, 2), f2=Fraction(11, 2), g=Fraction(12),
                   u=Fraction(u), v=Fraction(v))

    @classmethod
    def from_json(cls, data: dict) -> "LinkageSpec":
        """Parse the shared JSON schema (rationals as 'p/q' or integer strings)."""
        if not isinstance(data, dict):
            raise InvalidSpec("spec must be a JSON object")
        try:
            def point(key):
                raw = data[key]
                if not (isinstance(raw, (list, tuple)) and len(raw) == 2):
                    raise InvalidSpec(f"{key} must be a pair of rational strings")
                return (parse_rational(str(raw[0])), parse_rational(str(raw[1])))

            spec = cls(
                A=point("A"), B=point("B"),
                f1=parse_rational(str(data["f1"])),
                f2=parse_rational(str(data["f2"])),
                g=parse_rational(str(data["g"])),
                u=parse_rational(str(data["u"])),
                v=parse_rational(str(data["v"])),
            )
        except KeyError as exc:
            raise InvalidSpec(f"missing spec field {exc.args[0]!r}") from exc
        except ValidationError as exc:
            raise InvalidSpec(str(exc)) from exc
        spec.validate()
        return spec

    def to_json(self) -> dict:
        return {
            "A": [format_rational(self.A[0]), format_rational(self.A[1])],
            "B": [format_rational(self.B[0]), format_rational(self.B[1])],
            "f1": format_rational(self.f1),
            "f2": format_rational(self.f2),
            "g": format_rational(self.g),
            "u": format_rational(self.u),
            "v": format_rational(self.v),
        }


@dataclass
class ConstraintSystem:
    """Polynomial equations whose zero set projects onto the coupler locus."""

    variables: tuple[str, ...]
    polynomials: list[Polynomial]
    retained: tuple[str, str] = RETAINED


def build_constraints(spec: LinkageSpec) -> ConstraintSystem:
    """Three circle constraints plus the two linear equations defining M=(x,y)."""
    spec.validate()
    ctx = FULL_CONTEXT
    Ex, Ey, Hx, Hy, x, y = (Polynomial.variable(ctx, v) for v in ctx)
    (ax, ay), (bx, by) = spec.A, spec.B
    u, v = spec.u, spec.v

    circle_e = (Ex - ax) ** 2 + (Ey - ay) ** 2 - spec.f1 ** 2
    circle_h = (Hx - bx) ** 2 + (Hy - by) ** 2 - spec.f2 ** 2
    coupler = (Hx - Ex) ** 2 + (Hy - Ey) ** 2 - spec.g ** 2
    m_x = x - (Ex + u * (Hx - Ex) - v * (Hy - Ey))
    m_y = y - (Ey + u * (Hy - Ey) + v * (Hx - Ex))
    return ConstraintSystem(ctx, [circle_e, circle_h, coupler, m_x, m_y])


def coupler_inverse(spec: LinkageSpec) -> tuple[Polynomial, Polynomial]:
    """Solve the M-equations exactly for H over the reduced context.

    The 2x2 linear system in (Hx-Ex, Hy-Ey) has determinant u^2+v^2, nonzero
    whenever (u, v) != (0, 0).
    """
    u, v = spec.u, spec.v
    det = u * u + v * v
    if det == 0:
        raise DegenerateCoupler(
            "u = v = 0: M coincides with E; use the unreduced system")
    ctx = REDUCED_CONTEXT
    Ex, Ey, x, y = (Polynomial.variable(ctx, name) for name in ctx)
    dx = (u * (x - Ex) + v * (y - Ey)) * (1 / det)
    dy = (-v * (x - Ex) + u * (y - Ey)) * (1 / det)
    return Ex + dx, Ey + dy


def reduce_variables(cs: ConstraintSystem, spec: LinkageSpec) -> ConstraintSystem:
    """Substitute the exact H solution into the circle constraints, turning the
    six-variable system into one over (Ex, Ey, x, y) with the same projection."""
    if cs.variables != FULL_CONTEXT:
        raise ValidationError("reduce_variables expects the unreduced system")
    hx, hy = coupler_inverse(spec)
    ctx = REDUCED_CONTEXT
    mapping = {
        "Ex": Polynomial.variable(ctx, "Ex"),
        "Ey": Polynomial.variable(ctx, "Ey"),
        "x": Polynomial.variable(ctx, "x"),
        "y": Polynomial.variable(ctx, "y"),
        "Hx": hx,
        "Hy": hy,
    }
    substituted = [p.substitute(mapping) for p in cs.polynomials]
    # the two M-defining equations vanish identically under their own solution
    kept = [p for p in substituted if not p.is_zero()]
    return ConstraintSystem(ctx, kept)
