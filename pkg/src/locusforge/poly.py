"""Exact multivariate polynomial arithmetic over arbitrary-precision rationals.

Monomials are fixed-length exponent tuples indexed by a shared variable
context (an ordered tuple of names).  Polynomials map monomials to nonzero
Fraction coefficients; the zero polynomial has an empty term map.  Values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import ContextMismatch, ValidationError, ZeroPolynomial

# Exponents are bounded so degree bookkeeping can never silently wrap.
MAX_EXPONENT = 2**31 - 1

Exponents = tuple[int, ...]


def parse_rational(text: str) -> Fraction:
    """Parse an integer or 'p/q' string into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a Fraction as 'p/q', or plain 'p' when the denominator is 1."""
    return str(value)


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def mono_degree(m: Exponents) -> int:
    return sum(m)


def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in out):
        raise OverflowError("monomial exponent exceeds 32-bit bound")
    return out


def mono_divides(a: Exponents, b: Exponents) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Exponents, b: Exponents) -> Exponents:
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Total, multiplicative monomial order with 1 minimal.

    Kinds: lex, grlex (graded lexicographic), grevlex (graded reverse
    lexicographic) and block(k).  block(k) compares the first k variables by
    grevlex and the remaining ones by grlex, so any monomial containing one of
    the first k variables sorts above every monomial that does not -- the
    property elimination relies on.

    ``key`` maps an exponent tuple to a flat integer tuple whose natural
    ordering realizes the monomial order (larger key = larger monomial).
    """

    __slots__ = ("kind", "elim_count")

    def __init__(self, kind: str, elim_count: int = 0):
        if kind not in ("lex", "grlex", "grevlex", "block"):
            raise ValidationError(f"unknown monomial order: {kind!r}")
        if kind == "block" and elim_count < 0:
            raise ValidationError("block order needs elim_count >= 0")
        self.kind = kind
        self.elim_count = elim_count if kind == "block" else 0

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grlex(cls) -> "MonomialOrder":
        return cls("grlex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def block(cls, elim_count: int) -> "MonomialOrder":
        return cls("block", elim_count)

    def key(self, m: Exponents) -> tuple[int, ...]:
        kind = self.kind
        if kind == "lex":
            return m
        if kind == "grlex":
            return (sum(m),) + m
        if kind == "grevlex":
            return (sum(m),) + tuple(-e for e in reversed(m))
        k = self.elim_count
        front, back = m[:k], m[k:]
        return ((sum(front),) + tuple(-e for e in reversed(front))
                + (sum(back),) + back)

    def max_monomial(self, monomials) -> Exponents:
        return max(monomials, key=self.key)

    def sorted_desc(self, monomials) -> list[Exponents]:
        return sorted(monomials, key=self.key, reverse=True)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind
                and self.elim_count == other.elim_count)

    def __hash__(self):
        return hash((self.kind, self.elim_count))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder.block({self.elim_count})"
        return f"MonomialOrder.{self.kind}()"


GRLEX = MonomialOrder.grlex()


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Immutable multivariate polynomial with exact Fraction coefficients."""

    __slots__ = ("context", "terms")

    def __init__(self, context: tuple[str, ...], terms=None):
        self.context = tuple(context)
        n = len(self.context)
        clean: dict[Exponents, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValidationError("exponent tuple length != context size")
            if any(e < 0 or e > MAX_EXPONENT for e in mono):
                raise ValidationError("exponents must be in [0, 2^31)")
            coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if coeff != 0:
                clean[mono] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, context: tuple[str, ...], terms: dict) -> "Polynomial":
        """Fast constructor for internal use; terms must be pre-pruned."""
        p = object.__new__(cls)
        p.context = context
        p.terms = terms
        return p

    @classmethod
    def zero(cls, context) -> "Polynomial":
        return cls._raw(tuple(context), {})

    @classmethod
    def constant(cls, context, value) -> "Polynomial":
        context = tuple(context)
        value = Fraction(value)
        if value == 0:
            return cls._raw(context, {})
        return cls._raw(context, {(0,) * len(context): value})

    @classmethod
    def variable(cls, context, name: str) -> "Polynomial":
        context = tuple(context)
        try:
            i = context.index(name)
        except ValueError:
            raise ValidationError(f"variable {name!r} not in context {context}")
        mono = tuple(1 if j == i else 0 for j in range(len(context)))
        return cls._raw(context, {mono: Fraction(1)})

    # -- predicates and views ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def coefficient(self, mono: Exponents) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def variables_used(self) -> set[str]:
        used = set()
        for mono in self.terms:
            for name, e in zip(self.context, mono):
                if e:
                    used.add(name)
        return used

    # -- arithmetic ----------------------------------------------------------

    def _check_context(self, other: "Polynomial") -> None:
        if self.context != other.context:
            raise ContextMismatch(
                f"contexts differ: {self.context} vs {other.context}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.context, other)
        self._check_context(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.context, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.context,
                               {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.context, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return Polynomial.zero(self.context)
            return Polynomial._raw(self.context,
                                   {m: cc * c for m, cc in self.terms.items()})
        self._check_context(other)
        out: dict[Exponents, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.context, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValidationError("polynomial powers must be non-negative ints")
        result = Polynomial.constant(self.context, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.context == other.context
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    # -- structure -----------------------------------------------------------

    def leading_term(self, order: MonomialOrder) -> tuple[Exponents, Fraction]:
        """Maximal (monomial, coefficient) under ``order``."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        m = order.max_monomial(self.terms)
        return m, self.terms[m]

    def evaluate(self, values: dict[str, Fraction]) -> Fraction:
        """Exact evaluation; every context variable must be assigned."""
        point = []
        for name in self.context:
            if name not in values:
                raise ValidationError(f"no value for variable {name!r}")
            point.append(Fraction(values[name]))
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for v, e in zip(point, mono):
                if e:
                    term *= v**e
            total += term
        return total

    def with_context(self, new_context) -> "Polynomial":
        """Re-express in another context; every used variable must survive."""
        new_context = tuple(new_context)
        index = {name: i for i, name in enumerate(new_context)}
        n = len(new_context)
        out: dict[Exponents, Fraction] = {}
        for mono, coeff in self.terms.items():
            exps = [0] * n
            for name, e in zip(self.context, mono):
                if not e:
                    continue
                if name not in index:
                    raise ContextMismatch(
                        f"variable {name!r} not in target context {new_context}")
                exps[index[name]] = e
            out[tuple(exps)] = coeff
        return Polynomial._raw(new_context, out)

    def substitute(self, mapping: dict[str, "Polynomial"]) -> "Polynomial":
        """Replace variables by polynomials.

        All replacement polynomials must share one context; unmapped variables
        pass through and must exist in that target context.
        """
        if not mapping:
            return self
        target = next(iter(mapping.values())).context
        for img in mapping.values():
            if img.context != target:
                raise ContextMismatch("replacement polynomials disagree on context")
        images = {}
        for name in self.context:
            images[name] = mapping.get(name) or Polynomial.variable(target, name)
        result = Polynomial.zero(target)
        for mono, coeff in self.terms.items():
            term = Polynomial.constant(target, coeff)
            for name, e in zip(self.context, mono):
                if e:
                    term = term * images[name] ** e
            result = result + term
        return result

    def __repr__(self):
        return f"Polynomial({'0' if self.is_zero() else polynomial_string(self)})"


# ---------------------------------------------------------------------------
# canonical form and rendering
# ---------------------------------------------------------------------------

def primitive_scale(p: Polynomial, order: MonomialOrder) -> Polynomial:
    """Scale by the positive rational giving integer coefficients with gcd 1
    and a positive leading coefficient under ``order``."""
    if p.is_zero():
        return p
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    scale = Fraction(den, num)
    lead = p.terms[order.max_monomial(p.terms)]
    if lead < 0:
        scale = -scale
    return p * scale


def canonicalize(p: Polynomial) -> tuple[Polynomial, str]:
    """Unique scaled form (integer coefficients, content 1, positive
    grlex-leading coefficient) plus its canonical string."""
    if p.is_zero():
        raise ZeroPolynomial("cannot canonicalize the zero polynomial")
    q = primitive_scale(p, GRLEX)
    return q, polynomial_string(q)


def polynomial_string(p: Polynomial) -> str:
    """Render terms in descending graded-lex.

    Grammar: ``term (" + " | " - ") term ...`` where a term is
    ``[coeff]["*"]var["^"exp]...`` -- unit coefficients are omitted unless the
    term is constant, exponent 1 is implicit, factors join with ``*`` and
    variables appear in context order.
    """
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for mono in GRLEX.sorted_desc(p.terms):
        coeff = p.terms[mono]
        factors = []
        for name, e in zip(p.context, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if not factors or mag != 1:
            factors.insert(0, format_rational(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append((" + " if coeff > 0 else " - ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------

def infer_context(names) -> tuple[str, ...]:
    """Deterministic variable ordering: x, then y, then the rest sorted."""
    names = set(names)
    ordered = [n for n in ("x", "y") if n in names]
    ordered += sorted(names - {"x", "y"})
    return tuple(ordered)


class _Tokenizer:
    def __init__(self, text: str):
        self.tokens: list[tuple[str, str]] = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j]))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("name", text[i:j]))
                i = j
            elif text.startswith("**", i):
                self.tokens.append(("op", "^"))
                i += 2
            elif ch in "+-*/^()":
                self.tokens.append(("op", ch))
                i += 1
            else:
                raise ValidationError(f"unexpected character {ch!r} in expression")
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok


def expression_names(text: str) -> set[str]:
    return {v for k, v in _Tokenizer(text).tokens if k == "name"}


def parse_polynomial(text: str, context=None) -> Polynomial:
    """Parse an expression like ``(x+1)*(x-1) + y^2`` or ``11/2*Ex``.

    Accepts rational literals (``p/q``), ``+ - * ^`` (or ``**``) and
    parentheses; multiplication is always explicit.  When ``context`` is None
    it is inferred from the variables present (x, y first, rest alphabetical).
    """
    if context is None:
        context = infer_context(expression_names(text))
    context = tuple(context)
    toks = _Tokenizer(text)

    def expect_op(op):
        kind, val = toks.next()
        if kind != "op" or val != op:
            raise ValidationError(f"expected {op!r} in expression {text!r}")

    def parse_expr():
        kind, val = toks.peek()
        negate = False
        if kind == "op" and val in "+-":
            toks.next()
            negate = val == "-"
        node = parse_term()
        if negate:
            node = -node
        while True:
            kind, val = toks.peek()
            if kind == "op" and val in "+-":
                toks.next()
                rhs = parse_term()
                node = node - rhs if val == "-" else node + rhs
            else:
                return node

    def parse_term():
        node = parse_power()
        while True:
            kind, val = toks.peek()
            if kind == "op" and val == "*":
                toks.next()
                node = node * parse_power()
            else:
                return node

    def parse_power():
        base = parse_atom()
        kind, val = toks.peek()
        if kind == "op" and val == "^":
            toks.next()
            kind, val = toks.next()
            if kind != "int":
                raise ValidationError("exponent must be a non-negative integer")
            return base ** int(val)
        return base

    def parse_atom():
        kind, val = toks.next()
        if kind == "int":
            num = int(val)
            k2, v2 = toks.peek()
            if k2 == "op" and v2 == "/":
                toks.next()
                k3, v3 = toks.next()
                if k3 != "int":
                    raise ValidationError(
                        "'/' is only allowed between integer literals")
                return Polynomial.constant(context, Fraction(num, int(v3)))
            return Polynomial.constant(context, num)
        if kind == "name":
            return Polynomial.variable(context, val)
        if kind == "op" and val == "(":
            node = parse_expr()
            expect_op(")")
            return node
        if kind == "op" and val == "-":
            return -parse_atom()
        raise ValidationError(f"cannot parse expression {text!r}")

    result = parse_expr()
    if toks.peek() != (None, None):
        raise ValidationError(f"trailing input in expression {text!r}")
    return result
