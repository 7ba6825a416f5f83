"""Dense integer polynomials with exact real-root machinery.

Coefficients are arbitrary-precision Python ints stored constant term
first.  Real-root counting and isolation use exact Sturm sequences over
``fractions.Fraction``; bisection endpoints stay dyadic, so every
enclosure is certified.  Complex roots (needed for Mahler measures and
Salem tests) are delegated to ``mpmath.polyroots``, a simultaneous
iteration with an a-posteriori error estimate, at a working precision
raised until the estimate meets the requested tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .errors import NoRealRoot, ValidationError


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, constant term first, no trailing zeros.

    The zero polynomial is the empty coefficient tuple and has degree -1.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not isinstance(c, int) for c in self.coeffs):
            raise ValidationError("polynomial coefficients must be integers")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValidationError("polynomial not in canonical form (trailing zero)")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        if self.is_zero:
            return 0
        return self.coeffs[-1]

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int, Fraction, float, complex."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_coeffs(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial.zero()
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.from_coeffs(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def stretched(self, k: int) -> "IntPolynomial":
        """Return p(x**k)."""
        if self.is_zero:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPolynomial.from_coeffs(out)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.from_coeffs(
            i * c for i, c in enumerate(self.coeffs) if i > 0
        )

    def is_reciprocal(self) -> bool:
        """Coefficient palindrome up to a global sign (exact check)."""
        if self.is_zero:
            return False
        rev = tuple(reversed(self.coeffs))
        return rev == self.coeffs or rev == tuple(-c for c in self.coeffs)

    def exact_divide(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient self / divisor over the integers.

        Raises ValidationError if the division leaves a remainder or a
        non-integer coefficient.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        num = [Fraction(c) for c in self.coeffs]
        den = [Fraction(c) for c in divisor.coeffs]
        quo, rem = _frac_divmod(num, den)
        if any(r != 0 for r in rem):
            raise ValidationError("polynomial division is not exact")
        if any(q.denominator != 1 for q in quo):
            raise ValidationError("polynomial quotient is not integral")
        return IntPolynomial.from_coeffs(int(q) for q in quo)

    def divides(self, other: "IntPolynomial") -> bool:
        """True iff self divides other exactly over the rationals."""
        try:
            other.exact_divide(self)
        except ValidationError:
            return False
        return True

    def __str__(self) -> str:
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# Fraction-coefficient helpers (dense, ascending order)

def _frac_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _frac_divmod(num: Sequence[Fraction], den: Sequence[Fraction]):
    num = _frac_trim(list(num))
    den = _frac_trim(list(den))
    if not den:
        raise ZeroDivisionError
    quo = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    rem = list(num)
    dl = den[-1]
    while len(rem) >= len(den) and rem:
        k = len(rem) - len(den)
        q = rem[-1] / dl
        quo[k] = q
        for i, d in enumerate(den):
            rem[k + i] -= q * d
        _frac_trim(rem)
    return quo, rem


def _frac_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _frac_trim(list(a)), _frac_trim(list(b))
    while b:
        _, r = _frac_divmod(a, b)
        a, b = b, r
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def _sturm_chain(p: IntPolynomial) -> list[list[Fraction]]:
    """Sturm chain of the square-free part of p."""
    f = [Fraction(c) for c in p.coeffs]
    fp = [Fraction(c) for c in p.derivative().coeffs]
    g = _frac_gcd(f, fp)
    if len(g) > 1:
        f, _ = _frac_divmod(f, g)
    chain = [_frac_trim(list(f))]
    d = _frac_trim([i * c for i, c in enumerate(chain[0]) if i > 0])
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        _, r = _frac_divmod(chain[-2], chain[-1])
        r = [-c for c in r]
        if not _frac_trim(r):
            break
        chain.append(r)
    return chain


def _eval_frac(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_variations(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _eval_frac(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """All real roots of p lie in (-B, B]."""
    if p.is_zero or p.degree < 1:
        return Fraction(1)
    lc = abs(p.leading_coefficient)
    return 1 + max(Fraction(abs(c), lc) for c in p.coeffs[:-1])


def count_real_roots(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    if p.is_zero:
        raise ValidationError("root counting needs a nonzero polynomial")
    if lo >= hi:
        return 0
    chain = _sturm_chain(p)
    return _sign_variations(chain, Fraction(lo)) - _sign_variations(chain, Fraction(hi))


def largest_real_root_interval(
    p: IntPolynomial, tol: float = 1e-12
) -> tuple[Fraction, Fraction]:
    """Certified dyadic enclosure (lo, hi] of the largest real root of p."""
    if p.is_zero or p.degree < 1:
        raise NoRealRoot("polynomial has no real root")
    chain = _sturm_chain(p)
    bound = cauchy_bound(p)
    # integer endpoints keep all bisection midpoints dyadic
    hi = Fraction(bound.numerator // bound.denominator + 1)
    lo = -hi
    v_hi = _sign_variations(chain, hi)
    if _sign_variations(chain, lo) - v_hi == 0:
        raise NoRealRoot("polynomial has no real root")
    width = Fraction(tol).limit_denominator(10**18)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _sign_variations(chain, mid) - v_hi >= 1:
            lo = mid  # a root remains above mid, so the largest does too
        else:
            hi = mid
    return lo, hi


def largest_real_root(p: IntPolynomial, tol: float = 1e-12) -> float:
    """Largest real root of p within +-tol."""
    lo, hi = largest_real_root_interval(p, tol)
    return float((lo + hi) / 2)


# ---------------------------------------------------------------------------
# Complex roots

def complex_roots(p: IntPolynomial, tol: float = 1e-12) -> list[complex]:
    """All complex roots (with multiplicity), each within tol in modulus.

    mpmath's simultaneous iteration reports an a-posteriori error bound;
    the working precision is doubled until that bound meets tol.
    """
    if p.is_zero:
        raise ValidationError("the zero polynomial has no root set")
    if p.degree == 0:
        return []
    coeffs_desc = [int(c) for c in reversed(p.coeffs)]
    dps = 30
    while True:
        with mpmath.workdps(dps):
            roots, err = mpmath.polyroots(
                coeffs_desc, maxsteps=200, extraprec=80, error=True
            )
            if err <= tol or dps >= 400:
                return [complex(r) for r in roots]
        dps *= 2


# ---------------------------------------------------------------------------
# Text format

def format_polynomial(p: IntPolynomial, var: str = "x") -> str:
    if p.is_zero:
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = f"{var}" if mag == 1 else f"{mag}{var}"
        else:
            body = f"{var}^{i}" if mag == 1 else f"{mag}{var}^{i}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def parse_polynomial(text: str, var: str = "x") -> IntPolynomial:
    """Parse ``x^10 + x^9 - x^7 - 2x + 1`` style text (or a bare integer)."""
    s = text.replace("*", "").replace(" ", "")
    if not s:
        raise ValidationError("empty polynomial text")
    # split into signed terms
    terms: list[str] = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "+-^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs: dict[int, int] = {}
    for t in terms:
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        if not t:
            raise ValidationError(f"malformed polynomial term in {text!r}")
        if var in t:
            head, _, tail = t.partition(var)
            coeff = int(head) if head else 1
            if tail.startswith("^"):
                power = int(tail[1:])
            elif tail == "":
                power = 1
            else:
                raise ValidationError(f"malformed polynomial term {t!r}")
        else:
            coeff = int(t)
            power = 0
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
    size = max(coeffs) + 1 if coeffs else 0
    out = [0] * size
    for k, v in coeffs.items():
        out[k] = v
    return IntPolynomial.from_coeffs(out)
