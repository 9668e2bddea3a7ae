"""
Exact rational generating functions and the counting identities built on
them: the sum-closure quotient, the centrosymmetric convolution, the
binomial formula for monotone-pattern avoidance, growth rates read off a
denominator, and threshold-root computation.

All series and polynomial arithmetic is exact (integers and Fractions);
floating point appears only in root finding, with stated tolerances.

Polynomial text looks like "1-3x+2x^2-x^3"; parenthesised factors and
powers such as "(1-x)^2" are accepted. A rational function is written
"num/den" with the '/' at the top level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import classes
from .perms import Perm

ROOT_TOL = 1e-9


# ---------------------------------------------------------------------------
# Dense integer polynomials


@dataclass(frozen=True)
class Polynomial:
    """Integer coefficients in ascending order, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        trimmed = _trim(self.coeffs)
        object.__setattr__(self, "coeffs", trimmed)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b) :])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-x for x in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(tuple(out))

    def __pow__(self, k: int) -> "Polynomial":
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __str__(self) -> str:
        return poly_text(self)


def _trim(coeffs) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


ZERO = Polynomial(())
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def poly_text(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = "x" if mag == 1 else f"{mag}x"
        else:
            body = f"x^{i}" if mag == 1 else f"{mag}x^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _content(p: Polynomial) -> int:
    return math.gcd(*p.coeffs) if p.coeffs else 0


def _primitive(coeffs: list[Fraction]) -> Polynomial:
    """Scale a rational-coefficient polynomial to primitive integer form."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return ZERO
    scale = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    g = math.gcd(*ints)
    return Polynomial(tuple(v // g for v in ints))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive greatest common divisor, positive leading coefficient."""
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]
    while fb and any(fb):
        while fb and fb[-1] == 0:
            fb.pop()
        if not fb:
            break
        # remainder of fa by fb (fb made monic to keep numbers small)
        lead = fb[-1]
        fb = [c / lead for c in fb]
        while len(fa) >= len(fb) and any(fa):
            while fa and fa[-1] == 0:
                fa.pop()
            if len(fa) < len(fb):
                break
            factor = fa[-1]
            offset = len(fa) - len(fb)
            for i, c in enumerate(fb):
                fa[offset + i] -= factor * c
            while fa and fa[-1] == 0:
                fa.pop()
        fa, fb = fb, fa
    result = _primitive(list(fa))
    if result.coeffs and result.coeffs[-1] < 0:
        result = -result
    return result if not result.is_zero() else ONE


def poly_div_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Divide a by b, which must divide exactly."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    div = [Fraction(c) for c in b.coeffs]
    out = [Fraction(0)] * max(len(rem) - len(div) + 1, 0)
    while len(rem) >= len(div) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(div):
            break
        factor = rem[-1] / div[-1]
        offset = len(rem) - len(div)
        out[offset] = factor
        for i, c in enumerate(div):
            rem[offset + i] -= factor * c
        while rem and rem[-1] == 0:
            rem.pop()
    if any(rem):
        raise ValueError("polynomial division was not exact")
    if any(c.denominator != 1 for c in out):
        raise ValueError("polynomial division left fractional coefficients")
    return Polynomial(tuple(int(c) for c in out))


# ---------------------------------------------------------------------------
# Rational generating functions


@dataclass(frozen=True)
class RationalGF:
    """num/den in lowest terms, den(0) > 0."""

    num: Polynomial
    den: Polynomial

    def __post_init__(self) -> None:
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if self.den.constant_term() == 0:
            raise ValueError("denominator must have a non-zero constant term")
        num, den = self.num, self.den
        if num.is_zero():
            den = ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = poly_div_exact(num, g)
                den = poly_div_exact(den, g)
            shared = math.gcd(_content(num), _content(den))
            if shared > 1:
                num = Polynomial(tuple(c // shared for c in num.coeffs))
                den = Polynomial(tuple(c // shared for c in den.coeffs))
        if den.constant_term() < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __add__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(self.num * other.num, self.den * other.den)

    def __str__(self) -> str:
        return f"({poly_text(self.num)})/({poly_text(self.den)})"


def gf_constant(value: int) -> RationalGF:
    return RationalGF(Polynomial((value,)), ONE)


# ---------------------------------------------------------------------------
# Truncated series


@dataclass(frozen=True)
class Series:
    """Exact rational coefficients up to a recorded truncation order."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        """Number of known coefficients; arithmetic never extends it."""
        return len(self.coeffs)

    @staticmethod
    def from_ints(values) -> "Series":
        return Series(tuple(Fraction(v) for v in values))

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs))[:order])

    def __sub__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(tuple(a - b for a, b in zip(self.coeffs, other.coeffs))[:order])

    def __mul__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        out = [Fraction(0)] * order
        for i, a in enumerate(self.coeffs[:order]):
            if a:
                for j, b in enumerate(other.coeffs[: order - i]):
                    out[i + j] += a * b
        return Series(tuple(out))

    def as_ints(self) -> tuple[int, ...]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("series has non-integer coefficients")
        return tuple(int(c) for c in self.coeffs)


def expand(gf: RationalGF, terms: int) -> Series:
    """
    First `terms` Taylor coefficients of num/den, by the linear recurrence
    den(0) s_n = num_n - sum_{i>=1} den_i s_{n-i}.

    >>> expand(RationalGF(ONE, Polynomial((1, -2))), 5).as_ints()
    (1, 2, 4, 8, 16)
    """
    if terms < 1:
        raise ValueError("need at least one term")
    d0 = Fraction(gf.den.constant_term())
    num = gf.num.coeffs
    den = gf.den.coeffs
    out: list[Fraction] = []
    for n in range(terms):
        acc = Fraction(num[n]) if n < len(num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        out.append(acc / d0)
    return Series(tuple(out))


def sum_closure_gf(c: RationalGF) -> RationalGF:
    """
    1/(1-C): the class series of a sum closure, from the series of its
    indecomposables (which must have zero constant term).
    """
    if expand(c, 1).coeffs[0] != 0:
        raise ValueError("indecomposable series must have zero constant term")
    return RationalGF(c.den, c.den - c.num)


def rc_gf(d: RationalGF, a: RationalGF) -> RationalGF:
    """
    (1 + D) * A: the even-size centrosymmetric series of a sum closed
    rc-invariant class, from its class series A and the series D of its
    centrosymmetric indecomposables (zero constant term, weight = half
    the size).
    """
    if expand(d, 1).coeffs[0] != 0:
        raise ValueError("centrosymmetric indecomposable series must have zero constant term")
    return RationalGF((d.den + d.num) * a.num, d.den * a.den)


@dataclass(frozen=True)
class ConvolutionReport:
    spec_text: str
    max_n: int
    holds: bool
    first_failure: int | None = None
    expected: int | None = None
    actual: int | None = None


def check_convolution(table: "classes.CountTable") -> ConvolutionReport:
    """
    Verify b_n = a_n + sum_{k=1..n} a_{n-k} d_k on a count table of a sum
    closed rc-invariant class. A failing report is a finding, not an error.
    """
    top = min(len(table.b_even), len(table.d)) - 1
    for n in range(top + 1):
        rhs = table.a[n] + sum(table.a[n - k] * table.d[k] for k in range(1, n + 1))
        if table.b_even[n] != rhs:
            return ConvolutionReport(
                spec_text=table.spec_text,
                max_n=top,
                holds=False,
                first_failure=n,
                expected=rhs,
                actual=table.b_even[n],
            )
    return ConvolutionReport(spec_text=table.spec_text, max_n=top, holds=True)


# ---------------------------------------------------------------------------
# The binomial formula for centrosymmetric monotone-pattern avoiders


@lru_cache(maxsize=None)
def _monotone_avoider_count(m: int, j: int) -> int:
    """|Av_m(j...1)|, by (memoized) enumeration."""
    pattern: Perm = tuple(range(j, 0, -1))
    return len(classes.enumerate_class(classes.Avoid((pattern,)), m))


def egge_monotone(k: int, n: int) -> int:
    """
    The number of centrosymmetric permutations of size 2n avoiding the
    decreasing pattern of length k:

        sum_i binom(n,i)^2 * a_i^ceil((k+1)/2) * a_{n-i}^floor((k+1)/2)

    where a_m^j counts size-m permutations avoiding j...1.

    >>> egge_monotone(3, 3)
    20
    >>> egge_monotone(4, 2)
    7
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    p = (k + 2) // 2
    q = (k + 1) // 2
    return sum(
        math.comb(n, i) ** 2
        * _monotone_avoider_count(i, p)
        * _monotone_avoider_count(n - i, q)
        for i in range(n + 1)
    )


# ---------------------------------------------------------------------------
# Roots and growth rates


def _sign_changes(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _bisect(p: Polynomial, lo: float, hi: float) -> float:
    flo = p(lo)
    while hi - lo > ROOT_TOL:
        mid = (lo + hi) / 2
        fmid = p(mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


def _strip_zero_roots(p: Polynomial) -> Polynomial:
    coeffs = p.coeffs
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    return Polynomial(coeffs[k:])


def _square_free(p: Polynomial) -> Polynomial:
    g = poly_gcd(p, p.derivative())
    return poly_div_exact(p, g) if g.degree > 0 else p


def positive_root(p: Polynomial) -> float:
    """
    The unique positive real root of p, to 1e-9 by bisection. The
    coefficient sign-change count must be odd (so a positive root exists);
    when it exceeds one, uniqueness is confirmed by scanning the
    square-free part for sign changes.

    >>> round(positive_root(Polynomial((-1, -2, 1))), 6)
    2.414214
    """
    work = _strip_zero_roots(p)
    if work.degree < 1:
        raise ValueError("polynomial has no positive roots")
    changes = _sign_changes(work.coeffs)
    if changes == 0:
        raise ValueError("polynomial has no positive roots")
    if changes % 2 == 0:
        raise ValueError("polynomial may have zero or multiple positive roots")
    bound = 1 + max(abs(c) for c in work.coeffs) / abs(work.coeffs[-1])
    if changes > 1:
        sf = _square_free(work)
        brackets = _positive_brackets(sf, bound)
        if len(brackets) != 1:
            raise ValueError("polynomial has multiple positive roots")
    lo, hi = 0.0, 1.0
    f0 = work.coeffs[0]
    while (work(hi) > 0) == (f0 > 0):
        hi *= 2
        if hi > 2**64:
            raise ValueError("failed to bracket a positive root")
    return _bisect(work, lo, hi)


def _positive_brackets(p: Polynomial, bound: float, steps: int = 8192) -> list[tuple[float, float]]:
    """Sign-change intervals of p on (0, bound], on a uniform grid."""
    out = []
    prev_x = bound * 1e-12
    prev = p(prev_x)
    for i in range(1, steps + 1):
        x = bound * i / steps
        val = p(x)
        if val == 0:
            out.append((x, x))
            prev, prev_x = val, x
            continue
        if prev != 0 and (val > 0) != (prev > 0):
            out.append((prev_x, x))
        prev, prev_x = val, x
    return out


SUBEXPONENTIAL = "subexponential"


def growth_rate_rational(gf: RationalGF) -> float | str:
    """
    The exponential growth rate of the coefficients: 1/r for the smallest
    positive real root r of the denominator in (0, 1], found by
    sign-change isolation on the square-free part and bisection;
    "subexponential" when the denominator has no root there.
    """
    den = gf.den
    if den.degree < 1:
        return SUBEXPONENTIAL
    sf = _square_free(den)
    brackets = _positive_brackets(sf, 1.0, steps=4096)
    if not brackets:
        return SUBEXPONENTIAL
    lo, hi = brackets[0]
    root = lo if lo == hi else _bisect(sf, lo, hi)
    return 1.0 / root


def gf_from_eventually_periodic(head: list[int], period: list[int]) -> RationalGF:
    """
    The exact rational series whose expansion lists `head` and then
    repeats `period` forever.

    >>> gf_from_eventually_periodic([], [1])
    RationalGF(num=Polynomial(coeffs=(1,)), den=Polynomial(coeffs=(1, -1)))
    """
    if not period:
        raise ValueError("period must be non-empty")
    L = len(period)
    cycle_den = Polynomial(tuple([1] + [0] * (L - 1) + [-1]))  # 1 - x^L
    head_poly = Polynomial(tuple(head))
    period_poly = Polynomial(tuple(period))
    shift = Polynomial(tuple([0] * len(head) + [1]))
    return RationalGF(head_poly * cycle_den + shift * period_poly, cycle_den)


# ---------------------------------------------------------------------------
# Finite-prefix diagnostics


@dataclass(frozen=True)
class GrowthDiagnostics:
    """n-th roots and consecutive ratios of a count prefix; no limit claims."""

    values: tuple[int, ...]
    nth_roots: tuple[float, ...]      # values[n]^(1/n) for n >= 1
    ratios: tuple[float | None, ...]  # values[n+1]/values[n], None after a zero


def empirical_growth(seq) -> GrowthDiagnostics:
    values = tuple(int(v) for v in seq)
    if any(v < 0 for v in values):
        raise ValueError("counts must be non-negative")
    roots = tuple(v ** (1.0 / n) for n, v in enumerate(values) if n >= 1)
    ratios = tuple(
        (values[i + 1] / values[i]) if values[i] else None
        for i in range(len(values) - 1)
    )
    return GrowthDiagnostics(values=values, nth_roots=roots, ratios=ratios)


# ---------------------------------------------------------------------------
# Indecomposable-count envelopes for small growth rates


@dataclass(frozen=True)
class EnvelopeReport:
    passed: bool
    envelope: str | None = None          # description of a matching envelope
    single_four_branch: bool = False     # matched only with one 4 before the 5
    first_violation: int | None = None   # 1-based index of the earliest excess


def _fits(c: tuple[int, ...], envelope) -> bool:
    return all(v <= e for v, e in zip(c, envelope))


def pv_bound_check(c_counts) -> EnvelopeReport:
    """
    Check indecomposable counts c_1, c_2, ... against the bounding
    envelopes valid for sum closed classes of small growth:
    (1,1,3,5,5,5,4...) or (1,1,2,3,[4 repeated 2i or once],5,4...),
    including the all-4 tail with the 5 beyond the horizon. The single-4
    variant is flagged when it is the only match.
    """
    c = tuple(int(v) for v in c_counts)
    n = len(c)
    candidates: list[tuple[str, tuple[int, ...], bool]] = [
        ("(1,1,3,5,5,5,4...)", (1, 1, 3, 5, 5, 5) + (4,) * max(n - 6, 0), False),
        ("(1,1,2,3,4...)", (1, 1, 2, 3) + (4,) * max(n - 4, 0), False),
    ]
    for fours in range(0, n):
        if fours != 1 and fours % 2:
            continue
        if 4 + fours >= n:
            break
        envelope = (1, 1, 2, 3) + (4,) * fours + (5,) + (4,) * max(n - 5 - fours, 0)
        label = f"(1,1,2,3,4^{fours},5,4...)"
        candidates.append((label, envelope, fours == 1))
    matches = [(label, flagged) for label, env, flagged in candidates if _fits(c, env)]
    if matches:
        plain = [label for label, flagged in matches if not flagged]
        if plain:
            return EnvelopeReport(passed=True, envelope=plain[0])
        return EnvelopeReport(passed=True, envelope=matches[0][0], single_four_branch=True)
    violation = None
    best = [max(env[i] for _, env, _ in candidates) for i in range(n)]
    for i, v in enumerate(c):
        if v > best[i]:
            violation = i + 1
            break
    return EnvelopeReport(passed=False, first_violation=violation)


# ---------------------------------------------------------------------------
# Text formats


def parse_polynomial(text: str) -> Polynomial:
    """Parse "1-3x+2x^2-x^3" or "(1-x)^2" into a Polynomial."""
    body = "".join(text.split())
    if not body:
        raise ValueError("empty polynomial text")
    poly, rest = _parse_poly_sum(body)
    if rest:
        raise ValueError(f"unexpected trailing text {rest!r} in polynomial")
    return poly


def _parse_poly_sum(body: str) -> tuple[Polynomial, str]:
    total = ZERO
    sign = 1
    if body and body[0] in "+-":
        sign = -1 if body[0] == "-" else 1
        body = body[1:]
    while True:
        term, body = _parse_poly_term(body)
        total = total + (term if sign > 0 else -term)
        if body and body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        else:
            return total, body


def _parse_poly_term(body: str) -> tuple[Polynomial, str]:
    product = ONE
    matched = False
    while body and body[0] not in "+-)":
        if body[0] == "*":
            body = body[1:]
            continue
        factor, body = _parse_poly_factor(body)
        product = product * factor
        matched = True
    if not matched:
        raise ValueError("expected a polynomial term")
    return product, body


def _parse_poly_factor(body: str) -> tuple[Polynomial, str]:
    if body.startswith("("):
        depth = 0
        for i, ch in enumerate(body):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    inner, _ = _parse_poly_sum(body[1:i])
                    base, rest = inner, body[i + 1 :]
                    break
        else:
            raise ValueError("unbalanced parentheses in polynomial")
    elif body.startswith("x"):
        base, rest = X, body[1:]
    elif body[0].isdigit():
        i = 0
        while i < len(body) and body[i].isdigit():
            i += 1
        base, rest = Polynomial((int(body[:i]),)), body[i:]
    else:
        raise ValueError(f"cannot read polynomial at {body[:10]!r}")
    if rest.startswith("^"):
        i = 1
        while i < len(rest) and rest[i].isdigit():
            i += 1
        if i == 1:
            raise ValueError("exponent must be a non-negative integer")
        base, rest = base ** int(rest[1:i]), rest[i:]
    return base, rest


def parse_gf(text: str) -> RationalGF:
    """Parse "num/den" with the division at the top level."""
    body = "".join(text.split())
    depth = 0
    split = None
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split is not None:
                raise ValueError("more than one top-level '/' in rational function")
            split = i
    if split is None:
        return RationalGF(parse_polynomial(body), ONE)
    return RationalGF(
        parse_polynomial(body[:split]), parse_polynomial(body[split + 1 :])
    )
