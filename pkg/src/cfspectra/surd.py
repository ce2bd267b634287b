"""Exact arithmetic on quadratic surds and short sums of square roots.

Values are represented exactly: a QuadSurd is (p + q*sqrt(d))/r with integer
components, a SurdSum is a rational plus finitely many rational multiples of
square roots.  Sign determination never rounds: radicands are merged whenever
their product is a perfect square (an integer-sqrt test, no factoring), after
which the remaining radicals are linearly independent over Q, so a nonzero
sum separates from zero under interval refinement.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def extract_square(d):
    """Return (s, core) with d = s*s*core, pulling out small square factors.

    core is not guaranteed squarefree (large square factors would require
    integer factoring); exactness elsewhere never relies on that.
    """
    if d < 0:
        raise ValueError("negative radicand")
    if d == 0:
        return 0, 1
    r = math.isqrt(d)
    if r * r == d:
        return r, 1
    s = 1
    for p in _SMALL_PRIMES:
        pp = p * p
        while d % pp == 0:
            d //= pp
            s *= p
    r = math.isqrt(d)
    if r * r == d:
        return s * r, 1
    return s, d


def _sqrt_bounds(d, bits):
    """Rational lo <= sqrt(d) <= hi at resolution 2**-bits."""
    scale = 1 << bits
    lo = math.isqrt(d * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def _merge_terms(pairs):
    """Canonicalize {radicand: coeff}: extract squares, merge commensurables."""
    terms = {}
    anchors = []
    for d, c in pairs:
        if not c:
            continue
        if d in (0, 1):
            terms[1] = terms.get(1, Fraction(0)) + c
            continue
        s, core = extract_square(d)
        c = c * s
        if core == 1:
            terms[1] = terms.get(1, Fraction(0)) + c
            continue
        for a in anchors:
            prod = core * a
            r = math.isqrt(prod)
            if r * r == prod:
                # sqrt(core) = (r/a) * sqrt(a)
                terms[a] = terms.get(a, Fraction(0)) + c * Fraction(r, a)
                break
        else:
            anchors.append(core)
            terms[core] = terms.get(core, Fraction(0)) + c
    return {d: c for d, c in terms.items() if c}


class SurdSum:
    """c0 + c1*sqrt(D1) + c2*sqrt(D2) + ... with rational coefficients.

    Markov/lambda values use at most two radicals; differences formed during
    comparisons may carry more, which this class supports uniformly.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        self._terms = _merge_terms((int(d), Fraction(c)) for d, c in terms)

    @classmethod
    def from_value(cls, x):
        if isinstance(x, SurdSum):
            return x
        if isinstance(x, QuadSurd):
            return x.to_sum()
        return cls({1: Fraction(x)})

    @property
    def terms(self):
        """Sorted (radicand, coefficient) pairs; radicand 1 is the rational part."""
        return tuple(sorted(self._terms.items()))

    @property
    def rational_part(self):
        return self._terms.get(1, Fraction(0))

    def radical_count(self):
        return sum(1 for d in self._terms if d != 1)

    def is_rational(self):
        return self.radical_count() == 0

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("not rational: %s" % self)
        return self.rational_part

    def __add__(self, other):
        o = SurdSum.from_value(other)
        merged = dict(self._terms)
        for d, c in o._terms.items():
            merged[d] = merged.get(d, Fraction(0)) + c
        return SurdSum(merged)

    __radd__ = __add__

    def __neg__(self):
        return SurdSum({d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-SurdSum.from_value(other))

    def __rsub__(self, other):
        return SurdSum.from_value(other) - self

    def __mul__(self, other):
        o = SurdSum.from_value(other)
        pairs = []
        for d1, c1 in self._terms.items():
            for d2, c2 in o._terms.items():
                pairs.append((d1 * d2, c1 * c2))
        return SurdSum(_merge_terms(pairs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = SurdSum.from_value(other)
        if o.sign() == 0:
            raise ZeroDivisionError("division by zero SurdSum")
        num, den = self, o
        # repeated conjugation strips one radical from the denominator per pass
        while not den.is_rational():
            d = max(k for k in den._terms if k != 1)
            conj = SurdSum({k: (c if k != d else -c) for k, c in den._terms.items()})
            num, den = num * conj, den * conj
        inv = 1 / den.as_fraction()
        return num * inv

    def __rtruediv__(self, other):
        return SurdSum.from_value(other) / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = SurdSum({1: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _bounds(self, bits):
        lo = hi = Fraction(0)
        for d, c in self._terms.items():
            if d == 1:
                lo += c
                hi += c
            else:
                slo, shi = _sqrt_bounds(d, bits)
                if c >= 0:
                    lo += c * slo
                    hi += c * shi
                else:
                    lo += c * shi
                    hi += c * slo
        return lo, hi

    def sign(self):
        """Exact sign in {-1, 0, 1}; terminates for every input."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            ((_, c),) = self._terms.items()
            return (c > 0) - (c < 0)
        # >= 2 pairwise non-commensurable radicals: the value is nonzero
        bits = 32
        while True:
            lo, hi = self._bounds(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
            if bits > (1 << 22):  # pragma: no cover
                raise RuntimeError("sign refinement failed to separate: %r" % self)

    def __eq__(self, other):
        if not isinstance(other, (SurdSum, QuadSurd, Fraction, int)):
            return NotImplemented
        return (self - other).sign() == 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    __hash__ = None

    def __float__(self):
        lo, hi = self._bounds(64)
        return float((lo + hi) / 2)

    def decimal(self, digits=12):
        """Certified decimal string with the stated number of fractional digits."""
        bits = 16
        scale = 10 ** digits
        while True:
            lo, hi = self._bounds(bits)
            a = math.floor(lo * scale)
            b = math.floor(hi * scale)
            if a == b:
                sign = "-" if a < 0 else ""
                a = abs(a)
                return "%s%d.%0*d" % (sign, a // scale, digits, a % scale)
            if b - a == 1 and bits > 512:
                # value sits on a decimal boundary; report the midpoint side
                return "%s" % (Fraction(a + b, 2 * scale).__float__())
            bits *= 2

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, c in self.terms:
            if d == 1:
                parts.append(str(c))
            elif c == 1:
                parts.append("√%d" % d)
            elif c == -1:
                parts.append("-√%d" % d)
            elif c.denominator == 1:
                parts.append("%d√%d" % (c.numerator, d))
            elif c.numerator == 1:
                parts.append("√%d/%d" % (d, c.denominator))
            else:
                parts.append("(%s)√%d" % (c, d))
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def __repr__(self):
        return "SurdSum(%s)" % dict(self.terms)


class QuadSurd:
    """Exact (p + q*sqrt(d))/r with integer p, q, r and d >= 0, r > 0.

    Canonical form: gcd(p, q, r) = 1, r > 0, small square factors of d pulled
    into q, and q = 0 implies d = 0.  Total order is decidable exactly.
    """

    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p, q=0, r=1, d=0):
        if r == 0:
            raise ZeroDivisionError("zero denominator")
        p, q, r, d = int(p), int(q), int(r), int(d)
        if q:
            s, core = extract_square(d)
            q *= s
            d = core
            if d == 1:
                p += q
                q = 0
                d = 0
        if q == 0:
            d = 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        self.p, self.q, self.r, self.d = p, q, r, d

    @classmethod
    def from_fraction(cls, x):
        f = Fraction(x)
        return cls(f.numerator, 0, f.denominator, 0)

    def is_rational(self):
        return self.q == 0

    def as_fraction(self):
        if self.q:
            raise ValueError("not rational: %s" % self)
        return Fraction(self.p, self.r)

    def to_sum(self):
        return SurdSum({1: Fraction(self.p, self.r), self.d or 1: Fraction(self.q, self.r)})

    def _same_field(self, other):
        if isinstance(other, QuadSurd):
            return other.q == 0 or self.q == 0 or other.d == self.d
        return isinstance(other, (int, Fraction))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return QuadSurd(self.p * f.denominator + f.numerator * self.r,
                            self.q * f.denominator, self.r * f.denominator, self.d)
        if isinstance(other, QuadSurd):
            if self._same_field(other):
                d = self.d or other.d
                return QuadSurd(self.p * other.r + other.p * self.r,
                                self.q * other.r + other.q * self.r,
                                self.r * other.r, d)
            return self.to_sum() + other.to_sum()
        if isinstance(other, SurdSum):
            return self.to_sum() + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.p, -self.q, self.r, self.d)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QuadSurd)):
            out = self + (-other if isinstance(other, QuadSurd) else -Fraction(other))
            return out
        if isinstance(other, SurdSum):
            return self.to_sum() - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return QuadSurd(self.p * f.numerator, self.q * f.numerator,
                            self.r * f.denominator, self.d)
        if isinstance(other, QuadSurd) and self._same_field(other):
            d = self.d or other.d
            p = self.p * other.p + self.q * other.q * d
            q = self.p * other.q + self.q * other.p
            return QuadSurd(p, q, self.r * other.r, d)
        if isinstance(other, (QuadSurd, SurdSum)):
            return self.to_sum() * SurdSum.from_value(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                raise ZeroDivisionError
            return QuadSurd(self.p * f.denominator, self.q * f.denominator,
                            self.r * f.numerator, self.d)
        if isinstance(other, QuadSurd) and self._same_field(other):
            d = self.d or other.d
            # multiply by the conjugate of the other value
            den = other.p * other.p - other.q * other.q * d
            if den == 0:
                raise ZeroDivisionError
            p = (self.p * other.p - self.q * other.q * d) * other.r
            q = (self.q * other.p - self.p * other.q) * other.r
            return QuadSurd(p, q, self.r * den, d)
        return self.to_sum() / SurdSum.from_value(other)

    def __rtruediv__(self, other):
        return QuadSurd.from_fraction(other) / self if isinstance(other, (int, Fraction)) \
            else SurdSum.from_value(other) / self.to_sum()

    def sign(self):
        if self.q == 0:
            return (self.p > 0) - (self.p < 0)
        if self.p == 0:
            return (self.q > 0) - (self.q < 0)
        if (self.p > 0) == (self.q > 0):
            return 1 if self.p > 0 else -1
        pp, qq = self.p * self.p, self.q * self.q * self.d
        if pp == qq:
            return 0
        # the term with the larger square dominates
        return ((self.p > 0) - (self.p < 0)) if pp > qq else ((self.q > 0) - (self.q < 0))

    def _cmp(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return QuadSurd(self.p * f.denominator - f.numerator * self.r,
                            self.q * f.denominator, self.r * f.denominator, self.d).sign()
        if isinstance(other, QuadSurd) and self._same_field(other):
            return (self - other).sign()
        return (self.to_sum() - SurdSum.from_value(other)).sign()

    def __eq__(self, other):
        if not isinstance(other, (QuadSurd, SurdSum, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.p, self.q, self.r, self.d))

    def __float__(self):
        if self.q == 0:
            return self.p / self.r
        lo, hi = _sqrt_bounds(self.d, 64)
        return float((Fraction(self.p) + Fraction(self.q) * (lo + hi) / 2) / self.r)

    def decimal(self, digits=12):
        return self.to_sum().decimal(digits)

    def __str__(self):
        if self.q == 0:
            return str(Fraction(self.p, self.r))
        root = "√%d" % self.d
        if self.q == -1:
            qpart = "-" + root
        elif self.q == 1:
            qpart = root
        else:
            qpart = "%d%s" % (self.q, root)
        if self.p == 0:
            body = qpart
            wrap = False
        else:
            body = "%d%s%s" % (self.p, "" if qpart.startswith("-") else "+", qpart)
            wrap = True
        if self.r == 1:
            return body
        return "(%s)/%d" % (body, self.r) if wrap else "%s/%d" % (body, self.r)

    def __repr__(self):
        return "QuadSurd(p=%d, q=%d, r=%d, d=%d)" % (self.p, self.q, self.r, self.d)
