"""Exact coefficient arithmetic for the skein engine.

Three scalar domains, all exact (no floating point):

* ``LaurentPoly`` -- Laurent polynomials in one variable q with rational
  coefficients, the generic ground ring of the diagram calculus.
* ``RationalFunction`` -- quotients of Laurent polynomials, needed because
  projector coefficients divide by quantum integers.  Kept in a canonical
  reduced form so equality is a dictionary comparison.
* ``CycNumber`` -- the image of the above under q -> primitive N-th root of
  unity, represented as a residue modulo the N-th cyclotomic polynomial.

Quantum integers use the symmetric convention [n] = (q^n - q^-n)/(q - q^-1),
so [n] specializes to zero at a root of unity of order N exactly when N | 2n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class DenominatorVanishes(ArithmeticError):
    """A denominator specializes to zero at the requested root of unity."""


class OrderMismatch(ValueError):
    """Arithmetic between cyclotomic numbers of different orders."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class LaurentPoly:
    """Laurent polynomial in q over the rationals.

    Stored as a map exponent -> nonzero Fraction.  Instances are immutable;
    all operations return new objects.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = _as_fraction(c)
                if c:
                    acc = clean.get(e)
                    c = c if acc is None else acc + c
                    if c:
                        clean[int(e)] = c
                    else:
                        clean.pop(int(e), None)
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: _as_fraction(c)})

    @staticmethod
    def q_power(n: int) -> "LaurentPoly":
        return LaurentPoly({n: 1})

    @staticmethod
    def coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def eval_at_one(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if isinstance(other, RationalFunction):
            return RationalFunction.from_poly(self) == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction.from_poly(self) + other
        other = LaurentPoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms, r._hash = out, None
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        r._hash = None
        return r

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction.from_poly(self) - other
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction.from_poly(self) * other
        other = LaurentPoly.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms, r._hash = out, None
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction.from_poly(self) ** n
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        return RationalFunction.from_poly(self) / other

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / RationalFunction.from_poly(self)

    # -- display / serialization ---------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                bits.append(f"{c}")
            else:
                var = "q" if e == 1 else ("q^-1" if e == -1 else f"q^{e}")
                if c == 1:
                    bits.append(var)
                elif c == -1:
                    bits.append(f"-{var}")
                else:
                    bits.append(f"{c}*{var}")
        s = " + ".join(bits)
        return s.replace("+ -", "- ")

    def to_json(self):
        """List of [exponent, numerator, denominator] triples, sorted."""
        return [[e, self.terms[e].numerator, self.terms[e].denominator]
                for e in sorted(self.terms)]

    @staticmethod
    def from_json(data) -> "LaurentPoly":
        return LaurentPoly({int(e): Fraction(int(n), int(d)) for e, n, d in data})


def qint(n: int) -> LaurentPoly:
    """Quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n == 0:
        return LaurentPoly.zero()
    if n < 0:
        return -qint(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


# ---------------------------------------------------------------------
# Ordinary (non-Laurent) polynomial helpers over Q, used for gcd and the
# cyclotomic residue arithmetic.  Polynomials are coefficient lists,
# low degree first, with no trailing zeros.


def _pstrip(p):
    while p and not p[-1]:
        p.pop()
    return p

def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pstrip(out)

def _padd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return _pstrip(out)

def _pdivmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _pstrip(q), _pstrip(a)

def _pgcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        inv = Fraction(1) / a[-1]
        a = [c * inv for c in a]
    return a


# integer-coefficient helpers (primitive pseudo-remainder sequence); much
# faster than Fraction arithmetic for the gcd work in RationalFunction


def _int_content(p):
    from math import gcd
    g = 0
    for c in p:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g or 1


def _int_primitive(p):
    g = _int_content(p)
    if g > 1:
        p = [c // g for c in p]
    if p and p[-1] < 0:
        p = [-c for c in p]
    return p


def _int_prem(a, b):
    """Pseudo-remainder of integer polynomials (lc(b)^k * a mod b)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        if not a[-1]:
            a.pop()
            continue
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        while a and not a[-1]:
            a.pop()
    return a


def _int_gcd_poly(a, b):
    """Primitive gcd of integer polynomials."""
    a, b = _int_primitive(list(a)), _int_primitive(list(b))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_primitive(_int_prem(a, b))
        a, b = b, r
    return _int_primitive(a)


def _int_div_exact(a, b):
    """Exact division of integer polynomials (b must divide a)."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c, rem = divmod(a[i + len(b) - 1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def _to_int_poly(p):
    """Fraction-coefficient list -> (integer list, common denominator)."""
    from math import gcd
    denom = 1
    for c in p:
        d = c.denominator
        if d != 1:
            denom = denom // gcd(denom, d) * d
    return [int(c * denom) for c in p], denom


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients (low first, exact integers) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    # x^n - 1 divided by the product of cyclotomic polynomials of proper divisors
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _pdivmod(num, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(num)


class RationalFunction:
    """Quotient of Laurent polynomials in canonical reduced form.

    Canonical form: numerator/denominator share no polynomial factor, the
    denominator is an ordinary polynomial in q with nonzero constant term
    whose lowest-exponent coefficient is positive.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = LaurentPoly.zero(), LaurentPoly.one()
            self._hash = None
            return
        if den.terms == {0: 1}:
            self.num, self.den = num, den
            self._hash = None
            return
        # shift both into ordinary polynomials, tracking the net q-power
        sn, sd = num.min_exp(), den.min_exp()
        pn = [Fraction(0)] * (num.max_exp() - sn + 1)
        for e, c in num.terms.items():
            pn[e - sn] = c
        pd = [Fraction(0)] * (den.max_exp() - sd + 1)
        for e, c in den.terms.items():
            pd[e - sd] = c
        # integer gcd (primitive pseudo-remainders), then one exact division
        ipn, dn = _to_int_poly(pn)
        ipd, dd = _to_int_poly(pd)
        g = _int_gcd_poly(ipn, ipd)
        if len(g) > 1:
            ipn = _int_div_exact(ipn, g)
            ipd = _int_div_exact(ipd, g)
        # normalize: denominator constant term scaled to 1
        scale = Fraction(dd, dn) / Fraction(ipd[0])
        shift = sn - sd
        self.num = LaurentPoly({i + shift: Fraction(c) * scale
                                for i, c in enumerate(ipn) if c})
        self.den = LaurentPoly({i: Fraction(c, ipd[0])
                                for i, c in enumerate(ipd) if c})
        self._hash = None

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalFunction":
        return RationalFunction(p, LaurentPoly.one())

    @staticmethod
    def coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunction.from_poly(LaurentPoly.const(x))
        if isinstance(x, LaurentPoly):
            return RationalFunction.from_poly(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == LaurentPoly.one()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_poly():
            raise ValueError(f"not a Laurent polynomial: {self}")
        return self.num

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den, out._hash = -self.num, self.den, None
        return out

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        if self.den.terms == {0: 1} and other.den.terms == {0: 1}:
            out = RationalFunction.__new__(RationalFunction)
            out.num, out.den, out._hash = self.num * other.num, self.den, None
            return out
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction.coerce(1) / (self ** (-n))
        out = RationalFunction.coerce(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data) -> "RationalFunction":
        return RationalFunction(LaurentPoly.from_json(data["num"]),
                                LaurentPoly.from_json(data["den"]))


class CycNumber:
    """Element of Q[q] / Phi_N(q), the order-N cyclotomic residue ring.

    ``coeffs`` has length deg Phi_N, low degree first.  q^N reduces to 1 and
    the represented q is an abstract primitive N-th root of unity.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        phi = cyclotomic_poly(order)
        deg = len(phi) - 1
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _pdivmod(cs, list(phi))[1]
        cs = list(cs) + [Fraction(0)] * (deg - len(cs))
        self.order = order
        self.coeffs = tuple(cs[:deg])
        self._hash = None

    @staticmethod
    def zero(order: int) -> "CycNumber":
        return CycNumber(order, [])

    @staticmethod
    def one(order: int) -> "CycNumber":
        return CycNumber(order, [1])

    @staticmethod
    def root_power(order: int, e: int) -> "CycNumber":
        e %= order
        return CycNumber(order, [0] * e + [1])

    def _check(self, other: "CycNumber"):
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber(self.order, [other])
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def coerce_other(self, x) -> "CycNumber":
        if isinstance(x, CycNumber):
            self._check(x)
            return x
        if isinstance(x, (int, Fraction)):
            return CycNumber(self.order, [x])
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNumber")

    def __add__(self, other):
        other = self.coerce_other(other)
        return CycNumber(self.order,
                         [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self.coerce_other(other))

    def __rsub__(self, other):
        return self.coerce_other(other) - self

    def __mul__(self, other):
        other = self.coerce_other(other)
        return CycNumber(self.order, _pmul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        """Extended-Euclid inverse modulo Phi_N; raises if self is zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = list(cyclotomic_poly(self.order))
        # Bezout: find u with u*self + v*phi = gcd (a nonzero constant)
        r0, r1 = phi, _pstrip(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            qt, rem = _pdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _padd(s0, [-c for c in _pmul(qt, s1)])
        if len(r0) != 1:
            raise ZeroDivisionError("zero divisor in cyclotomic ring")
        inv = Fraction(1) / r0[0]
        return CycNumber(self.order, [c * inv for c in s0])

    def __truediv__(self, other):
        return self * self.coerce_other(other).inverse()

    def __rtruediv__(self, other):
        return self.coerce_other(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycNumber.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "CycNumber":
        """Galois conjugation q -> q^-1 (complex conjugation on any embedding)."""
        out = CycNumber.zero(self.order)
        for e, c in enumerate(self.coeffs):
            if c:
                out = out + CycNumber.root_power(self.order, -e) * c
        return out

    def as_rational(self) -> Fraction:
        if any(self.coeffs[1:]):
            raise ValueError(f"not rational: {self}")
        return self.coeffs[0]

    def __repr__(self):
        bits = []
        for e, c in enumerate(self.coeffs):
            if c:
                if e == 0:
                    bits.append(f"{c}")
                else:
                    var = "z" if e == 1 else f"z^{e}"
                    bits.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(bits).replace("+ -", "- ") if bits else "0"

    def to_json(self):
        return {"order": self.order,
                "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @staticmethod
    def from_json(data) -> "CycNumber":
        return CycNumber(int(data["order"]),
                         [Fraction(int(n), int(d)) for n, d in data["coeffs"]])


def specialize(p, order: int) -> CycNumber:
    """Image of a LaurentPoly or RationalFunction under q -> primitive root of order N.

    Raises DenominatorVanishes when a RationalFunction denominator dies at the
    root (for quantum integers this happens exactly when N divides 2n).
    """
    if isinstance(p, (int, Fraction)):
        return CycNumber(order, [p])
    if isinstance(p, LaurentPoly):
        out = CycNumber.zero(order)
        for e, c in p.terms.items():
            out = out + CycNumber.root_power(order, e) * c
        return out
    if isinstance(p, RationalFunction):
        den = specialize(p.den, order)
        if den.is_zero():
            raise DenominatorVanishes(
                f"denominator {p.den!r} vanishes at a root of unity of order {order}")
        return specialize(p.num, order) / den
    raise TypeError(f"cannot specialize {type(p).__name__}")
