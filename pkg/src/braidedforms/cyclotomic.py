"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A Scalar is a vector of rationals over the power basis 1, z, ..., z^(phi(n)-1)
of Q(zeta_n), reduced modulo the n-th cyclotomic polynomial.  Mixed-conductor
operations promote both operands to the least common conductor via
zeta_n -> zeta_m^(m/n).  Values whose higher coordinates vanish are stored at
conductor 1, so plain rationals stay cheap.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import lcm

from .errors import DivisionByZero

_ZERO = Fraction(0)
_ONE = Fraction(1)


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divide(num, den):
    # exact division of polynomials with Fraction coefficients, den monic
    num = list(num)
    deg_d = len(den) - 1
    quot = [_ZERO] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i]
        if c:
            quot[i - deg_d] = c
            for j, dc in enumerate(den):
                num[i - deg_d + j] -= c * dc
    assert all(c == 0 for c in num[:deg_d]), "non-exact polynomial division"
    return quot


_CYCLO_CACHE: dict[int, list[Fraction]] = {}


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Coefficient list (low to high, monic) of the n-th cyclotomic polynomial."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-_ONE] + [_ZERO] * (n - 1) + [_ONE]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide(poly, cyclotomic_polynomial(d))
    _CYCLO_CACHE[n] = poly
    return poly


_TABLE_CACHE: dict[int, tuple[int, dict[int, tuple[Fraction, ...]]]] = {}


def _tables(n: int):
    """(phi(n), reduction rows): row[e] = coords of zeta^e for phi(n) <= e < n."""
    if n in _TABLE_CACHE:
        return _TABLE_CACHE[n]
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    rows: dict[int, tuple[Fraction, ...]] = {}
    # zeta^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1})
    cur = [-poly[i] for i in range(phi)]
    rows[phi] = tuple(cur)
    for e in range(phi + 1, n):
        top = cur[-1]
        cur = [_ZERO] + cur[:-1]
        if top:
            base = rows[phi]
            cur = [cur[i] + top * base[i] for i in range(phi)]
        rows[e] = tuple(cur)
    _TABLE_CACHE[n] = (phi, rows)
    return _TABLE_CACHE[n]


def _reduce(n: int, coeffs) -> tuple[Fraction, ...]:
    """Reduce a coefficient list in zeta_n (any length) to the power basis."""
    phi, rows = _tables(n)
    out = [_ZERO] * phi
    for e, c in enumerate(coeffs):
        if not c:
            continue
        e %= n
        if e < phi:
            out[e] += c
        else:
            row = rows[e]
            for i in range(phi):
                out[i] += c * row[i]
    return tuple(out)


class Scalar:
    """An element of Q(zeta_n), immutable."""

    __slots__ = ("n", "c", "is_zero")

    def __init__(self, n: int, coeffs, _reduced: bool = False):
        coeffs = tuple(Fraction(x) for x in coeffs)
        if not _reduced:
            coeffs = _reduce(n, coeffs)
        if n > 1 and not any(coeffs[1:]):
            n, coeffs = 1, (coeffs[0] if coeffs else _ZERO,)
        self.n = n
        self.c = coeffs
        # precomputed: zero tests dominate sparse matrix arithmetic
        self.is_zero = n == 1 and not coeffs[0]

    # --- constructors -----------------------------------------------------

    @staticmethod
    def rational(p, q=1) -> "Scalar":
        return Scalar(1, (Fraction(p, q),), _reduced=True)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Scalar":
        k %= n
        phi, rows = _tables(n) if n > 1 else (1, {})
        if n == 1:
            return ONE
        if k < phi:
            coeffs = [_ZERO] * phi
            coeffs[k] = _ONE
            return Scalar(n, coeffs, _reduced=True)
        return Scalar(n, rows[k], _reduced=True)

    # --- promotion --------------------------------------------------------

    def _coeffs_at(self, m: int) -> tuple:
        """Reduced coordinates at conductor m (a multiple of self.n), unnormalized."""
        if m == self.n:
            return self.c
        step = m // self.n
        coeffs = [_ZERO] * (len(self.c) * step - step + 1)
        for i, ci in enumerate(self.c):
            coeffs[i * step] = ci
        return _reduce(m, coeffs)

    def promote(self, m: int) -> "Scalar":
        """Rewrite at conductor m (a multiple of self.n)."""
        return Scalar(m, self._coeffs_at(m), _reduced=True)

    def _pair(self, other: "Scalar"):
        m = lcm(self.n, other.n)
        return m, self._coeffs_at(m), other._coeffs_at(m)

    # --- predicates -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.n == 1

    def as_fraction(self) -> Fraction:
        assert self.n == 1
        return self.c[0]

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(1, (Fraction(other),), _reduced=True)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        m, ca, cb = self._pair(other)
        return ca == cb

    def __hash__(self):
        if self.n == 1:
            return hash(self.c[0])
        return hash((self.n, self.c))

    # --- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(1, (Fraction(x),), _reduced=True)
        return None

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        # zero operands are ubiquitous in sparse matrix sums; skip the arithmetic
        if self.n == 1 and not self.c[0]:
            return other
        if other.n == 1 and not other.c[0]:
            return self
        if self.n == 1 and other.n == 1:
            return Scalar(1, (self.c[0] + other.c[0],), _reduced=True)
        m, ca, cb = self._pair(other)
        return Scalar(m, tuple(x + y for x, y in zip(ca, cb)), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.n, tuple(-x for x in self.c), _reduced=True)

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar._coerce(other) + (-self)

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Scalar(1, (self.c[0] * other.c[0],), _reduced=True)
        m, ca, cb = self._pair(other)
        prod = [_ZERO] * (2 * len(ca) - 1)
        for i, x in enumerate(ca):
            if not x:
                continue
            for j, y in enumerate(cb):
                if y:
                    prod[i + j] += x * y
        return Scalar(m, prod)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero:
            raise DivisionByZero("inversion of zero")
        if self.n == 1:
            return Scalar(1, (1 / self.c[0],), _reduced=True)
        # extended Euclid in Q[x]: maintain r_i = s_i * self (mod Phi_n)
        r0, s0 = list(cyclotomic_polynomial(self.n)), [_ZERO]
        r1, s1 = list(self.c), [_ONE]
        while True:
            while len(r1) > 1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]  # nonzero: Phi_n is irreducible and self is not 0
                return Scalar(self.n, [x / c for x in s1])
            q, _, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return Scalar._coerce(other) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- misc -------------------------------------------------------------

    def approx(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(complex(ci) * z**i for i, ci in enumerate(self.c))

    def to_obj(self):
        return {
            "conductor": self.n,
            "coeffs": [[ci.numerator, ci.denominator] for ci in self.c],
        }

    @staticmethod
    def from_obj(obj) -> "Scalar":
        coeffs = [Fraction(int(p), int(q)) for p, q in obj["coeffs"]]
        return Scalar(int(obj["conductor"]), coeffs)

    def __repr__(self):
        if self.n == 1:
            return f"Scalar({self.c[0]})"
        terms = " + ".join(f"{c}*z{self.n}^{i}" for i, c in enumerate(self.c) if c)
        return f"Scalar({terms or 0})"


def _poly_divmod(num, den):
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    deg_d = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < deg_d:
        return [_ZERO], list(den), num
    quot = [_ZERO] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i] / lead
        if c:
            quot[i - deg_d] = c
            for j, dc in enumerate(den):
                num[i - deg_d + j] -= c * dc
    rem = num[:deg_d] or [_ZERO]
    return quot, list(den), rem


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


ZERO = Scalar(1, (_ZERO,), _reduced=True)
ONE = Scalar(1, (_ONE,), _reduced=True)
MINUS_ONE = Scalar(1, (-_ONE,), _reduced=True)
