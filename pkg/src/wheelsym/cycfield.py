"""Exact arithmetic in cyclotomic fields Q(zeta_M) in the power basis mod Phi_M."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class ZeroDivisionInField(ZeroDivisionError):
    """Raised on inversion of the zero element."""


# ---------------------------------------------------------------------------
# dense univariate polynomial helpers (coefficient lists, low degree first)

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(a, b):
    """Exact-arithmetic division; b must be nonzero. Coefficients stay Fractions."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a[:]
    _poly_trim(r)
    lead = b[-1]
    while len(r) >= len(b):
        c = r[-1] / lead
        d = len(r) - len(b)
        q[d] = c
        for i, bi in enumerate(b):
            r[i + d] -= c * bi
        _poly_trim(r)
    return q, r


def totient(m: int) -> int:
    count = 0
    for j in range(1, m + 1):
        if _gcd(j, m) == 1:
            count += 1
    return count


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Phi_m as an integer coefficient tuple, computed by exact recursive division.

    z^m - 1 is divided by the product of Phi_d over proper divisors d of m;
    the remainder must vanish, which doubles as a self-check.
    """
    if m < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (m - 1) + [1]  # z^m - 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    q, r = _poly_divmod(num, den)
    if r:
        raise AssertionError(f"Phi_{m}: nonzero remainder in recursive division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise AssertionError(f"Phi_{m}: non-integer coefficient {c}")
        out.append(int(c))
    return tuple(out)


class CycField:
    """The field Q(zeta_M), elements stored in the power basis 1, zeta, ..., zeta^(deg-1)."""

    _cache: dict[int, "CycField"] = {}

    def __new__(cls, M: int):
        if M in cls._cache:
            return cls._cache[M]
        if M < 1:
            raise ValueError("conductor must be positive")
        self = object.__new__(cls)
        self.M = M
        phi = cyclotomic_polynomial(M)
        self.phi = phi
        self.degree = len(phi) - 1
        if self.degree != totient(M):
            raise AssertionError(f"deg Phi_{M} != totient({M})")
        # power basis reductions of zeta^j for j = 0 .. 2*degree-2, used by mul
        self._powers = self._reduced_powers()
        cls._cache[M] = self
        return self

    def _reduced_powers(self):
        deg = self.degree
        pows = []
        cur = [Fraction(0)] * deg
        cur[0] = Fraction(1)
        for _ in range(2 * deg - 1):
            pows.append(tuple(cur))
            # multiply by zeta
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                # zeta^deg = -(phi[0] + ... + phi[deg-1] zeta^(deg-1)), phi monic
                for i in range(deg):
                    cur[i] -= top * self.phi[i]
        return pows

    # -- element constructors -------------------------------------------------

    def element(self, coeffs) -> "CycNum":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise ValueError("coefficient vector length != field degree")
        return CycNum(self, coeffs)

    def zero(self) -> "CycNum":
        return self.element([0] * self.degree)

    def one(self) -> "CycNum":
        return self.from_rational(1)

    def from_rational(self, value) -> "CycNum":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(value)
        return CycNum(self, tuple(coeffs))

    def root(self, exponent: int = 1) -> "CycNum":
        """zeta_M^exponent reduced into the power basis."""
        e = exponent % self.M
        coeffs = [Fraction(0)] * self.degree
        if e < self.degree:
            coeffs[e] = Fraction(1)
            return CycNum(self, tuple(coeffs))
        # reduce z^e mod Phi_M
        p = [Fraction(0)] * e + [Fraction(1)]
        _, r = _poly_divmod(p, list(self.phi))
        for i, c in enumerate(r):
            coeffs[i] = c
        return CycNum(self, tuple(coeffs))

    def __repr__(self):
        return f"CycField(M={self.M})"

    def __eq__(self, other):
        return isinstance(other, CycField) and other.M == self.M

    def __hash__(self):
        return hash(("CycField", self.M))

    def __reduce__(self):
        return (CycField, (self.M,))


class CycNum:
    """Element of a CycField; immutable, exact."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if self.field is not other.field and self.field != other.field:
            raise ValueError("mixed cyclotomic fields")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CycNum(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CycNum(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycNum(self.field, tuple(-a for a in self.coeffs))

    def _coerce(self, other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    __radd__ = __add__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        deg = self.field.degree
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    conv[i + j] += a * b
        out = [Fraction(0)] * deg
        pows = self.field._powers
        for e, c in enumerate(conv):
            if c:
                pe = pows[e]
                for i in range(deg):
                    if pe[i]:
                        out[i] += c * pe[i]
        return CycNum(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_M."""
        if self.is_zero():
            raise ZeroDivisionInField("inverse of zero in cyclotomic field")
        a = _poly_trim([Fraction(c) for c in self.coeffs])
        phi = [Fraction(c) for c in self.field.phi]
        # invariant: r_i = s_i * a  (mod phi); ends with r = gcd = nonzero constant
        r0, r1 = phi, a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            qs1 = _poly_mul(q, s1)
            s_next = [
                (s0[i] if i < len(s0) else Fraction(0))
                - (qs1[i] if i < len(qs1) else Fraction(0))
                for i in range(max(len(s0), len(qs1)))
            ]
            r0, r1 = r1, r
            s0, s1 = s1, _poly_trim(s_next)
        if len(r0) != 1:
            raise AssertionError("Phi_M not coprime with nonzero element")
        inv = [c / r0[0] for c in s0]
        _, red = _poly_divmod(inv, phi)
        coeffs = [Fraction(0)] * self.field.degree
        for i, c in enumerate(red):
            coeffs[i] = c
        return CycNum(self.field, tuple(coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        acc = self.field.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.M, self.coeffs))

    def __repr__(self):
        return f"CycNum(M={self.field.M}, {list(self.coeffs)})"

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def multiplicative_order(self) -> int:
        """Exact order, or raises if the element is not a root of unity (bounded search)."""
        x = self
        one = self.field.one()
        for j in range(1, self.field.M + 1):
            if x == one:
                return j
            x = x * self
        raise ValueError("element is not a root of unity of order <= M")

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "M": self.field.M,
            "num": [str(c.numerator) for c in self.coeffs],
            "den": [str(c.denominator) for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> "CycNum":
        field = CycField(int(obj["M"]))
        coeffs = tuple(
            Fraction(int(n), int(d)) for n, d in zip(obj["num"], obj["den"])
        )
        return field.element(coeffs)
