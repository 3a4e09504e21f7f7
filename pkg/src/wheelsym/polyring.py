"""Sparse exact multivariate polynomials over a cyclotomic field.

Terms are dicts mapping fixed-length exponent tuples to nonzero CycNum
coefficients. The canonical term order is graded lexicographic (total degree
first, ties by lex on the exponent tuple).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .cycfield import CycField, CycNum
from .partitions import Partition


class NotDivisibleError(ArithmeticError):
    """Exact division hit a nonzero remainder."""


class NotSymmetricError(ValueError):
    """A symmetric-polynomial operation was handed a non-symmetric input."""


def _grlex_key(exps):
    return (sum(exps), exps)


def _perm_sign(perm) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


class MPoly:
    """Sparse polynomial in x_1..x_n over CycField."""

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: CycField, n: int, terms: dict | None = None):
        self.field = field
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if not c.is_zero():
                    self.terms[tuple(e)] = c

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def constant(cls, field, n, value):
        c = value if isinstance(value, CycNum) else field.from_rational(value)
        return cls(field, n, {(0,) * n: c})

    @classmethod
    def variable(cls, field, n, i):
        e = [0] * n
        e[i] = 1
        return cls(field, n, {tuple(e): field.one()})

    @classmethod
    def monomial(cls, field, n, exps, coeff=None):
        c = coeff if isinstance(coeff, CycNum) else field.from_rational(1 if coeff is None else coeff)
        return cls(field, n, {tuple(exps): c})

    # -- ring operations ------------------------------------------------------

    def _check(self, other):
        if self.n != other.n or self.field != other.field:
            raise ValueError("mixed polynomial rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = MPoly.constant(self.field, self.n, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        p = MPoly(self.field, self.n)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly(self.field, self.n)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = MPoly.constant(self.field, self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        p = MPoly(self.field, self.n)
        p.terms = out
        return p

    __rmul__ = __mul__

    def scale(self, c):
        if not isinstance(c, CycNum):
            c = self.field.from_rational(c)
        if c.is_zero():
            return MPoly.zero(self.field, self.n)
        p = MPoly(self.field, self.n)
        p.terms = {e: coeff * c for e, coeff in self.terms.items()}
        return p

    def __pow__(self, e: int):
        acc = MPoly.constant(self.field, self.n, 1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = MPoly.constant(self.field, self.n, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.field.M, self.n, frozenset(self.terms.items())))

    def degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def leading_term(self):
        """(exponents, coeff) of the graded-lex greatest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    # -- substitution ---------------------------------------------------------

    def substitute(self, assignment: dict, target_n: int | None = None) -> "MPoly":
        """Substitute per-variable images (MPoly, CycNum, or rational).

        Variables absent from the assignment map to themselves; that requires
        target_n to match self.n for those variables.
        """
        images = {}
        n_out = target_n
        for i, img in assignment.items():
            if isinstance(img, MPoly):
                if n_out is None:
                    n_out = img.n
                images[i] = img
        if n_out is None:
            n_out = self.n
        for i in range(self.n):
            img = assignment.get(i)
            if img is None:
                images[i] = MPoly.variable(self.field, n_out, i)
            elif not isinstance(img, MPoly):
                images[i] = MPoly.constant(self.field, n_out, img)
        # per-variable power cache
        powers = {i: {0: MPoly.constant(self.field, n_out, 1)} for i in range(self.n)}
        result = MPoly.zero(self.field, n_out)
        for e, c in self.terms.items():
            term = MPoly.constant(self.field, n_out, c)
            for i, ei in enumerate(e):
                if ei == 0:
                    continue
                cache = powers[i]
                if ei not in cache:
                    top = max(cache)
                    cur = cache[top]
                    for j in range(top + 1, ei + 1):
                        cur = cur * images[i]
                        cache[j] = cur
                term = term * cache[ei]
            result = result + term
        return result

    def evaluate(self, point: list) -> CycNum:
        """Evaluate at a point of CycNum / rational coordinates."""
        vals = [v if isinstance(v, CycNum) else self.field.from_rational(v) for v in point]
        total = self.field.zero()
        for e, c in self.terms.items():
            prod = c
            for i, ei in enumerate(e):
                if ei:
                    prod = prod * vals[i] ** ei
            total = total + prod
        return total

    # -- division -------------------------------------------------------------

    def exact_divide(self, g: "MPoly") -> "MPoly":
        """Quotient f/g when g divides f exactly; NotDivisibleError otherwise."""
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        ge, gc = g.leading_term()
        gc_inv = gc.inverse()
        rem = self
        quot = MPoly.zero(self.field, self.n)
        while not rem.is_zero():
            re, rc = rem.leading_term()
            de = tuple(a - b for a, b in zip(re, ge))
            if any(d < 0 for d in de):
                raise NotDivisibleError("nonzero remainder in exact division")
            u = MPoly.monomial(self.field, self.n, de, rc * gc_inv)
            quot = quot + u
            rem = rem - u * g
        return quot

    # -- symmetry -------------------------------------------------------------

    def permute_variables(self, perm) -> "MPoly":
        """Apply w: x_i -> x_{perm[i]} on variables (positions permuted)."""
        out: dict = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i, ei in enumerate(e):
                ne[perm[i]] = ei
            ne = tuple(ne)
            s = out.get(ne)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(ne, None)
            else:
                out[ne] = s
        p = MPoly(self.field, self.n)
        p.terms = out
        return p

    def is_symmetric(self) -> bool:
        for i in range(self.n - 1):
            perm = list(range(self.n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute_variables(perm) != self:
                return False
        return True

    def antisymmetrize(self) -> "MPoly":
        """Sum of sgn(w) * w(f) over the symmetric group on the variables."""
        out = MPoly.zero(self.field, self.n)
        for perm in permutations(range(self.n)):
            img = self.permute_variables(perm)
            if _perm_sign(perm) < 0:
                img = -img
            out = out + img
        return out

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "M": self.field.M,
            "terms": [
                {"exps": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "MPoly":
        field = CycField(int(obj["M"]))
        n = int(obj["n"])
        terms = {}
        for t in obj["terms"]:
            terms[tuple(int(x) for x in t["exps"])] = CycNum.from_json(t["coeff"])
        return MPoly(field, n, terms)

    def __repr__(self):
        if self.is_zero():
            return "MPoly(0)"
        bits = []
        for e, c in self.sorted_terms()[:6]:
            bits.append(f"{list(c.coeffs)}*x^{e}")
        more = "..." if len(self.terms) > 6 else ""
        return f"MPoly({' + '.join(bits)}{more})"


def vandermonde(field: CycField, n: int) -> MPoly:
    prod = MPoly.constant(field, n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            prod = prod * (MPoly.variable(field, n, i) - MPoly.variable(field, n, j))
    return prod


def divide_by_vandermonde(f: MPoly) -> MPoly:
    """Divide by prod_{i<j}(x_i - x_j) factor by factor, asserting exactness."""
    out = f
    n = f.n
    for i in range(n):
        for j in range(i + 1, n):
            out = out.exact_divide(
                MPoly.variable(f.field, n, i) - MPoly.variable(f.field, n, j)
            )
    return out


def _orbit_size(lam) -> int:
    from math import factorial

    size = factorial(len(lam))
    for v in set(lam):
        size //= factorial(sum(1 for p in lam if p == v))
    return size


def monomial_sym(lam: Partition, field: CycField, n: int | None = None) -> "SymPoly":
    """m_lambda: sum over distinct permutations of the exponent vector."""
    if n is None:
        n = len(lam)
    if len(lam) > n:
        raise ValueError("partition longer than variable count")
    exps = tuple(lam.pad(n))
    seen = set(permutations(exps))
    one = field.one()
    p = MPoly(field, n, {e: one for e in seen})
    return SymPoly(p)


class SymPoly:
    """A symmetric MPoly with a lazily cached monomial-basis expansion."""

    __slots__ = ("poly", "_m_cache")

    def __init__(self, poly: MPoly, check: bool = False):
        if check and not poly.is_symmetric():
            raise NotSymmetricError("polynomial is not symmetric")
        self.poly = poly
        self._m_cache = None

    @property
    def field(self):
        return self.poly.field

    @property
    def n(self):
        return self.poly.n

    @classmethod
    def from_m_coeffs(cls, coeffs: dict, field: CycField, n: int) -> "SymPoly":
        total = MPoly.zero(field, n)
        for lam, c in coeffs.items():
            total = total + monomial_sym(lam, field, n).poly.scale(c)
        s = cls(total)
        return s

    def m_coeffs(self) -> dict[Partition, CycNum]:
        """Expansion f = sum c_lambda m_lambda; keys are length-n partitions.

        Reads coefficients off the nonincreasing exponent vectors; validated by
        a swap-invariance check on the underlying terms.
        """
        if self._m_cache is None:
            coeffs = {}
            for e, c in self.poly.terms.items():
                if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                    coeffs[Partition(e)] = c
            # symmetry validation: each term matches its sorted representative
            # and every orbit is complete (term count = sum of orbit sizes)
            for e, c in self.poly.terms.items():
                rep = Partition(sorted(e, reverse=True))
                if rep not in coeffs or coeffs[rep] != c:
                    raise NotSymmetricError("polynomial is not symmetric")
            expected = sum(_orbit_size(lam) for lam in coeffs)
            if expected != len(self.poly.terms):
                raise NotSymmetricError("polynomial is not symmetric")
            self._m_cache = coeffs
        return self._m_cache

    def highest_partition(self) -> Partition:
        """Lex-greatest partition with nonzero m-coefficient."""
        coeffs = self.m_coeffs()
        if not coeffs:
            raise ValueError("zero polynomial has no highest partition")
        return max(coeffs, key=tuple)

    def is_zero(self):
        return self.poly.is_zero()

    def __add__(self, other):
        other_p = other.poly if isinstance(other, SymPoly) else other
        return SymPoly(self.poly + other_p)

    def __sub__(self, other):
        other_p = other.poly if isinstance(other, SymPoly) else other
        return SymPoly(self.poly - other_p)

    def __neg__(self):
        return SymPoly(-self.poly)

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return SymPoly(self.poly * other.poly)
        if isinstance(other, (int, Fraction, CycNum)):
            return SymPoly(self.poly.scale(other))
        return SymPoly(self.poly * other)

    __rmul__ = __mul__

    def scale(self, c):
        return SymPoly(self.poly.scale(c))

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            other = other.poly
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"SymPoly({self.poly!r})"
