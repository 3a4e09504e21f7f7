"""Hall-Littlewood polynomials, Macdonald operators, and triangular eigenvector
construction of Macdonald polynomials at concrete parameter values."""

from __future__ import annotations

from itertools import combinations

from .cycfield import CycField, CycNum
from .linalg import SingularSystemError
from .partitions import Partition, compare_dominance, partitions_of_weight
from .polyring import MPoly, SymPoly, divide_by_vandermonde, monomial_sym


class NormalizationPoleError(ArithmeticError):
    """1 - t^j vanished in the Hall-Littlewood normalization."""

    def __init__(self, value: int, j: int):
        super().__init__(
            f"normalization pole: 1 - t^{j} = 0 at part value {value} "
            f"(multiplicity too large for this t)"
        )
        self.value = value
        self.j = j


class NonGenericParametersError(SingularSystemError):
    """Eigenvalue collision in the triangular Macdonald construction."""


def _as_cyc(field: CycField, v) -> CycNum:
    return v if isinstance(v, CycNum) else field.from_rational(v)


def hall_littlewood(lam: Partition, t, field: CycField, n: int | None = None) -> SymPoly:
    """P_lambda(x_1..x_n; t) by antisymmetrization and exact Vandermonde division.

    The normalization prod_i prod_{j=1}^{m_i} (1-t)/(1-t^j) runs over all part
    values including 0 (zero parts counted within the length n), so the result
    has unit coefficient on m_lambda.
    """
    if n is None:
        n = len(lam)
    lam = lam.pad(n)
    t = _as_cyc(field, t)
    one = field.one()

    # normalization with explicit pole detection
    norm = one
    for value in sorted(set(lam)):
        m_i = lam.multiplicity(value)
        tp = one
        for j in range(1, m_i + 1):
            tp = tp * t
            denom = one - tp
            if denom.is_zero():
                raise NormalizationPoleError(value, j)
            norm = norm * (one - t) / denom

    core = MPoly.monomial(field, n, tuple(lam))
    for i in range(n):
        for j in range(i + 1, n):
            core = core * (
                MPoly.variable(field, n, i) - MPoly.variable(field, n, j).scale(t)
            )
    quot = divide_by_vandermonde(core.antisymmetrize())
    return SymPoly(quot.scale(norm))


def _shift_subset(f: MPoly, subset, q: CycNum) -> MPoly:
    """T_I f: multiply x_i by q for i in the subset."""
    out: dict = {}
    for e, c in f.terms.items():
        coeff = c
        for i in subset:
            if e[i]:
                coeff = coeff * q ** e[i]
        if coeff.is_zero():
            continue
        s = out.get(e)
        s = coeff if s is None else s + coeff
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s
    p = MPoly(f.field, f.n)
    p.terms = out
    return p


def macdonald_operator(r: int, q, t, f: SymPoly) -> SymPoly:
    """Apply D_n^r over the common Vandermonde denominator, with exact division."""
    field = f.field
    n = f.n
    if not 0 <= r <= n:
        raise ValueError("operator index out of range")
    q = _as_cyc(field, q)
    t = _as_cyc(field, t)
    poly = f.poly
    if r == 0:
        return f

    tpref = t ** (r * (r - 1) // 2)
    numerator_sum = MPoly.zero(field, n)
    for subset in combinations(range(n), r):
        inside = set(subset)
        shifted = _shift_subset(poly, subset, q)
        num = shifted.scale(tpref)
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                a_in, b_in = a in inside, b in inside
                if a_in != b_in:
                    # split pair: numerator factor (t x_i - x_j), i inside
                    if a_in:
                        num = num * (
                            MPoly.variable(field, n, a).scale(t)
                            - MPoly.variable(field, n, b)
                        )
                    else:
                        num = num * (
                            MPoly.variable(field, n, b).scale(t)
                            - MPoly.variable(field, n, a)
                        )
                        sign = -sign  # denominator pair was (x_b - x_a)
                else:
                    # non-split pair: lift to the common denominator
                    num = num * (
                        MPoly.variable(field, n, a) - MPoly.variable(field, n, b)
                    )
        if sign < 0:
            num = -num
        numerator_sum = numerator_sum + num
    result = divide_by_vandermonde(numerator_sum)
    return SymPoly(result)


def elementary_symmetric(values: list[CycNum], r: int, field: CycField) -> CycNum:
    total = field.zero()
    for subset in combinations(values, r):
        prod = field.one()
        for v in subset:
            prod = prod * v
        total = total + prod
    return total


def eigenvalue(lam: Partition, r: int, q, t, field: CycField, n: int) -> CycNum:
    """e_r of the spectrum values q^{lambda_i} t^{n-i}."""
    q = _as_cyc(field, q)
    t = _as_cyc(field, t)
    lam = lam.pad(n)
    values = [q ** lam[i] * t ** (n - 1 - i) for i in range(n)]
    return elementary_symmetric(values, r, field)


def verify_eigen(lam: Partition, q, t, P: SymPoly):
    """Check D_n^r P = e_r(...) P for every r; returns (all_ok, per-r details)."""
    field = P.field
    n = P.n
    details = []
    ok = True
    for r in range(n + 1):
        ev = eigenvalue(lam, r, q, t, field, n)
        lhs = macdonald_operator(r, q, t, P)
        match = lhs.poly == P.poly.scale(ev)
        ok = ok and match
        details.append({"r": r, "eigenvalue": ev, "ok": match})
    return ok, details


def macdonald_poly(lam: Partition, q, t, field: CycField, n: int | None = None) -> SymPoly:
    """P_lambda as the triangular D_n^1 eigenvector with unit m_lambda coefficient.

    Raises NonGenericParametersError when a dominance-smaller partition shares
    the D_n^1 eigenvalue at these parameter values.
    """
    if n is None:
        n = len(lam)
    lam = lam.pad(n)
    q = _as_cyc(field, q)
    t = _as_cyc(field, t)

    ideal = [
        mu
        for mu in partitions_of_weight(lam.weight, n)
        if mu == lam or compare_dominance(mu, lam) == "less"
    ]
    # process dominance-compatible: lex descending, lam first
    ideal.sort(key=tuple, reverse=True)
    index = {mu: i for i, mu in enumerate(ideal)}

    # column expansions of D_n^1 on each m_mu
    columns = {}
    for mu in ideal:
        image = macdonald_operator(1, q, t, monomial_sym(mu, field, n))
        col = image.m_coeffs()
        for nu in col:
            if nu not in index:
                raise AssertionError(
                    f"operator image of m_{tuple(mu)} leaves the dominance ideal at {tuple(nu)}"
                )
        columns[mu] = col

    target_ev = eigenvalue(lam, 1, q, t, field, n)
    coeffs = {lam: field.one()}
    for mu in ideal[1:]:
        diag = columns[mu].get(mu, field.zero())
        gap = target_ev - diag
        if gap.is_zero():
            raise NonGenericParametersError(
                f"eigenvalue collision between {tuple(lam)} and {tuple(mu)}"
            )
        rhs = field.zero()
        for nu, u in coeffs.items():
            if nu == mu:
                continue
            c = columns[nu].get(mu)
            if c is not None:
                rhs = rhs + c * u
        u_mu = rhs / gap
        if not u_mu.is_zero():
            coeffs[mu] = u_mu
    return SymPoly.from_m_coeffs(coeffs, field, n)
