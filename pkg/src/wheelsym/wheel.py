"""Wheel vanishing planes, membership tests, and the brute-force dimension oracle."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd

from .cycfield import CycField, CycNum
from .linalg import nullspace, rank
from .partitions import Partition, partitions_of_weight
from .polyring import MPoly, SymPoly, monomial_sym


class WheelSpec:
    """Parameters (k, r) with the roots of unity t (order k+1) and q (order r-1).

    The default coefficient field is Q(zeta_M) with M = (k+1)(r-1) (M = k+1
    when r = 2). A larger field may be supplied as long as M is a multiple of
    the default conductor; t and q are then taken inside it.
    """

    def __init__(self, k: int, r: int, field: CycField | None = None):
        if k < 1 or r < 2:
            raise ValueError("need k >= 1 and r >= 2")
        if gcd(k + 1, r - 1) != 1:
            raise ValueError("k+1 and r-1 must be coprime")
        self.k = k
        self.r = r
        base = (k + 1) * (r - 1)
        if field is None:
            field = CycField(base if r > 2 else k + 1)
        if field.M % ((k + 1) if r == 2 else base) != 0:
            raise ValueError("field conductor does not contain the required roots")
        self.field = field
        s = field.M // ((k + 1) if r == 2 else base)
        # t = u^(r-1), q = u^-(k+1) for u = zeta^s a primitive base-th root
        self.t = field.root(s * (r - 1)) if r > 2 else field.root(s)
        self.q = field.root(-s * (k + 1)) if r > 2 else field.one()
        if self.t.multiplicative_order() != k + 1:
            raise AssertionError("t does not have order k+1")
        qo = self.q.multiplicative_order()
        if qo != (r - 1) and not (r == 2 and qo == 1):
            raise AssertionError("q does not have order r-1")

    def __repr__(self):
        return f"WheelSpec(k={self.k}, r={self.r}, M={self.field.M})"

    def planes(self):
        """All (r-1)^k ratio tuples (c_2, .., c_{k+1}) with x_i = c_i * x_1."""
        out = []
        for s in product(range(self.r - 1), repeat=self.k):
            coeffs = tuple(
                self.t ** (i - 1) * self.q ** s[i - 2] for i in range(2, self.k + 2)
            )
            out.append(coeffs)
        return out


def substitute_plane(f: MPoly, plane: tuple[CycNum, ...]) -> MPoly:
    """Set x_i = c_i * x_1 for i = 2..k+1; other variables stay free.

    The result lives in the same variable ring with x_2..x_{k+1} collapsed
    onto x_1 (their slots carry exponent zero).
    """
    k1 = len(plane) + 1  # variables x_1..x_{k+1} are involved
    out = MPoly.zero(f.field, f.n)
    terms: dict = {}
    for e, c in f.terms.items():
        coeff = c
        merged = e[0]
        for idx, ci in enumerate(plane):
            exp = e[idx + 1]
            if exp:
                coeff = coeff * ci ** exp
                merged += exp
        ne = (merged,) + (0,) * (k1 - 1) + e[k1:]
        s = terms.get(ne)
        s = coeff if s is None else s + coeff
        if s.is_zero():
            terms.pop(ne, None)
        else:
            terms[ne] = s
    out.terms = terms
    return out


def is_member(f, spec: WheelSpec):
    """Membership in F^(k,r): (True, None) or (False, witness dict)."""
    poly = f.poly if isinstance(f, SymPoly) else f
    if poly.n < spec.k + 1:
        return True, None
    for plane in spec.planes():
        residual = substitute_plane(poly, plane)
        if not residual.is_zero():
            e, c = residual.leading_term()
            return False, {"plane": plane, "monomial": e, "coeff": c}
    return True, None


def _constraint_matrix(spec: WheelSpec, n: int, d: int):
    """Rows: (plane, residual monomial) constraints; columns: m_lambda, |lambda| = d."""
    cols = list(partitions_of_weight(d, n))
    rows_by_mono: list[dict] = []
    for plane in spec.planes():
        rows: dict = {}
        for j, lam in enumerate(cols):
            residual = substitute_plane(monomial_sym(lam, spec.field, n).poly, plane)
            for e, c in residual.terms.items():
                rows.setdefault(e, {})[j] = c
        rows_by_mono.append(rows)
    matrix = []
    zero = spec.field.zero()
    for rows in rows_by_mono:
        for e in sorted(rows):
            entries = rows[e]
            matrix.append([entries.get(j, zero) for j in range(len(cols))])
    return matrix, cols


def dimension_oracle(spec: WheelSpec, n: int, d: int) -> int:
    """dim of degree-d symmetric polynomials in n variables obeying the wheel condition."""
    if n < spec.k + 1:
        return len(list(partitions_of_weight(d, n)))
    matrix, cols = _constraint_matrix(spec, n, d)
    return len(cols) - rank(matrix)


def kernel_basis(spec: WheelSpec, n: int, d: int) -> list[SymPoly]:
    """Deterministic basis of the degree-d component of F_n^(k,r), via the nullspace."""
    matrix, cols = _constraint_matrix(spec, n, d)
    vecs = nullspace(matrix, spec.field, len(cols))
    basis = []
    for v in vecs:
        coeffs = {lam: c for lam, c in zip(cols, v) if not c.is_zero()}
        basis.append(SymPoly.from_m_coeffs(coeffs, spec.field, n))
    return basis


def dimension_table(spec: WheelSpec, n_max: int, d_max: int) -> dict[tuple[int, int], int]:
    return {
        (n, d): dimension_oracle(spec, n, d)
        for n in range(n_max + 1)
        for d in range(d_max + 1)
    }


# deterministic pairwise-distinct rational values for free variables
_FREE_VALUES = [Fraction(p) for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37)]


def find_violation(g, spec: WheelSpec, trials: int = 8):
    """Search wheel-shaped evaluation points where g does not vanish.

    Points have the form (c q^{s_1}, c t q^{s_2}, ..., c t^k q^{s_{k+1}},
    y_1, ..., y_m) with deterministic rational c and free values y_j. Returns a
    witness dict or None.
    """
    poly = g.poly if isinstance(g, SymPoly) else g
    n = poly.n
    if n <= spec.k:
        raise ValueError("find_violation needs n > k")
    m = n - spec.k - 1
    for trial in range(trials):
        c = spec.field.from_rational(trial + 1)
        ys = [
            _FREE_VALUES[(j + trial) % len(_FREE_VALUES)] * (trial + 1)
            for j in range(m)
        ]
        for s in product(range(spec.r - 1), repeat=spec.k + 1):
            point = [
                c * spec.t ** i * spec.q ** s[i] for i in range(spec.k + 1)
            ] + [spec.field.from_rational(y) for y in ys]
            value = poly.evaluate(point)
            if not value.is_zero():
                return {"s": s, "c": trial + 1, "free": ys, "value": value}
    return None


def oracle_cell(args):
    """Picklable helper for parallel dimension tables: args = (k, r, n, d)."""
    k, r, n, d = args
    spec = WheelSpec(k, r)
    return (n, d, dimension_oracle(spec, n, d))
