"""Frobenius substitution x_i -> x_i^(r-1), the product basis of F^(k,r), and
the slim-cofactor decomposition used for the membership characterization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cycfield import CycNum
from .linalg import SingularSystemError, rank, solve
from .partitions import Partition, partitions_of_weight
from .polyring import MPoly, SymPoly, monomial_sym
from .specialpolys import NonGenericParametersError, hall_littlewood, macdonald_poly
from .wheel import WheelSpec, is_member

GENERIC_T_CANDIDATES = (Fraction(2), Fraction(3), Fraction(5))


def frobenius_map(f: SymPoly, m: int) -> SymPoly:
    """Substitute x_i -> x_i^m; on the m-basis: c_lam m_lam -> c_lam m_{m*lam}."""
    poly = f.poly
    terms = {tuple(e_i * m for e_i in e): c for e, c in poly.terms.items()}
    out = MPoly(poly.field, poly.n)
    out.terms = terms
    return SymPoly(out)


def in_frobenius_image(f: SymPoly, m: int):
    """(preimage, None) when every m-support partition is divisible by m,
    else (None, witness partition)."""
    coeffs = f.m_coeffs()
    pre = {}
    for lam, c in coeffs.items():
        if any(p % m for p in lam):
            return None, lam
        pre[Partition(p // m for p in lam)] = c
    return SymPoly.from_m_coeffs(pre, f.field, f.n), None


@dataclass
class ProductBasisElement:
    lam: Partition       # admissible index of the Frobenius factor
    mu: Partition        # slim index of the cofactor
    poly: SymPoly        # f_lam * g_mu

    @property
    def total_degree(self) -> int:
        return self.poly.poly.degree()


def build_basis(spec: WheelSpec, n: int, max_degree: int) -> list[ProductBasisElement]:
    """Products F(P_lam(x; t)) * m_mu over admissible lam and slim mu.

    lam runs over (k,1,n)-admissible partitions, mu over (r-1)-slim ones, with
    (r-1)|lam| + |mu| <= max_degree.
    """
    k, r = spec.k, spec.r
    field = spec.field
    out = []
    hl_cache: dict[Partition, SymPoly] = {}
    for dl in range(max_degree // (r - 1) + 1):
        for lam in partitions_of_weight(dl, n):
            if not lam.is_admissible(k, 1):
                continue
            if lam not in hl_cache:
                hl_cache[lam] = hall_littlewood(lam, spec.t, field, n)
            f_lam = frobenius_map(hl_cache[lam], r - 1)
            for dm in range(max_degree - (r - 1) * dl + 1):
                for mu in partitions_of_weight(dm, n):
                    if not mu.is_slim(r - 1):
                        continue
                    g_mu = monomial_sym(mu, field, n)
                    out.append(ProductBasisElement(lam, mu, f_lam * g_mu))
    out.sort(key=lambda el: (el.total_degree, tuple(el.lam), tuple(el.mu)))
    return out


def verify_basis(elements: list[ProductBasisElement], spec: WheelSpec, oracle_dims: dict[int, int]):
    """Check membership, per-degree independence, and counts against the oracle.

    oracle_dims maps degree -> expected dimension. Returns a report dict.
    """
    report = {
        "membership_failures": [],
        "degrees": {},
        "independent": True,
        "counts_match": True,
    }
    by_degree: dict[int, list[ProductBasisElement]] = {}
    for el in elements:
        by_degree.setdefault(el.total_degree, []).append(el)
    for d, dim in sorted(oracle_dims.items()):
        els = by_degree.get(d, [])
        for el in els:
            ok, witness = is_member(el.poly, spec)
            if not ok:
                report["membership_failures"].append(
                    {"lam": tuple(el.lam), "mu": tuple(el.mu), "degree": d}
                )
        # independence: rank of the m-coefficient matrix
        support = sorted({lam for el in els for lam in el.poly.m_coeffs()})
        index = {lam: j for j, lam in enumerate(support)}
        zero = spec.field.zero()
        matrix = []
        for el in els:
            row = [zero] * len(support)
            for lam, c in el.poly.m_coeffs().items():
                row[index[lam]] = c
            matrix.append(row)
        rk = rank(matrix) if matrix else 0
        independent = rk == len(els)
        report["degrees"][d] = {
            "count": len(els),
            "oracle_dim": dim,
            "rank": rk,
            "independent": independent,
        }
        report["independent"] = report["independent"] and independent
        report["counts_match"] = report["counts_match"] and len(els) == dim
    report["ok"] = (
        not report["membership_failures"]
        and report["independent"]
        and report["counts_match"]
    )
    return report


def split_by_slim(h: SymPoly, spec: WheelSpec, generic_t=None) -> dict[Partition, SymPoly]:
    """Write h = sum_mu P_mu(q, t~) * F(f~_mu) over slim mu; return the Frobenius
    cofactors f_mu = F(f~_mu).

    Works per homogeneous degree. The Macdonald polynomials use the spec's
    root-of-unity q and a generic rational t~; candidates are tried in order and
    eigenvalue collisions fall through to the next.
    """
    field = h.field
    n = h.n
    r = spec.r
    candidates = [generic_t] if generic_t is not None else list(GENERIC_T_CANDIDATES)
    last_err = None
    for tg in candidates:
        try:
            return _split_at(h, spec, tg)
        except (NonGenericParametersError, SingularSystemError) as err:
            last_err = err
    raise NonGenericParametersError(f"no generic t~ candidate worked: {last_err}")


def _split_at(h: SymPoly, spec: WheelSpec, tg) -> dict[Partition, SymPoly]:
    field = h.field
    n = h.n
    r = spec.r
    # homogeneous components of h
    by_degree: dict[int, dict[Partition, CycNum]] = {}
    for lam, c in h.m_coeffs().items():
        by_degree.setdefault(lam.weight, {})[lam] = c

    cofactors: dict[Partition, dict[Partition, CycNum]] = {}
    mac_cache: dict[Partition, SymPoly] = {}
    for d, target in sorted(by_degree.items()):
        space = list(partitions_of_weight(d, n))
        index = {lam: j for j, lam in enumerate(space)}
        pairs = []
        columns = []
        zero = field.zero()
        for dm in range(d + 1):
            if (d - dm) % (r - 1):
                continue
            dn = (d - dm) // (r - 1)
            for mu in partitions_of_weight(dm, n):
                if not mu.is_slim(r - 1):
                    continue
                if mu not in mac_cache:
                    mac_cache[mu] = macdonald_poly(mu, spec.q, tg, field, n)
                for nu in partitions_of_weight(dn, n):
                    prod = mac_cache[mu] * frobenius_map(
                        monomial_sym(nu, field, n), r - 1
                    )
                    col = [zero] * len(space)
                    for lam, c in prod.m_coeffs().items():
                        col[index[lam]] = c
                    pairs.append((mu, nu))
                    columns.append(col)
        if len(pairs) != len(space):
            raise AssertionError("slim-product basis has wrong cardinality")
        matrix = [[columns[j][i] for j in range(len(pairs))] for i in range(len(space))]
        rhs = [target.get(lam, zero) for lam in space]
        x = solve(matrix, rhs, field)
        for (mu, nu), c in zip(pairs, x):
            if not c.is_zero():
                scaled = Partition(p * (r - 1) for p in nu)
                slot = cofactors.setdefault(mu, {})
                slot[scaled] = slot.get(scaled, zero) + c
    return {
        mu: SymPoly.from_m_coeffs(coeffs, field, n)
        for mu, coeffs in cofactors.items()
        if any(not c.is_zero() for c in coeffs.values())
    }
