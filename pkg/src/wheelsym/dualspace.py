"""The graded algebra on generators e_0, e_1, ..., its pairing with symmetric
polynomials, the relation series coefficients, and the straightening rewrite."""

from __future__ import annotations

from .cycfield import CycField, CycNum
from .linalg import rank
from .partitions import Partition, partitions_of_weight
from .polyring import SymPoly


class EElement:
    """Linear combination of products e_{lambda_1} * ... * e_{lambda_n}.

    e_0 is a genuine generator, so index partitions keep their zero parts and
    all terms have the same number of factors n.
    """

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: CycField, n: int, terms: dict | None = None):
        self.field = field
        self.n = n
        self.terms = {}
        if terms:
            for lam, c in terms.items():
                if len(lam) != n:
                    raise ValueError("index partition length != factor count")
                if not c.is_zero():
                    self.terms[Partition(lam)] = c

    @classmethod
    def basis(cls, lam: Partition, field: CycField) -> "EElement":
        return cls(field, len(lam), {lam: field.one()})

    @classmethod
    def zero(cls, field: CycField, n: int) -> "EElement":
        return cls(field, n)

    def __add__(self, other):
        if self.n != other.n or self.field != other.field:
            raise ValueError("mixed dual-space components")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        e = EElement(self.field, self.n)
        e.terms = out
        return e

    def __neg__(self):
        e = EElement(self.field, self.n)
        e.terms = {lam: -c for lam, c in self.terms.items()}
        return e

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "EElement":
        if not isinstance(c, CycNum):
            c = self.field.from_rational(c)
        e = EElement(self.field, self.n)
        if not c.is_zero():
            e.terms = {lam: coeff * c for lam, coeff in self.terms.items()}
        return e

    def __mul__(self, other: "EElement") -> "EElement":
        """Product joins the index partitions: e_lam * e_mu = e_{lam union mu}."""
        if self.field != other.field:
            raise ValueError("mixed fields")
        out: dict = {}
        for lam, c1 in self.terms.items():
            for mu, c2 in other.terms.items():
                nu = lam.union(mu)
                c = c1 * c2
                s = out.get(nu)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(nu, None)
                else:
                    out[nu] = s
        e = EElement(self.field, self.n + other.n)
        e.terms = out
        return e

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, EElement)
            and self.field == other.field
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        bits = [f"{list(c.coeffs)}*e_{tuple(lam)}" for lam, c in sorted(self.terms.items())]
        return f"EElement({' + '.join(bits) or '0'})"


def pairing(e: EElement, f: SymPoly) -> CycNum:
    """<e_lambda, m_mu> = delta; extended bilinearly."""
    total = e.field.zero()
    coeffs = f.m_coeffs()
    for lam, c in e.terms.items():
        fc = coeffs.get(lam)
        if fc is not None:
            total = total + c * fc
    return total


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def epsilon(i: int, k: int, t: CycNum) -> EElement:
    """Coefficient of z^{i(k+1)} in prod_{j=0}^{k} e(t^j z), in E_{k+1}.

    Summed over compositions (a_0..a_k) of i(k+1), each weighted t^{sum j a_j}.
    """
    field = t.field
    out = EElement.zero(field, k + 1)
    tot = i * (k + 1)
    for comp in _compositions(tot, k + 1):
        w = sum(j * a for j, a in enumerate(comp))
        lam = Partition(sorted(comp, reverse=True))
        term = EElement(field, k + 1, {lam: t ** w})
        out = out + term
    return out


def _epsilon_tail(i: int, k: int, t: CycNum):
    """Rewrite data: e_{(i^{k+1})} == factor * sum of the tail terms of epsilon_i."""
    ep = epsilon(i, k, t)
    head = Partition((i,) * (k + 1))
    head_coeff = ep.terms.pop(head)  # (-1)^{ik}; ep is discarded afterwards
    sign = -head_coeff.inverse()
    return {lam: c * sign for lam, c in ep.terms.items()}


def straighten(e: EElement, k: int, t: CycNum) -> EElement:
    """Express the class of e in the quotient in the admissible e-basis.

    Repeatedly rewrites the lex-smallest nonadmissible term: terms with more
    than k zero parts vanish; otherwise k+1 equal parts i are traded for
    lex-greater partitions via the relation epsilon_i * E = 0.
    """
    tails: dict[int, dict] = {}
    current = {Partition(lam): c for lam, c in e.terms.items()}
    while True:
        bad = None
        for lam in sorted(current):
            if any(lam.multiplicity(v) > k for v in set(lam)):
                bad = lam
                break
        if bad is None:
            break
        coeff = current.pop(bad)
        if bad.multiplicity(0) > k:
            continue
        i = min(v for v in set(bad) if v > 0 and bad.multiplicity(v) > k)
        remaining = list(bad)
        for _ in range(k + 1):
            remaining.remove(i)
        tilde = Partition(remaining)
        if i not in tails:
            tails[i] = _epsilon_tail(i, k, t)
        for mu, c in tails[i].items():
            nu = mu.union(tilde)
            s = current.get(nu)
            s = coeff * c if s is None else s + coeff * c
            if s.is_zero():
                current.pop(nu, None)
            else:
                current[nu] = s
    out = EElement(e.field, e.n)
    out.terms = current
    return out


def complement_dimension(k: int, t: CycNum, n: int, d: int) -> int:
    """dim of the degree-d part of the relation ideal J * E_{n-k-1} inside E_n."""
    if n < k + 1:
        raise ValueError("need n >= k+1")
    field = t.field
    basis = list(partitions_of_weight(d, n))
    index = {lam: j for j, lam in enumerate(basis)}
    rows = []
    zero = field.zero()
    max_i = d // (k + 1)
    for i in range(max_i + 1):
        rest = d - i * (k + 1)
        ep = epsilon(i, k, t)
        for mu in partitions_of_weight(rest, n - k - 1):
            prod = ep * EElement.basis(mu, field)
            row = [zero] * len(basis)
            for lam, c in prod.terms.items():
                row[index[lam]] = c
            rows.append(row)
    return rank(rows)
