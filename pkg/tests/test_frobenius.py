import random

import pytest

from wheelsym.cycfield import CycField
from wheelsym.frobenius import (
    build_basis,
    frobenius_map,
    in_frobenius_image,
    split_by_slim,
    verify_basis,
)
from wheelsym.partitions import Partition, partitions_of_weight
from wheelsym.polyring import SymPoly, monomial_sym
from wheelsym.wheel import (
    WheelSpec,
    dimension_oracle,
    find_violation,
    is_member,
    kernel_basis,
)

Q = CycField(1)


def test_frobenius_map_examples():
    f = monomial_sym(Partition((2, 1)), Q)
    g = frobenius_map(f, 3)
    assert {tuple(lam): c for lam, c in g.m_coeffs().items()} == {
        (6, 3): Q.one()
    }
    assert frobenius_map(f, 1) == f


def test_frobenius_is_algebra_map():
    rng = random.Random(13)
    for _ in range(4):
        def rand_sym(n=2):
            total = monomial_sym(Partition((0,) * n), Q).poly.scale(0)
            for _ in range(3):
                d = rng.randint(0, 4)
                lams = list(partitions_of_weight(d, n))
                lam = lams[rng.randrange(len(lams))]
                total = total + monomial_sym(lam, Q, n).poly.scale(rng.randint(-3, 3))
            return SymPoly(total)

        f, g = rand_sym(), rand_sym()
        m = rng.choice((2, 3))
        assert frobenius_map(f * g, m) == frobenius_map(f, m) * frobenius_map(g, m)


def test_in_frobenius_image():
    f = monomial_sym(Partition((2, 0)), Q)
    pre, witness = in_frobenius_image(f, 2)
    assert witness is None
    assert frobenius_map(pre, 2) == f
    g = monomial_sym(Partition((2, 1)), Q)
    pre, witness = in_frobenius_image(g, 2)
    assert pre is None and witness == Partition((2, 1))


def test_frobenius_embeds_smaller_wheel_space():
    # members of F^(k,2) map under x -> x^(r-1) to members of F^(k,r)
    for k, r in ((1, 4), (2, 3)):
        small = WheelSpec(k, 2)
        big = WheelSpec(k, r)
        # lift into the big field so membership is testable there
        lifted = WheelSpec(k, 2, big.field)
        for d in range(4):
            for f in kernel_basis(lifted, k + 1, d):
                img = frobenius_map(f, r - 1)
                assert is_member(img, big)[0]


def test_build_and_verify_basis():
    for k, r, n, d_max in ((1, 4, 2, 6), (2, 3, 3, 4)):
        spec = WheelSpec(k, r)
        elements = build_basis(spec, n, d_max)
        oracle = {d: dimension_oracle(spec, n, d) for d in range(d_max + 1)}
        report = verify_basis(elements, spec, oracle)
        assert report["ok"], report


def test_verify_basis_flags_bad_element():
    spec = WheelSpec(1, 4)
    elements = build_basis(spec, 2, 4)
    # corrupt one polynomial so it leaves the space
    bad = elements[1]
    bad.poly = bad.poly + monomial_sym(
        Partition((bad.total_degree, 0)), spec.field
    )
    report = verify_basis(elements, spec, {d: dimension_oracle(spec, 2, d) for d in range(5)})
    assert not report["ok"]


def test_split_by_slim_on_members():
    # cofactors of a wheel-space member are Frobenius images of (k,2) members
    spec = WheelSpec(1, 4)
    small = WheelSpec(1, 2, spec.field)
    for d in range(2, 7):
        for h in kernel_basis(spec, 2, d):
            cof = split_by_slim(h, spec)
            for mu, f in cof.items():
                assert mu.is_slim(spec.r - 1)
                pre, witness = in_frobenius_image(f, spec.r - 1)
                assert witness is None
                assert is_member(pre, small)[0]


def test_split_by_slim_flags_non_member():
    # a slim monomial is not in the space; some cofactor must fail the test
    spec = WheelSpec(1, 4)
    small = WheelSpec(1, 2, spec.field)
    h = monomial_sym(Partition((2, 1)), spec.field)
    assert not is_member(h, spec)[0]
    cof = split_by_slim(h, spec)
    bad = []
    for mu, f in cof.items():
        pre, witness = in_frobenius_image(f, spec.r - 1)
        if witness is not None or not is_member(pre, small)[0]:
            bad.append(mu)
    assert bad


def test_split_recombines():
    # the split is exact: summing P_mu * F(cofactor-preimage scaled back) gives h
    from wheelsym.specialpolys import macdonald_poly

    spec = WheelSpec(1, 4)
    field = spec.field
    h = kernel_basis(spec, 2, 4)[0]
    for tg in (2, 3, 5):
        try:
            cof = split_by_slim(h, spec, generic_t=tg)
        except Exception:
            continue
        total = monomial_sym(Partition((0, 0)), field).poly.scale(0)
        for mu, f in cof.items():
            P = macdonald_poly(mu, spec.q, tg, field, 2)
            total = total + (P * f).poly
        assert SymPoly(total) == h
        break
    else:
        raise AssertionError("no generic parameter worked")
