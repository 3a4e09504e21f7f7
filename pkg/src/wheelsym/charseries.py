"""Truncated character series chi_{k,r}(z, v) with exact integer coefficients."""

from __future__ import annotations

from .wheel import WheelSpec, dimension_oracle


def trunc_mul(a: list[int], b: list[int], v_max: int) -> list[int]:
    out = [0] * (v_max + 1)
    for i, ai in enumerate(a[: v_max + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: v_max + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def geometric_inverse(j: int, v_max: int) -> list[int]:
    """1/(1 - v^j) truncated."""
    out = [0] * (v_max + 1)
    p = 0
    while p <= v_max:
        out[p] = 1
        p += j
    return out


class CharSeries:
    """Map (n, d) -> integer coefficient, with truncation orders z_max, v_max."""

    def __init__(self, z_max: int, v_max: int, coeffs: dict | None = None):
        self.z_max = z_max
        self.v_max = v_max
        self.coeffs = dict(coeffs or {})

    def coefficient(self, n: int, d: int) -> int:
        if n > self.z_max or d > self.v_max:
            raise ValueError("coefficient outside truncation window")
        return self.coeffs.get((n, d), 0)

    def row(self, n: int) -> list[int]:
        return [self.coefficient(n, d) for d in range(self.v_max + 1)]

    def to_json(self) -> dict:
        return {
            "z_max": self.z_max,
            "v_max": self.v_max,
            "entries": [
                {"n": n, "d": d, "coeff": c}
                for (n, d), c in sorted(self.coeffs.items())
                if c
            ],
        }


def chi_k2(k: int, z_max: int, v_max: int) -> CharSeries:
    """Product expansion of prod_s (1 + v^s z + ... + (v^s z)^k), exactly truncated.

    Factors with s > v_max only contribute beyond v_max, so the finite product
    over s = 0..v_max is exact within the window.
    """
    # rows[n][d] with n <= z_max
    rows = [[0] * (v_max + 1) for _ in range(z_max + 1)]
    rows[0][0] = 1
    for s in range(v_max + 1):
        new = [[0] * (v_max + 1) for _ in range(z_max + 1)]
        for n in range(z_max + 1):
            for j in range(0, min(k, z_max - n) + 1):
                shift = s * j
                if shift > v_max:
                    break
                target = new[n + j]
                row = rows[n]
                for d in range(v_max + 1 - shift):
                    if row[d]:
                        target[d + shift] += row[d]
        rows = new
    coeffs = {
        (n, d): rows[n][d]
        for n in range(z_max + 1)
        for d in range(v_max + 1)
        if rows[n][d]
    }
    return CharSeries(z_max, v_max, coeffs)


def b_n_formula(k: int, n: int, v_max: int) -> list[int]:
    """The finite alternating-sum expression for the z^n row of chi_{k,2}."""
    total = [0] * (v_max + 1)
    a = 0
    while (k + 1) * a <= n:
        b = n - (k + 1) * a
        exp = (k + 1) * a * (a - 1) // 2
        if exp <= v_max:
            term = [0] * (v_max + 1)
            term[exp] = (-1) ** a
            for i in range(1, a + 1):
                term = trunc_mul(term, geometric_inverse((k + 1) * i, v_max), v_max)
            for j in range(1, b + 1):
                term = trunc_mul(term, geometric_inverse(j, v_max), v_max)
            total = [x + y for x, y in zip(total, term)]
        a += 1
    return total


def b_n_closed_k1(n: int, v_max: int) -> list[int]:
    """v^{n(n-1)/2} / prod_{i=1}^n (1 - v^i), the k=1 closed form."""
    exp = n * (n - 1) // 2
    out = [0] * (v_max + 1)
    if exp <= v_max:
        out[exp] = 1
    for i in range(1, n + 1):
        out = trunc_mul(out, geometric_inverse(i, v_max), v_max)
    return out


def slim_factor(n: int, m: int, v_max: int) -> list[int]:
    """prod_{s=1}^n (1 - v^{s m})/(1 - v^s): generating function of m-slim
    partitions of length <= n (finite geometric sums, exactly truncated)."""
    out = [0] * (v_max + 1)
    out[0] = 1
    for s in range(1, n + 1):
        factor = [0] * (v_max + 1)
        for j in range(m):
            if s * j <= v_max:
                factor[s * j] = 1
        out = trunc_mul(out, factor, v_max)
    return out


def chi_kr(k: int, r: int, z_max: int, v_max: int) -> CharSeries:
    """Row n: b_n^(k)(v^{r-1}) times the (r-1)-slim partition factor."""
    from math import gcd

    if gcd(k + 1, r - 1) != 1:
        raise ValueError("k+1 and r-1 must be coprime")
    coeffs = {}
    for n in range(z_max + 1):
        inner_max = v_max // (r - 1)
        bn = b_n_formula(k, n, inner_max)
        row = [0] * (v_max + 1)
        for d, c in enumerate(bn):
            if c:
                row[d * (r - 1)] = c
        row = trunc_mul(row, slim_factor(n, r - 1, v_max), v_max)
        for d, c in enumerate(row):
            if c:
                coeffs[(n, d)] = c
    return CharSeries(z_max, v_max, coeffs)


def compare_with_oracle(series: CharSeries, spec: WheelSpec, n_max: int, d_max: int):
    """Cell-by-cell equality report between the formula and the dimension oracle."""
    if n_max > series.z_max or d_max > series.v_max:
        raise ValueError("truncation window too small for the comparison")
    cells = []
    all_match = True
    for n in range(n_max + 1):
        for d in range(d_max + 1):
            formula = series.coefficient(n, d)
            oracle = dimension_oracle(spec, n, d)
            match = formula == oracle
            all_match = all_match and match
            cells.append(
                {"n": n, "d": d, "formula": formula, "oracle": oracle, "match": match}
            )
    return {"ok": all_match, "cells": cells}
