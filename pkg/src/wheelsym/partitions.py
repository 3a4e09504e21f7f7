"""Partitions of fixed length with dominance/lex orders, admissibility and slimness."""

from __future__ import annotations

from dataclasses import dataclass


class Partition(tuple):
    """Nonincreasing tuple of nonnegative integers; zeros are retained.

    Tuple comparison coincides with the lexicographic order on partitions
    (first differing part decides), so Partition sorts "small first" in lex.
    """

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError("negative part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not nonincreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def multiplicity(self, i: int) -> int:
        """m_i: how many parts equal i, zero parts counted within the length."""
        return sum(1 for p in self if p == i)

    def is_admissible(self, k: int, r: int) -> bool:
        """lambda_i - lambda_{i+k} >= r for all i (1-based i up to n-k)."""
        return all(self[i] - self[i + k] >= r for i in range(len(self) - k))

    def is_slim(self, m: int) -> bool:
        """All consecutive gaps and the last part strictly less than m."""
        if m < 1:
            raise ValueError("slimness modulus must be positive")
        if self and self[-1] >= m:
            return False
        return all(self[i] - self[i + 1] < m for i in range(len(self) - 1))

    def divide_by(self, m: int) -> "SlimDecomposition":
        """Unique decomposition self = m*quotient + remainder with slim remainder.

        Built bottom-up: each remainder part is congruent to the original part
        mod m and lies in the window [prev, prev + m - 1] above the part below.
        """
        if m < 1:
            raise ValueError("divisor must be positive")
        n = len(self)
        nu = [0] * n
        prev = 0
        for i in range(n - 1, -1, -1):
            residue = self[i] % m
            v = prev + (residue - prev) % m
            if v > self[i]:
                raise AssertionError(f"no slim remainder for {self} by {m}")
            nu[i] = v
            prev = v
        mu = [(self[i] - nu[i]) // m for i in range(n)]
        return SlimDecomposition(Partition(mu), Partition(nu), m)

    def __add__(self, other):
        if len(other) != len(self):
            raise ValueError("length mismatch in partition addition")
        return Partition(a + b for a, b in zip(self, other))

    def scale(self, c: int) -> "Partition":
        return Partition(c * p for p in self)

    def union(self, other) -> "Partition":
        """Multiset join of the parts, sorted descending."""
        return Partition(sorted(list(self) + list(other), reverse=True))

    def pad(self, n: int) -> "Partition":
        if n < len(self):
            raise ValueError("cannot shrink a partition")
        return Partition(tuple(self) + (0,) * (n - len(self)))

    def __repr__(self):
        return f"Partition({tuple(self)})"


@dataclass(frozen=True)
class SlimDecomposition:
    quotient: Partition
    remainder: Partition
    divisor: int

    def recompose(self) -> Partition:
        return self.quotient.scale(self.divisor) + self.remainder


def compare_lex(a: Partition, b: Partition) -> int:
    """-1 / 0 / 1 with a < b meaning a precedes b (first differing part smaller)."""
    if tuple(a) == tuple(b):
        return 0
    return -1 if tuple(a) < tuple(b) else 1


def compare_dominance(a: Partition, b: Partition) -> str:
    """'less' / 'greater' / 'equal' / 'incomparable'; weights must agree."""
    if a.weight != b.weight:
        raise ValueError("dominance comparison requires equal weights")
    n = max(len(a), len(b))
    ge = le = True
    sa = sb = 0
    for i in range(n):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            ge = False
        if sa > sb:
            le = False
    if ge and le:
        return "equal"
    if ge:
        return "greater"
    if le:
        return "less"
    return "incomparable"


def dominates(a: Partition, b: Partition) -> bool:
    return compare_dominance(a, b) in ("greater", "equal")


def partitions_of_weight(d: int, n: int):
    """All partitions of weight exactly d with at most n parts, as length-n tuples.

    Yielded in lexicographically decreasing order of the part tuples.
    """
    def gen(remaining, maxpart, slots):
        if remaining == 0:
            yield (0,) * slots
            return
        if slots == 0:
            return
        top = min(maxpart, remaining)
        for first in range(top, 0, -1):
            for rest in gen(remaining - first, first, slots - 1):
                yield (first,) + rest

    if n == 0:
        if d == 0:
            yield Partition(())
        return
    for parts in gen(d, d, n):
        yield Partition(parts)


def enumerate_partitions(n: int, max_weight: int, predicate=None):
    """Partitions in pi_n of weight <= max_weight passing the predicate, lex order."""
    out = []
    for d in range(max_weight + 1):
        for lam in partitions_of_weight(d, n):
            if predicate is None or predicate(lam):
                out.append(lam)
    out.sort(key=tuple)
    return out


def admissible_filter(k: int, r: int):
    return lambda lam: lam.is_admissible(k, r)


def slim_filter(m: int):
    return lambda lam: lam.is_slim(m)


def count_by_weight(n: int, max_weight: int, predicate=None) -> dict[int, int]:
    tally = {d: 0 for d in range(max_weight + 1)}
    for d in range(max_weight + 1):
        for lam in partitions_of_weight(d, n):
            if predicate is None or predicate(lam):
                tally[d] += 1
    return tally


def parse_partition(text: str) -> Partition:
    """Parse the CLI form '3,1,0' (empty string = empty partition)."""
    text = text.strip()
    if not text:
        return Partition(())
    return Partition(int(p) for p in text.split(","))
