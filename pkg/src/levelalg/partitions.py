"""Partition combinatorics and polynomial-functor dimensions.

Partitions are tuples of weakly decreasing positive integers; the empty
tuple is the empty partition.  Dimensions of Schur functors come in two
independent flavours (hook content and Weyl), which the test suite plays
against each other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InvalidPartitionError


def check_partition(lam) -> tuple[int, ...]:
    lam = tuple(int(p) for p in lam if int(p) != 0)
    if any(p < 0 for p in lam):
        raise InvalidPartitionError(f"negative part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InvalidPartitionError(f"{lam} is not weakly decreasing")
    return lam


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def gen(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def partitions_max_part(n: int, k: int):
    """Partitions of n with every part at most k."""
    return tuple(p for p in partitions(n) if not p or p[0] <= k)


def partitions_in_box(rows: int, cols: int):
    """All partitions with at most `rows` parts, each at most `cols`
    (every weight, including the empty partition)."""

    def gen(r, maxpart):
        yield ()
        if r == 0 or maxpart == 0:
            return
        for first in range(maxpart, 0, -1):
            for rest in gen(r - 1, first):
                yield (first,) + rest

    return list(gen(rows, cols))


def conjugate(lam) -> tuple[int, ...]:
    lam = check_partition(lam)
    if not lam:
        return ()
    out = []
    for c in range(lam[0]):
        out.append(sum(1 for p in lam if p > c))
    return tuple(out)


def fits_in_box(lam, rows: int, cols: int) -> bool:
    lam = check_partition(lam)
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def contains(lam, mu) -> bool:
    """Containment of Young diagrams: mu_i <= lam_i for all i."""
    lam, mu = check_partition(lam), check_partition(mu)
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def hook_length(lam, i: int, j: int) -> int:
    conj = conjugate(lam)
    return (lam[i] - j) + (conj[j] - i) - 1


def sn_dim(lam) -> int:
    """Dimension of the symmetric-group irreducible: hook length formula."""
    lam = check_partition(lam)
    n = sum(lam)
    from math import factorial

    out = factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            out //= hook_length(lam, i, j)
    return out


def schur_dim(lam, n: int) -> int:
    """dim of the Schur functor on an n-dimensional space: hook content."""
    lam = check_partition(lam)
    if len(lam) > n:
        return 0
    num, den = 1, 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= hook_length(lam, i, j)
    assert num % den == 0
    return num // den


def weyl_dim(weight, n: int) -> int:
    """Weyl dimension formula for a weakly decreasing GL(n) weight.

    Works for arbitrary integer weights (negative entries allowed, i.e.
    rational representations); the weight is padded with zeros to length n.
    """
    w = list(weight) + [0] * (n - len(weight))
    if len(w) > n:
        raise InvalidPartitionError(f"weight {weight} too long for GL({n})")
    if any(w[i] < w[i + 1] for i in range(n - 1)):
        raise InvalidPartitionError(f"weight {tuple(weight)} is not dominant")
    out = Fraction(1)
    for p in range(n):
        for q in range(p + 1, n):
            out *= Fraction(w[p] - w[q] + q - p, q - p)
    assert out.denominator == 1
    return int(out)


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    try:
        parts = tuple(int(p.strip()) for p in text.split(","))
    except ValueError as exc:
        raise InvalidPartitionError(f"bad partition string {text!r}") from exc
    return check_partition(parts)


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam) if lam else "0"
