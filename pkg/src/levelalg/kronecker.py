"""Symmetric-group characters and Kronecker coefficients.

Characters are computed by the Murnaghan-Nakayama rule on beta-sets
(first-column hook lengths): removing a border strip of length k from
lambda is subtracting k from one beta element so that the result is not
already in the set, with sign given by the number of elements jumped over.
The Kronecker coefficient is the class-weighted inner product of three
characters; everything is exact integer arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import CapExceededError, WeightMismatchError
from .partitions import check_partition, partitions

DEFAULT_WEIGHT_CAP = 10


@lru_cache(maxsize=None)
def character(lam: tuple, mu: tuple) -> int:
    """chi_lambda evaluated on the conjugacy class of cycle type mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise WeightMismatchError(f"{lam} and {mu} partition different integers")
    if not lam:
        return 1
    k = mu[0]
    rest = mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]  # strictly decreasing
    beta_set = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        if b < k or (b - k) in beta_set:
            continue
        jumped = sum(1 for x in beta if b - k < x < b)
        new_beta = sorted((x if x != b else b - k for x in beta), reverse=True)
        new_lam = tuple(x - (ell - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** jumped * character(new_lam, rest)
    return total


@lru_cache(maxsize=None)
def _z_mu(mu: tuple) -> int:
    """Order of the centraliser of a permutation of cycle type mu."""
    out = 1
    counts: dict[int, int] = {}
    for p in mu:
        counts[p] = counts.get(p, 0) + 1
    for k, m in counts.items():
        out *= factorial(m) * k ** m
    return out


def class_size(mu: tuple) -> int:
    mu = check_partition(mu)
    return factorial(sum(mu)) // _z_mu(mu)


def kronecker(lam, rho, mu, cap: int = DEFAULT_WEIGHT_CAP) -> int:
    """Multiplicity of the trivial representation in R_lam (x) R_rho (x) R_mu.

    Symmetric in the three partitions.  The weight cap guards runtime (the
    character table of S_n is walked in full); raise it explicitly for
    larger weights.
    """
    lam, rho, mu = check_partition(lam), check_partition(rho), check_partition(mu)
    n = sum(lam)
    if sum(rho) != n or sum(mu) != n:
        raise WeightMismatchError(
            f"weights differ: |{lam}| = {n}, |{rho}| = {sum(rho)}, |{mu}| = {sum(mu)}"
        )
    if n > cap:
        raise CapExceededError(
            f"weight {n} exceeds the cap {cap}; pass a larger cap explicitly"
        )
    if n == 0:
        return 1
    total = 0
    for cls in partitions(n):
        total += (character(lam, cls) * character(rho, cls) * character(mu, cls)
                  * factorial(n)) // _z_mu(cls)
    assert total % factorial(n) == 0
    return total // factorial(n)


def diagram_intersection_size(lam, mu) -> int:
    """Number of cells common to the Young diagrams of lam and mu."""
    lam, mu = check_partition(lam), check_partition(mu)
    return sum(min(a, b) for a, b in zip(lam, mu))


def dvir_bound_ok(lam, rho, mu) -> bool:
    """The sharp support bound: rho_1 <= |lam intersect mu|.

    A corollary bound rho_1 <= (columns of lam) * (rows of mu) follows,
    since the intersection diagram fits inside that box; it is the form
    the resolution machinery consumes.
    """
    lam, rho, mu = check_partition(lam), check_partition(rho), check_partition(mu)
    if not rho:
        return True
    return rho[0] <= diagram_intersection_size(lam, mu)


def dvir_check(lam, rho, mu, cap: int = DEFAULT_WEIGHT_CAP) -> bool:
    """True unless a nonzero Kronecker coefficient violates the bound.

    Used both as a cheap pre-filter and as a consistency test of the
    character computation: no nonzero coefficient may break it.
    """
    if dvir_bound_ok(lam, rho, mu):
        return True
    return kronecker(lam, rho, mu, cap=cap) == 0
