"""The resolution machinery for the rank loci Le(i, r) in G(t, S_d).

Three computations live here: the term-by-term ranks of the locally free
resolution of O_{Le} (partitions in a box, Bott on the inner Grassmannian,
Schur-functor dimensions), the C1/C2 hypothesis analysis with candidate
component lists, and the E1 page of the twisted hypercohomology spectral
sequence via Kronecker decomposition plus Bott on the outer Grassmannian.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bott import schur_qdual_cohomology, schur_sub_twist_cohomology
from .errors import CapExceededError, LevelAlgError
from .kronecker import DEFAULT_WEIGHT_CAP, kronecker
from .levelhf import (
    HilbertFunction,
    dim_stratum,
    dominates,
    enumerate_level_hf,
    grassmannian_dim,
    is_level_sequence,
)
from .partitions import conjugate, partitions, partitions_in_box, schur_dim


def expected_codim(t: int, d: int, i: int, r: int) -> int:
    """The degeneracy-locus codimension bound (t(d-i+1) - r)(i+1 - r)."""
    return (t * (d - i + 1) - r) * (i + 1 - r)


@dataclass(frozen=True)
class ResolutionSummand:
    """One summand of a resolution term: the box partition, the rank of its
    Schur factor, and the Bott degree/dimension of its cohomology factor."""

    lam: tuple
    schur_rank: int
    bott_degree: int
    bott_dim: int

    @property
    def rank(self) -> int:
        return self.schur_rank * self.bott_dim


@dataclass(frozen=True)
class ResolutionTable:
    """Ranks and summands of the terms E^p, p = -c..0."""

    t: int
    d: int
    i: int
    r: int
    codim: int
    terms: dict  # p -> tuple of ResolutionSummand

    def rank(self, p: int) -> int:
        return sum(s.rank for s in self.terms.get(p, ()))

    def ranks(self) -> list[int]:
        """Ranks of E^0, E^{-1}, ..., E^{-c}."""
        return [self.rank(-k) for k in range(self.codim + 1)]


def lascoux_ranks(t: int, d: int, i: int, r: int,
                  cell_cap: int = 400) -> ResolutionTable:
    """Terms of the resolution of O_{Le(i,r)}, assuming expected codimension.

    Partitions lambda run over the box with t(d-i+1) rows and i-r+1
    columns; each contributes in homological degree p = nu(lam') - |lam|
    the rank dim S_lam(k^{t(d-i+1)}) times the Bott dimension of
    S_{lam'}(Q*) on G(r, S_i).
    """
    if not 0 <= r < i + 1:
        raise LevelAlgError(f"need 0 <= r < i + 1, got r = {r}, i = {i}")
    rows_bound = t * (d - i + 1)
    cols_bound = i + 1 - r
    if rows_bound * cols_bound > cell_cap:
        raise CapExceededError(
            f"partition box {rows_bound} x {cols_bound} exceeds the cell cap "
            f"{cell_cap}"
        )
    c = expected_codim(t, d, i, r)
    terms: dict[int, list[ResolutionSummand]] = {}
    for lam in partitions_in_box(rows_bound, cols_bound):
        res = schur_qdual_cohomology(r, i + 1, conjugate(lam))
        if res.is_zero:
            continue
        p = res.degree - sum(lam)
        if not -c <= p <= 0:
            raise LevelAlgError(
                f"internal bug: homological degree {p} outside [-{c}, 0]"
            )
        summand = ResolutionSummand(lam, schur_dim(lam, rows_bound),
                                    res.degree, res.dimension)
        terms.setdefault(p, []).append(summand)
    return ResolutionTable(t, d, i, r, c,
                           {p: tuple(v) for p, v in terms.items()})


@dataclass(frozen=True)
class ComponentReport:
    """C1/C2 analysis of Le(i, r).

    Candidate components are the strata of maximal level Hilbert functions
    (under componentwise domination) among those with h_i <= r.  Reading
    them as the irreducible components of Le(i, r) reproduces every worked
    case, but is an assumption, hence `candidates`, not `components`.
    """

    t: int
    d: int
    i: int
    r: int
    c2_holds: bool
    c2_strict: bool
    c2_witness: HilbertFunction | None
    expected_codim: int
    candidates: tuple  # of (HilbertFunction, dim, codim)
    c1_holds: bool


def c2_witness_hf(t: int, d: int, i: int, r: int) -> HilbertFunction:
    """The level Hilbert function built from C2: the ramp to degree i-1,
    then min{r - (j-i)(i-r), t(d-j+1)}."""
    values = []
    for j in range(d + 1):
        if j <= i - 1:
            values.append(j + 1)
        else:
            values.append(min(r - (j - i) * (i - r), t * (d - j + 1)))
    ok, idx = is_level_sequence(values)
    if not ok:
        raise LevelAlgError(f"internal bug: C2 witness fails concavity at {idx}")
    return HilbertFunction.from_values(values)


def c1_c2_analysis(t: int, d: int, i: int, r: int) -> ComponentReport:
    """Evaluate the numerical hypotheses C1 and C2 for Le(i, r).

    C2 is the inequality r - (d-i)(i-r) >= t; when it holds the witness
    Hilbert function is attached.  C1 is reported as: every candidate
    component has codimension equal to the degeneracy bound.
    """
    if not r < i + 1:
        raise LevelAlgError(f"need r < i + 1, got r = {r}, i = {i}")
    c2_value = r - (d - i) * (i - r)
    c2 = c2_value >= t
    witness = c2_witness_hf(t, d, i, r) if c2 else None
    bound = expected_codim(t, d, i, r)
    dim_g = grassmannian_dim(t, d)
    admissible = [h for h in enumerate_level_hf(t, d) if h[i] <= r]
    maximal = [
        h for h in admissible
        if not any(other is not h and dominates(other, h) for other in admissible)
    ]
    candidates = tuple(
        (h, dim_stratum(h), dim_g - dim_stratum(h)) for h in maximal
    )
    c1 = bool(candidates) and all(codim == bound for _, _, codim in candidates)
    return ComponentReport(t, d, i, r, c2, c2_value > t, witness, bound,
                           candidates, c1)


@dataclass(frozen=True)
class E1Table:
    """Dimensions of the E1 page of the twisted hypercohomology spectral
    sequence, indexed by (p, q); absent keys are zero."""

    t: int
    d: int
    i: int
    r: int
    m: int
    entries: dict  # (p, q) -> positive dimension
    truncated_weights: tuple  # weights skipped because of the cap

    @property
    def truncated(self) -> bool:
        return bool(self.truncated_weights)

    def entry(self, p: int, q: int) -> int:
        return self.entries.get((p, q), 0)

    def max_q_nonzero(self) -> int | None:
        return max((q for (_, q) in self.entries), default=None)


def e1_vanishing_table(t: int, d: int, i: int, r: int, m: int,
                       cap_weight: int = DEFAULT_WEIGHT_CAP) -> E1Table:
    """E1^{p,q}(m) = H^q(G(t, S_d), E^p(m)) via Kronecker plus Bott.

    Every box partition lambda decomposes S_lam(B (x) R_{d-i}) into
    summands S_rho(B) (x) S_mu(R_{d-i}) with Kronecker multiplicities;
    Bott on G(t, S_d) then locates the unique cohomology degree of
    S_rho(B)(m).  Partitions heavier than the weight cap are skipped and
    reported in `truncated_weights`.
    """
    table = lascoux_ranks(t, d, i, r)
    rows_bound = t * (d - i + 1)
    mu_rows = d - i + 1
    entries: dict[tuple[int, int], int] = {}
    skipped: set[int] = set()
    for p, summands in table.terms.items():
        for s in summands:
            lam = s.lam
            w = sum(lam)
            if w > cap_weight:
                skipped.add(w)
                continue
            if w == 0:
                res = schur_sub_twist_cohomology(t, d + 1, (), m)
                if not res.is_zero:
                    key = (p, res.degree)
                    entries[key] = entries.get(key, 0) + s.bott_dim * res.dimension
                continue
            for rho in partitions(w):
                if len(rho) > t:
                    continue
                res = schur_sub_twist_cohomology(t, d + 1, rho, m)
                if res.is_zero:
                    continue
                for mu in partitions(w):
                    if len(mu) > mu_rows:
                        continue
                    c = kronecker(lam, rho, mu, cap=cap_weight)
                    if c == 0:
                        continue
                    dim_mu = schur_dim(mu, mu_rows)
                    key = (p, res.degree)
                    entries[key] = entries.get(key, 0) + \
                        s.bott_dim * c * dim_mu * res.dimension
    return E1Table(t, d, i, r, m, entries, tuple(sorted(skipped)))
