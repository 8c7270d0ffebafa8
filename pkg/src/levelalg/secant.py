"""Secant planes of the rational normal curve and Waring loci.

A secant plane is always carried by its apolar operator u: the plane is the
projectivisation of the forms of degree d killed by u, which by Jordan's
lemma has dimension deg u (so projective dimension deg u - 1).  Operators
of degree d + 1 are allowed and carry the whole ambient space.  No roots
are ever extracted; every computation stays inside the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .apolarity import (
    ann_slice,
    hilbert_function,
    jordan_apolar_basis,
    minimal_generators,
)
from .errors import (
    AdmissibilityError,
    DegreeError,
    LevelAlgError,
    NotSquareError,
    PropernessError,
    WitnessError,
    ZeroSubspaceError,
)
from .forms import Form, Subspace, monomials, space_dim, subspace_intersect
from .levelhf import HilbertFunction, dim_stratum, q_sequence
from .linalg import QQ, Matrix, det, rank, right_kernel


@dataclass(frozen=True)
class SecantPlane:
    """A secant (q-1)-plane to C_d, represented by its apolar form u in R_q.

    q = d + 1 is the degenerate case of the full ambient space (every
    operator of degree d + 1 kills all of S_d).
    """

    apolar_form: Form
    ambient_degree: int

    def __post_init__(self):
        if self.apolar_form.is_zero:
            raise ZeroSubspaceError("a secant plane needs a nonzero apolar form")
        if self.apolar_form.ring != "R":
            raise DegreeError("the apolar form must be an operator (ring R)")
        if self.apolar_form.degree > self.ambient_degree + 1:
            raise DegreeError(
                f"apolar degree {self.apolar_form.degree} exceeds d + 1 = "
                f"{self.ambient_degree + 1}"
            )

    @property
    def q(self) -> int:
        return self.apolar_form.degree

    @property
    def plane_dim(self) -> int:
        return self.q - 1

    def subspace(self) -> Subspace:
        """(u)^{-1}_d: the degree-d forms apolar to u, of dimension q."""
        n, d, u = self.apolar_form.nvars, self.ambient_degree, self.apolar_form
        if u.degree == d + 1:
            return Subspace.full(n, d, "S")
        from .apolarity import _monomial_action_vector_from_operator
        from .forms import monomial_index

        out_index = monomial_index(n, d - u.degree)
        dim_sd = space_dim(n, d)
        cols = [
            _monomial_action_vector_from_operator(u, beta, out_index)
            for beta in monomials(n, d)
        ]
        rows = [[cols[b][k] for b in range(dim_sd)] for k in range(len(out_index))]
        kernel = right_kernel(rows, ncols=dim_sd)
        return Subspace.span(n, d, "S",
                             [Form.from_vector(n, d, "S", v) for v in kernel])


def secant_decompose(lam: Subspace) -> list[SecantPlane]:
    """Express Lambda as an intersection of secant planes.

    The minimal generators of ann(Lambda) have degrees given by the
    q-sequence of the Hilbert function; each generator u cuts out the plane
    of forms apolar to it, and the intersection of all the planes is
    exactly Lambda.  The equality is re-verified and a failure signals an
    internal bug.
    """
    if lam.nvars != 2:
        raise DegreeError("secant decomposition is a two-variable operation")
    h = hilbert_function(lam)
    gens = minimal_generators(lam)
    planes = [SecantPlane(g, lam.degree) for _, forms in gens for g in forms]
    degrees = tuple(sorted(p.q for p in planes))
    if degrees != q_sequence(h):
        raise LevelAlgError(
            "internal bug: generator degrees do not match the q-sequence"
        )
    check = Subspace.full(lam.nvars, lam.degree, "S")
    for p in planes:
        check = subspace_intersect(check, p.subspace())
    if check != lam:
        raise LevelAlgError("internal bug: plane intersection is not Lambda")
    return planes


def secant_intersect(planes: list[SecantPlane]) -> tuple[Subspace, HilbertFunction]:
    """Intersect secant planes that meet properly.

    With t + 1 planes of degrees q_i in P(S_d), properness means the
    codimensions d + 1 - q_i add up to d - t + 1.  The result is the
    subspace Lambda (of dimension t) together with the Hilbert function
    h_i = 2 h_{i-1} - h_{i-2} - e_i forced by the degrees.
    """
    if not planes:
        raise PropernessError("no planes to intersect")
    d = planes[0].ambient_degree
    if any(p.ambient_degree != d for p in planes):
        raise PropernessError("planes live in different ambient degrees")
    t = len(planes) - 1
    if t < 1:
        raise PropernessError("need at least two planes")
    qs = sorted(p.q for p in planes)
    codim_sum = sum(d + 1 - q for q in qs)
    if codim_sum != d - t + 1:
        raise PropernessError(
            f"codimensions sum to {codim_sum}, expected d - t + 1 = {d - t + 1}"
        )
    lam = Subspace.full(2, d, "S")
    for p in planes:
        lam = subspace_intersect(lam, p.subspace())
    if lam.dim != t:
        raise PropernessError(
            f"intersection has dimension {lam.dim}, expected {t}: improper"
        )
    es = {q: 0 for q in range(1, d + 2)}
    for q in qs:
        es[q] += 1
    values = [1]
    for i in range(1, d + 1):
        prev = values[i - 1]
        prev2 = values[i - 2] if i >= 2 else 0
        values.append(2 * prev - prev2 - es[i])
    return lam, HilbertFunction.from_values(values)


@dataclass(frozen=True)
class GAD:
    """A generalised additive decomposition pattern.

    `points` holds the coefficient pairs (c1, c2) of the pairwise
    nonproportional linear forms L_i = c1 y1 + c2 y2; `alphas` the
    exponents with -1 <= alpha_i < d.  The operator dual to L_i is
    c2 x1 - c1 x2 (the one annihilating every power of L_i).
    """

    points: tuple
    alphas: tuple

    def __post_init__(self):
        if len(self.points) != len(self.alphas):
            raise AdmissibilityError("points and exponents differ in length")
        pts = [(QQ(a), QQ(b)) for a, b in self.points]
        for a, b in pts:
            if a == 0 and b == 0:
                raise AdmissibilityError("(0, 0) is not a point of P^1")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if pts[i][0] * pts[j][1] - pts[j][0] * pts[i][1] == 0:
                    raise AdmissibilityError(
                        f"points {i + 1} and {j + 1} are proportional"
                    )
        if any(a < -1 for a in self.alphas):
            raise AdmissibilityError("exponents must be >= -1")

    @property
    def length(self) -> int:
        return sum(a + 1 for a in self.alphas)


def gad_subspace(g: GAD, d: int) -> Subspace:
    """W(alpha, L): forms admitting a GAD with the given pattern.

    Equals the apolar subspace of the product of the dual operators raised
    to alpha_i + 1, so it has dimension equal to the length of the
    pattern.  Exponents -1 contribute nothing.
    """
    if any(a >= d for a in g.alphas):
        raise DegreeError("exponents must be < d")
    if g.length > d + 1:
        raise DegreeError(f"length {g.length} exceeds dim S_d = {d + 1}")
    factors = [
        (c2, -c1, alpha + 1)
        for (c1, c2), alpha in zip(g.points, g.alphas)
        if alpha >= 0
    ]
    if not factors:
        return Subspace.zero(2, d, "S")
    return jordan_apolar_basis(factors, d)


def hankel_coordinates(f: Form) -> list[Fraction]:
    """Coordinates z_i = i! (d-i)! a_i of a binary form F = sum a_i y1^{d-i} y2^i.

    These are the values of the coordinate operators x1^{d-i} x2^i on F;
    in them the catalecticant matrices become genuine Hankel matrices with
    rank equal to the Hilbert function.
    """
    if f.nvars != 2 or f.ring != "S":
        raise DegreeError("Hankel coordinates need a binary form in S")
    d = f.degree
    return [
        math.factorial(i) * math.factorial(d - i) * f.coeff((d - i, i))
        for i in range(d + 1)
    ]


def hankel_matrix(f: Form, a: int) -> Matrix:
    """The (a+1) x (d-a+1) Hankel matrix [z_{r+c}] of f."""
    d = f.degree
    if not 0 <= a <= d:
        raise DegreeError(f"Hankel index {a} outside 0..{d}")
    z = hankel_coordinates(f)
    return [[z[r + c] for c in range(d - a + 1)] for r in range(a + 1)]


def hankel_rank(f: Form, a: int) -> int:
    """rank of the Hankel matrix; equals H(R/ann(F), a)."""
    if f.is_zero:
        return 0
    return rank(hankel_matrix(f, a))


def sigma_dim(t: int, d: int, s: int) -> int:
    """dim of the locus of t-spaces lying on a secant (s-1)-plane:
    min{s + t(s - t), t(d - t + 1)}."""
    if not t <= s <= d + 1:
        raise DegreeError(f"need t <= s <= d + 1, got (t, d, s) = ({t}, {d}, {s})")
    return min(s + t * (s - t), t * (d - t + 1))


def waring_witness_hf(t: int, d: int, s: int) -> HilbertFunction:
    """The level Hilbert function witnessing dim Sigma_s = N1 when N1 < N2.

    With m the unique integer satisfying (m+1) t > s >= m t, the witness is
    i+1 up to s-1, the constant s through d-m, then (d-i+1) t.  It has
    h_s = s and stratum dimension exactly N1.
    """
    n1 = s + t * (s - t)
    n2 = t * (d - t + 1)
    if not t <= s <= d + 1:
        raise DegreeError(f"need t <= s <= d + 1, got (t, d, s) = ({t}, {d}, {s})")
    if n1 >= n2:
        raise WitnessError(
            f"N1 = {n1} >= N2 = {n2}: the locus already fills the Grassmannian "
            "and no witness is needed"
        )
    m = s // t
    assert (m + 1) * t > s >= m * t
    assert s <= d - m, "N1 < N2 forces s <= d - m"
    values = []
    for i in range(d + 1):
        if i <= s - 1:
            values.append(i + 1)
        elif i <= d - m:
            values.append(s)
        else:
            values.append((d - i + 1) * t)
    h = HilbertFunction(tuple(values))
    assert h[s] == s and dim_stratum(h) == n1
    return h


def in_sigma(lam: Subspace, s: int) -> Form | None:
    """A nonzero degree-s apolar operator of Lambda, if one exists.

    Lambda lies on a secant (s-1)-plane iff ann(Lambda)_s is nonzero, iff
    the rank of the s-th catalecticant is at most s.  Returns the first
    echelon basis element as the witness, else None.
    """
    t = lam.dim
    if not t <= s <= lam.degree:
        raise DegreeError(f"need t <= s <= d, got s = {s}")
    slice_s = ann_slice(lam, s).subspace
    if slice_s.dim == 0:
        return None
    return slice_s.basis[0]


def stacked_hankel(forms: list[Form], s: int) -> Matrix:
    """Hankel blocks of each form stacked vertically: t(d-s+1) rows, s+1 cols.

    Row block j holds the d-s+1 Hankel rows of F_j; the matrix drops rank
    exactly on the locus where span(F_1..F_t) meets a secant (s-1)-plane.
    """
    if not forms:
        raise ZeroSubspaceError("no forms given")
    d = forms[0].degree
    if any(f.degree != d or f.nvars != 2 or f.ring != "S" for f in forms):
        raise DegreeError("forms must be binary, in S, of one degree")
    if not 0 <= s <= d:
        raise DegreeError(f"need 0 <= s <= d, got s = {s}")
    rows: Matrix = []
    for f in forms:
        z = hankel_coordinates(f)
        for r in range(d - s + 1):
            rows.append([z[r + c] for c in range(s + 1)])
    return rows


def stacked_catalecticant_det(forms: list[Form], s: int) -> Fraction:
    """Exact determinant of the stacked Hankel matrix when it is square.

    Square means t(d-s+1) = s+1; the determinant vanishes iff the span of
    the forms lies on a secant (s-1)-plane.  In the non-square case the
    canonical invariant is the rank, reported through NotSquareError.
    """
    m = stacked_hankel(forms, s)
    nrows, ncols = len(m), len(m[0])
    if nrows != ncols:
        raise NotSquareError(
            f"stacked matrix is {nrows} x {ncols}; rank condition instead: "
            f"rank {rank(m)} vs bound {s}",
            rank=rank(m),
            bound=s,
        )
    return det(m)


def sigma_rank_report(forms: list[Form], s: int) -> tuple[int, int]:
    """(rank of the stacked Hankel matrix, membership bound s)."""
    return rank(stacked_hankel(forms, s)), s


def hypersurface_case(t: int, d: int) -> tuple[int, int] | None:
    """When Sigma_s is a hypersurface in G(t, S_d): needs (t+1) | (d+2).

    Returns (s, d - s + 1) with s = d + 1 - (d+2)/(t+1); the second entry
    is the coefficient of the hyperplane class in the fundamental class.
    Returns None when the divisibility fails.
    """
    if (d + 2) % (t + 1) != 0:
        return None
    s = d + 1 - (d + 2) // (t + 1)
    return s, d - s + 1
