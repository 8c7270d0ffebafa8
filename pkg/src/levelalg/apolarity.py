"""Apolarity: the differentiation action of R on S and everything built on it.

The internal product u.F = u(d/dy1, ..., d/dyn) F makes S a graded R-module.
From it we get catalecticant matrices, Hilbert functions, annihilator
ideals, inverse systems, socles, and Jordan's closed-form apolar bases for
factored binary forms.  Everything is exact kernel/rank computation; no
factorization is ever performed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AdmissibilityError,
    AmbientMismatchError,
    DegreeError,
    NotArtinError,
    ZeroSubspaceError,
)
from .forms import Form, Subspace, monomials, space_dim
from .levelhf import HilbertFunction
from .linalg import QQ, Matrix, rank, right_kernel, transpose


def _falling(b: int, a: int) -> int:
    """b (b-1) ... (b-a+1); the coefficient picked up by d^a/dy^a on y^b."""
    out = 1
    for k in range(a):
        out *= b - k
    return out


def internal_product(u: Form, f: Form) -> Form:
    """Apply the operator u in R_j to the form f in S_i, j <= i.

    Differentiation semantics: x^a acts as the partial derivative d^a/dy^a,
    so constants like b!/(b-a)! appear.  Applying in degree j > i is an
    error rather than zero; the pairing is only meaningful for j <= i.
    """
    if u.ring != "R" or f.ring != "S":
        raise AmbientMismatchError("internal product needs u in R and F in S")
    if u.nvars != f.nvars:
        raise AmbientMismatchError("operator and form have different variable counts")
    if u.degree > f.degree:
        raise DegreeError(
            f"cannot apply a degree-{u.degree} operator to a degree-{f.degree} form"
        )
    out: dict = {}
    for alpha, cu in u.coeffs.items():
        for beta, cf in f.coeffs.items():
            if all(b >= a for a, b in zip(alpha, beta)):
                factor = 1
                for a, b in zip(alpha, beta):
                    factor *= _falling(b, a)
                key = tuple(b - a for a, b in zip(alpha, beta))
                out[key] = out.get(key, QQ(0)) + cu * cf * factor
    return Form.make(f.nvars, f.degree - u.degree, "S", out)


def _monomial_action_vector(alpha: tuple, f: Form, out_index: dict) -> list:
    """Coefficient vector of x^alpha . f in the monomial order of S_{i-j}."""
    v = [QQ(0)] * len(out_index)
    for beta, cf in f.coeffs.items():
        if all(b >= a for a, b in zip(alpha, beta)):
            factor = 1
            for a, b in zip(alpha, beta):
                factor *= _falling(b, a)
            v[out_index[tuple(b - a for a, b in zip(alpha, beta))]] += cf * factor
    return v


def catalecticant_matrix(lam: Subspace, i: int) -> Matrix:
    """Matrix of the product map R_{d-i} (x) Lambda -> S_i.

    Rows are indexed by pairs (monomial of R_{d-i}, basis form of Lambda),
    monomial outermost; columns by the monomials of S_i.  For n = 2 the
    shape is t(d-i+1) x (i+1).  Its rank is H(R/ann(Lambda), i).
    """
    d = lam.degree
    if not 0 <= i <= d:
        raise DegreeError(f"catalecticant index {i} outside 0..{d}")
    from .forms import monomial_index

    out_index = monomial_index(lam.nvars, i)
    rows = []
    for alpha in monomials(lam.nvars, d - i):
        for f in lam.basis:
            rows.append(_monomial_action_vector(alpha, f, out_index))
    return rows


def lambda_slice(lam: Subspace, i: int) -> Subspace:
    """The graded piece (I^{-1})_i = R_{d-i}.Lambda of the inverse system."""
    cat = catalecticant_matrix(lam, i)
    forms = [Form.from_vector(lam.nvars, i, "S", row) for row in cat]
    return Subspace.span(lam.nvars, i, "S", forms)


def hilbert_function(lam: Subspace) -> HilbertFunction:
    """h_i = rank of the i-th catalecticant, for 0 <= i <= d."""
    if lam.dim == 0:
        raise ZeroSubspaceError("the zero subspace has no Hilbert function")
    values = [rank(catalecticant_matrix(lam, i)) for i in range(lam.degree + 1)]
    return HilbertFunction.from_values(values)


@dataclass(frozen=True)
class GradedIdealSlice:
    """A graded piece I_j of the annihilator (ancestor) ideal."""

    degree: int
    subspace: Subspace


def ann_slice(lam: Subspace, j: int) -> GradedIdealSlice:
    """I_j = {u in R_j : u.F = 0 for all F in Lambda}.

    dim I_j + h_j = dim R_j.  For j > d every operator annihilates, so the
    slice is all of R_j.
    """
    d = lam.degree
    n = lam.nvars
    if j < 0:
        raise DegreeError("negative slice degree")
    if j > d or lam.dim == 0:
        return GradedIdealSlice(j, Subspace.full(n, j, "R"))
    from .forms import monomial_index

    out_index = monomial_index(n, d - j)
    rows = []
    for alpha in monomials(n, j):
        row: list = []
        for f in lam.basis:
            row.extend(_monomial_action_vector(alpha, f, out_index))
        rows.append(row)
    kernel = right_kernel(transpose(rows), ncols=len(rows))
    forms = [Form.from_vector(n, j, "R", v) for v in kernel]
    return GradedIdealSlice(j, Subspace.span(n, j, "R", forms))


def minimal_generators(lam: Subspace) -> list[tuple[int, list[Form]]]:
    """Minimal generators of ann(Lambda), degree by degree through d+1.

    Generators in degree j are a canonical complement of R_1 * I_{j-1}
    inside I_j.  For n = 2 the counts match the e-sequence of the Hilbert
    function, which certifies minimality; for n >= 3 the list generates the
    ancestor ideal through degree d+1 but carries no minimality
    certificate.
    """
    if lam.dim == 0:
        raise ZeroSubspaceError("ann of the zero subspace is the whole ring")
    n, d = lam.nvars, lam.degree
    variables = [Form.monomial(n, "R", tuple(1 if k == i else 0 for k in range(n)))
                 for i in range(n)]
    out: list[tuple[int, list[Form]]] = []
    prev = Subspace.zero(n, 0, "R")
    for j in range(1, d + 2):
        grown = [x * g for g in prev.basis for x in variables]
        target = (ann_slice(lam, j).subspace if j <= d
                  else Subspace.full(n, d + 1, "R"))
        running = Subspace.span(n, j, "R", grown)
        gens = []
        for b in target.basis:
            residual = running.reduce(b)
            if any(c != 0 for c in residual):
                g = Form.from_vector(n, j, "R", residual).monic()
                gens.append(g)
                running = Subspace.span(n, j, "R", list(running.basis) + [g])
        if gens:
            out.append((j, gens))
        prev = target
    return out


def inverse_system_slice(gens: list[Form], nvars: int, d: int) -> Subspace:
    """(I^{-1})_d for the ideal generated by gens: all F killed by every gen."""
    from .forms import monomial_index

    rows = []
    dim_sd = space_dim(nvars, d)
    for g in gens:
        if g.ring != "R":
            raise AmbientMismatchError("ideal generators must live in R")
        if g.degree > d or g.is_zero:
            continue
        out_index = monomial_index(nvars, d - g.degree)
        # constraint rows: for each output monomial of S_{d-q}, the linear
        # functional F -> coeff of (g.F) at that monomial
        cols = []
        for beta in monomials(nvars, d):
            cols.append(_monomial_action_vector_from_operator(g, beta, out_index))
        for k in range(len(out_index)):
            rows.append([cols[b][k] for b in range(dim_sd)])
    if not rows:
        return Subspace.full(nvars, d, "S")
    kernel = right_kernel(rows, ncols=dim_sd)
    return Subspace.span(nvars, d, "S",
                         [Form.from_vector(nvars, d, "S", v) for v in kernel])


def _monomial_action_vector_from_operator(g: Form, beta: tuple, out_index: dict) -> list:
    """Coefficient vector of g . y^beta in the monomial order of the target."""
    v = [QQ(0)] * len(out_index)
    for alpha, cu in g.coeffs.items():
        if all(b >= a for a, b in zip(alpha, beta)):
            factor = 1
            for a, b in zip(alpha, beta):
                factor *= _falling(b, a)
            v[out_index[tuple(b - a for a, b in zip(alpha, beta))]] += cu * factor
    return v


def ideal_slices(gens: list[Form], nvars: int, top: int) -> list[Subspace]:
    """Graded pieces I_0..I_top of the ideal generated by gens."""
    slices = []
    for j in range(top + 1):
        forms = []
        for g in gens:
            if g.is_zero or g.degree > j:
                continue
            for m in monomials(nvars, j - g.degree):
                forms.append(Form.monomial(nvars, "R", m) * g)
        slices.append(Subspace.span(nvars, j, "R", forms))
    return slices


def socle(gens: list[Form], nvars: int, bound: int | None = None) -> list[tuple[int, int]]:
    """Per-degree socle dimensions of R/(gens).

    The socle in degree j is {u in (R/I)_j : x_i u = 0 in (R/I)_{j+1} for
    every i}.  The quotient must be artin: its Hilbert function has to
    vanish by the configured degree bound, otherwise NotArtinError.
    """
    gens = [g for g in gens if not g.is_zero]
    if len(gens) < nvars:
        raise NotArtinError(
            f"{len(gens)} generators cannot cut out an artin quotient of a "
            f"{nvars}-variable ring"
        )
    degs = sorted(g.degree for g in gens)
    if bound is None:
        bound = sum(degs[-nvars:]) - nvars + 2
    slices = ideal_slices(gens, nvars, bound + 1)
    top = None
    for j in range(bound + 1):
        if space_dim(nvars, j) - slices[j].dim == 0:
            top = j - 1
            break
    if top is None:
        raise NotArtinError(
            f"Hilbert function of the quotient has not vanished by degree {bound}"
        )
    if top < 0:
        raise NotArtinError("the generators span the unit ideal; the quotient is zero")
    out = []
    for j in range(top + 1):
        ij = slices[j]
        quotient_dim = space_dim(nvars, j) - ij.dim
        if quotient_dim == 0:
            continue
        if j == top:
            s = quotient_dim
        else:
            s = _socle_dim(ij, slices[j + 1], nvars, j) - ij.dim
        if s > 0:
            out.append((j, s))
    return out


def _socle_dim(ij: Subspace, inext: Subspace, nvars: int, j: int) -> int:
    """dim {u in R_j : x_i u in I_{j+1} for all i}."""
    from .forms import monomial_index

    comp = inext.complement_positions()
    rows = []
    for m in monomials(nvars, j):
        feature: list = []
        for i in range(nvars):
            shifted = tuple(e + (1 if k == i else 0) for k, e in enumerate(m))
            residual = inext.reduce(Form.monomial(nvars, "R", shifted))
            feature.extend(residual[p] for p in comp)
        rows.append(feature)
    kernel = right_kernel(transpose(rows, ncols=len(rows)), ncols=len(rows))
    return len(kernel)


def is_level_ideal(gens: list[Form], nvars: int,
                   bound: int | None = None) -> tuple[bool, int, int]:
    """(level?, socle degree, type) for the artin quotient R/(gens)."""
    soc = socle(gens, nvars, bound=bound)
    top, t = soc[-1]
    return (len(soc) == 1, top, t)


def jordan_apolar_basis(factors: list[tuple], m: int) -> Subspace:
    """Apolar subspace of a factored binary operator, in closed form.

    For u = prod (a_i x1 + b_i x2)^{mu_i} with the points [a_i : b_i]
    pairwise distinct and sum(mu_i) <= m, the forms of degree m apolar to u
    are spanned by S_{mu_i - 1} (b_i y1 - a_i y2)^{m - mu_i + 1}.  The
    result has dimension exactly sum(mu_i).
    """
    pts = [(QQ(a), QQ(b)) for a, b, _ in factors]
    mus = [mu for _, _, mu in factors]
    if any(mu < 1 for mu in mus):
        raise AdmissibilityError("factor multiplicities must be >= 1")
    for a, b in pts:
        if a == 0 and b == 0:
            raise AdmissibilityError("(0, 0) is not a point of P^1")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i][0] * pts[j][1] - pts[j][0] * pts[i][1] == 0:
                raise AdmissibilityError(
                    f"points {i + 1} and {j + 1} are proportional"
                )
    total = sum(mus)
    if total > m:
        raise DegreeError(f"sum of multiplicities {total} exceeds target degree {m}")
    basis: list[Form] = []
    for (a, b), mu in zip(pts, mus):
        dual = Form.make(2, 1, "S", {(1, 0): b, (0, 1): -a})
        dual_pow = dual.power(m - mu + 1)
        for alpha in range(mu):
            mono = Form.monomial(2, "S", (alpha, mu - 1 - alpha))
            basis.append(mono * dual_pow)
    sub = Subspace.span(2, m, "S", basis)
    assert sub.dim == total, "Jordan basis lost rank; this is a bug"
    return sub


def beta_matrix(lam: Subspace, i: int) -> Matrix:
    """Matrix of beta_i : (R/I)_i -> S_{d-i} (x) (R/I)_d, literally as
    u -> sum_M y^M (x) (u x^M mod I_d) over monomials x^M of degree d-i.

    Rows are indexed by a complement basis of I_i in R_i, columns by pairs
    (monomial of S_{d-i}, complement coordinate of R_d/I_d).  Injectivity
    (full row rank) for all i characterises levelness.
    """
    n, d = lam.nvars, lam.degree
    ii = ann_slice(lam, i).subspace
    id_ = ann_slice(lam, d).subspace
    comp_i = ii.complement_positions()
    comp_d = id_.complement_positions()
    mons_i = monomials(n, i)
    rows = []
    for pos in comp_i:
        u = Form.monomial(n, "R", mons_i[pos])
        row: list = []
        for mexp in monomials(n, d - i):
            prod = u * Form.monomial(n, "R", mexp)
            residual = id_.reduce(prod)
            row.extend(residual[p] for p in comp_d)
        rows.append(row)
    return rows


def beta_rank(lam: Subspace, i: int) -> int:
    return rank(beta_matrix(lam, i))


@dataclass(frozen=True)
class ApolarProfile:
    """Aggregated apolarity data of a subspace Lambda in S_d."""

    lam: Subspace
    hilbert: HilbertFunction
    generators: tuple  # ((degree, (forms...)), ...)
    socle: tuple  # ((degree, dim), ...)

    @property
    def is_level(self) -> bool:
        return len(self.socle) == 1

    @property
    def type(self) -> int:
        return self.socle[-1][1]

    @property
    def socle_degree(self) -> int:
        return self.socle[-1][0]

    def kv_lines(self) -> list[tuple[str, str]]:
        from .forms import form_print

        lines = [("HILBERT", self.hilbert.format())]
        for degree, forms in self.generators:
            for g in forms:
                lines.append((f"GENERATORS.{degree}", form_print(g)))
        lines.append(("SOCLE", "; ".join(f"{j}:{s}" for j, s in self.socle)))
        lines.append(("LEVEL", "true" if self.is_level else "false"))
        lines.append(("TYPE", str(self.type)))
        lines.append(("SOCLE_DEGREE", str(self.socle_degree)))
        return lines


def apolar_profile(lam: Subspace) -> ApolarProfile:
    hf = hilbert_function(lam)
    gens = minimal_generators(lam)
    flat = [g for _, forms in gens for g in forms]
    soc = socle(flat, lam.nvars)
    return ApolarProfile(
        lam,
        hf,
        tuple((degree, tuple(forms)) for degree, forms in gens),
        tuple(soc),
    )
