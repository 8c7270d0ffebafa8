"""Tangent spaces to the level strata, by exact linear algebra.

A tangent vector at Lambda in G(t, S_d) is a map tau: Lambda -> S_d/Lambda.
It is tangent to the stratum of the Hilbert function h exactly when, for
every i, pushing tau through the product map R_{d-i} (x) Lambda -> S_i
kills the kernel of that map modulo Lambda_i.  The dual route runs the same
computation on I_d inside R_d.  Both routes work for any number of
variables; for n = 2 the dimension must equal sum e_l h_l, and the n >= 3
output is validated only by internal consistency.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apolarity import ann_slice, catalecticant_matrix, hilbert_function, lambda_slice
from .errors import HilbertMismatchError, ZeroSubspaceError
from .forms import Form, Subspace, monomials
from .levelhf import HilbertFunction, dim_stratum
from .linalg import QQ, right_kernel, transpose


@dataclass(frozen=True)
class TangentSpace:
    """Tangent space at a basepoint, with a basis of Hom(Lambda, S_d/Lambda)
    matrices in the echelon coordinates (rows: basis of Lambda, columns:
    complement monomials of S_d)."""

    basepoint: Subspace
    dimension: int
    basis: tuple
    constraint_shape: tuple[int, int]


def tangent_dim_formula(h: HilbertFunction) -> int:
    """sum over l of e_l H(A, l): the n = 2 closed form for the dimension."""
    return dim_stratum(h)


def _check_hf(lam: Subspace, h: HilbertFunction | None) -> HilbertFunction:
    actual = hilbert_function(lam)
    if h is not None and tuple(actual.values) != tuple(h.values):
        raise HilbertMismatchError(
            f"subspace has Hilbert function {actual.format()}, not {h.format()}"
        )
    return actual


def tangent_space(lam: Subspace, h: HilbertFunction | None = None,
                  degrees=None) -> TangentSpace:
    """Tangent space at Lambda to the stratum of its Hilbert function.

    Unknowns are the entries of tau; for each degree i with nontrivial
    kernel of the product map alpha_i, each kernel vector contributes one
    linear condition per complement coordinate of Lambda_i in S_i.

    `degrees` restricts the constraints to a subset of 1..d-1 (the default),
    i.e. computes the tangent space of an intersection of fewer rank loci;
    dropping degrees can only grow the space.
    """
    if lam.dim == 0:
        raise ZeroSubspaceError("tangent space needs a nonzero subspace")
    hf = _check_hf(lam, h)
    n, d, t = lam.nvars, lam.degree, lam.dim
    comp_d = lam.complement_positions()
    ncols = t * len(comp_d)
    mons_d = monomials(n, d)
    rows: list[list] = []
    for i in (range(1, d) if degrees is None else degrees):
        cat = catalecticant_matrix(lam, i)
        kernel = right_kernel(transpose(cat), ncols=len(cat))
        if not kernel:
            continue
        lam_i = lambda_slice(lam, i)
        comp_i = lam_i.complement_positions()
        if not comp_i:
            continue
        mons_low = monomials(n, d - i)
        # residual coordinates of x^M . (complement monomial g), reduced mod Lambda_i
        reduced: list[list[list]] = []
        for m_exp in mons_low:
            per_m = []
            for g in comp_d:
                image = _act_monomial_on_monomial(m_exp, mons_d[g], n, i)
                residual = lam_i.reduce(image)
                per_m.append([residual[p] for p in comp_i])
            reduced.append(per_m)
        nmons = len(mons_low)
        for kv in kernel:
            # kernel coordinates are ordered (monomial outer, basis form inner)
            for ell in range(len(comp_i)):
                row = [QQ(0)] * ncols
                for m_idx in range(nmons):
                    for p in range(t):
                        c = kv[m_idx * t + p]
                        if c == 0:
                            continue
                        per_m = reduced[m_idx]
                        for g_idx in range(len(comp_d)):
                            val = per_m[g_idx][ell]
                            if val != 0:
                                row[p * len(comp_d) + g_idx] += c * val
                if any(x != 0 for x in row):
                    rows.append(row)
    kernel_basis = right_kernel(rows, ncols=ncols) if rows else \
        right_kernel([], ncols=ncols)
    basis = tuple(
        tuple(tuple(v[p * len(comp_d) + g] for g in range(len(comp_d)))
              for p in range(t))
        for v in kernel_basis
    )
    return TangentSpace(lam, len(kernel_basis), basis, (len(rows), ncols))


def _act_monomial_on_monomial(alpha: tuple, beta: tuple, n: int, out_degree: int) -> Form:
    """x^alpha . y^beta as a Form of degree out_degree (possibly zero)."""
    if all(b >= a for a, b in zip(alpha, beta)):
        factor = 1
        for a, b in zip(alpha, beta):
            for k in range(a):
                factor *= b - k
        return Form.make(n, out_degree, "S",
                         {tuple(b - a for a, b in zip(alpha, beta)): QQ(factor)})
    return Form.zero(n, out_degree, "S")


def tangent_space_dual(lam: Subspace, h: HilbertFunction | None = None) -> TangentSpace:
    """The same tangent space computed on I_d inside R_d.

    An omega: I_d -> R_d/I_d is tangent iff for every i and every u in I_i,
    sum_M omega(u x^M) (x) y^M lands in the image of (R/I)_i under the
    beta-style inclusion into (R_d/I_d) (x) S_{d-i}.
    """
    if lam.dim == 0:
        raise ZeroSubspaceError("tangent space needs a nonzero subspace")
    _check_hf(lam, h)
    n, d = lam.nvars, lam.degree
    id_slice = ann_slice(lam, d).subspace
    dim_id = id_slice.dim
    comp_d = id_slice.complement_positions()  # coordinates of R_d/I_d
    tq = len(comp_d)
    ncols = dim_id * tq
    mons_mid = monomials(n, d)
    rows: list[list] = []
    for i in range(1, d):
        ii = ann_slice(lam, i).subspace
        if ii.dim == 0:
            continue
        mons_low = monomials(n, d - i)
        comp_i = ii.complement_positions()
        mons_i = monomials(n, i)
        # V_i: for each complement monomial w of R_i, the vector
        # sum_M (w x^M mod I_d) (x) y^M, coordinates (c over comp_d, M)
        amb = tq * len(mons_low)
        v_rows = []
        for pos in comp_i:
            w = Form.monomial(n, "R", mons_i[pos])
            vec = [QQ(0)] * amb
            for m_idx, m_exp in enumerate(mons_low):
                prod = w * Form.monomial(n, "R", m_exp)
                residual = id_slice.reduce(prod)
                for c_idx, p in enumerate(comp_d):
                    vec[c_idx * len(mons_low) + m_idx] = residual[p]
            v_rows.append(vec)
        from .linalg import rref

        v_echelon, v_pivots = rref(v_rows)
        v_basis = [v_echelon[k] for k in range(len(v_pivots))]
        v_pivot_set = set(v_pivots)
        v_comp = [c for c in range(amb) if c not in v_pivot_set]
        if not v_comp:
            continue
        for u in ii.basis:
            # gamma[k][m_idx]: coefficient of I_d basis vector k in u * x^M
            gamma = [[QQ(0)] * len(mons_low) for _ in range(dim_id)]
            for m_idx, m_exp in enumerate(mons_low):
                prod = u * Form.monomial(n, "R", m_exp)
                vec = prod.vector()
                for k, piv in enumerate(id_slice.pivots):
                    gamma[k][m_idx] = vec[piv]
            # symbolic E(u) has entry over (c_idx, m_idx):
            #   sum_k gamma[k][m_idx] * omega_{k, c_idx}
            # membership in V_i: reduce numerically coordinate-functionals.
            # Build the matrix of E(u) as a linear map omega -> ambient vec,
            # then impose complement coordinates of the reduction = 0.
            e_matrix = []  # ambient coordinate -> row over unknowns
            for c_idx in range(tq):
                for m_idx in range(len(mons_low)):
                    row = [QQ(0)] * ncols
                    for k in range(dim_id):
                        g = gamma[k][m_idx]
                        if g != 0:
                            row[k * tq + c_idx] = g
                    e_matrix.append(row)
            # reduce the symbolic ambient vector against the V_i echelon:
            # residual(coord) = E(coord) - sum_k E(pivot_k) * basis_k(coord)
            for ell in v_comp:
                row = list(e_matrix[ell])
                for k, piv in enumerate(v_pivots):
                    coeff = v_basis[k][ell]
                    if coeff != 0:
                        prow = e_matrix[piv]
                        row = [x - coeff * y for x, y in zip(row, prow)]
                if any(x != 0 for x in row):
                    rows.append(row)
    kernel_basis = right_kernel(rows, ncols=ncols) if rows else \
        right_kernel([], ncols=ncols)
    basis = tuple(
        tuple(tuple(v[k * tq + c] for c in range(tq)) for k in range(dim_id))
        for v in kernel_basis
    )
    return TangentSpace(lam, len(kernel_basis), basis, (len(rows), ncols))
