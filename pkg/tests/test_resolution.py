import pytest

from levelalg.errors import CapExceededError, LevelAlgError
from levelalg.levelhf import grassmannian_dim, is_level_hf
from levelalg.partitions import schur_dim, weyl_dim
from levelalg.resolution import (
    c1_c2_analysis,
    c2_witness_hf,
    e1_vanishing_table,
    expected_codim,
    lascoux_ranks,
)


def test_lascoux_ranks_2754():
    table = lascoux_ranks(2, 7, 5, 4)
    assert table.codim == 4
    assert table.ranks() == [1, 36, 70, 36, 1]


def test_lascoux_2754_summand_structure():
    table = lascoux_ranks(2, 7, 5, 4)
    # E^{-1} is a single summand: wedge^5 of a rank-6 space tensor a
    # 6-dimensional cohomology factor
    (s,) = table.terms[-1]
    assert s.lam == (1, 1, 1, 1, 1)
    assert s.schur_rank == 6 and s.bott_dim == 6 and s.rank == 36
    # E^{-2} splits as 35 + 35
    assert sorted(x.rank for x in table.terms[-2]) == [35, 35]
    # E^{-4} is the square of a determinant line
    (top,) = table.terms[-4]
    assert top.lam == (2, 2, 2, 2, 2, 2) and top.rank == 1


def test_lascoux_palindromic_2754():
    ranks = lascoux_ranks(2, 7, 5, 4).ranks()
    assert ranks == ranks[::-1]


def test_lascoux_e0_always_rank_one():
    for args in [(2, 7, 5, 4), (2, 5, 3, 2), (1, 4, 2, 2), (3, 7, 4, 3)]:
        table = lascoux_ranks(*args)
        assert table.rank(0) == 1


def test_lascoux_dimension_formulas_agree():
    # hook content against Weyl on every summand of a couple of cases
    for args in [(2, 7, 5, 4), (2, 5, 3, 2)]:
        t, d, i, r = args
        n = t * (d - i + 1)
        table = lascoux_ranks(*args)
        for summands in table.terms.values():
            for s in summands:
                assert s.schur_rank == schur_dim(s.lam, n) == weyl_dim(s.lam, n)


def test_lascoux_cell_cap():
    with pytest.raises(CapExceededError):
        lascoux_ranks(3, 20, 10, 2, cell_cap=10)


def test_expected_codim():
    assert expected_codim(2, 7, 5, 4) == 4
    assert expected_codim(2, 5, 2, 2) == 6


def test_c2_witness_lemma():
    # the witness realises H(A, i-1) = i and H(A, i) <= r exactly when C2
    for (t, d, i, r) in [(2, 7, 5, 4), (3, 16, 13, 11), (2, 13, 9, 8)]:
        h = c2_witness_hf(t, d, i, r)
        assert is_level_hf(h) == (True, None)
        assert h[i - 1] == i and h[i] <= r
        assert h.t == t and h.d == d


def test_components_2754():
    rep = c1_c2_analysis(2, 7, 5, 4)
    assert rep.c2_holds and not rep.c2_strict
    assert rep.expected_codim == 4 and rep.c1_holds
    hfs = sorted(h.values for h, _, _ in rep.candidates)
    assert hfs == [
        (1, 2, 3, 4, 4, 4, 4, 2),
        (1, 2, 3, 4, 5, 4, 3, 2),
    ]
    assert all(codim == 4 for _, _, codim in rep.candidates)


def test_components_family_3i_2d1_at_9_13():
    rep = c1_c2_analysis(2, 13, 9, 8)
    assert rep.c2_holds and rep.c2_strict and rep.c1_holds
    hfs = sorted(h.values for h, _, _ in rep.candidates)
    assert hfs == [
        (1, 2, 3, 4, 5, 6, 7, 8, 8, 8, 8, 6, 4, 2),
        (1, 2, 3, 4, 5, 6, 7, 8, 9, 8, 7, 6, 4, 2),
    ]
    assert [dim for _, dim, _ in rep.candidates] == [20, 20]  # 3i - 7


def test_components_3_14_11_9_c1_fails():
    rep = c1_c2_analysis(3, 14, 11, 9)
    assert rep.c2_holds
    dims = sorted(dim for _, dim, _ in rep.candidates)
    assert dims == [27, 27, 28]
    assert not rep.c1_holds


def test_components_3_16_13_11_strict():
    rep = c1_c2_analysis(3, 16, 13, 11)
    assert rep.c2_holds and rep.c2_strict
    assert len(rep.candidates) == 1
    h, dim, codim = rep.candidates[0]
    assert h.values == (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 11, 9, 6, 3)
    assert codim == 3 and rep.c1_holds


def test_components_5_32_28_24_strict():
    rep = c1_c2_analysis(5, 32, 28, 24)
    assert rep.c2_holds and rep.c2_strict
    assert len(rep.candidates) == 1
    h, _, _ = rep.candidates[0]
    assert h.values == tuple(
        list(range(1, 29)) + [24, 20, 15, 10, 5]
    )


def test_e1_table_2754_vanishing():
    for m in (0, 1, 2):
        table = e1_vanishing_table(2, 7, 5, 4, m, cap_weight=12)
        assert not table.truncated
        assert all(q == 0 for (_, q) in table.entries)


def test_e1_table_2754_h0_entries():
    # (0, 0) entries are the Pluecker section counts of O(m) on G(2, C^8)
    for m, expect in [(0, 1), (1, 28), (2, 336)]:
        table = e1_vanishing_table(2, 7, 5, 4, m, cap_weight=12)
        assert table.entry(0, 0) == expect


def test_e1_table_t1_negative_twist():
    # t = 1: all nonzero entries sit in the top cohomological degree
    dim_g = grassmannian_dim(1, 4)
    for m in (-1, -2, -5, -7):
        table = e1_vanishing_table(1, 4, 2, 2, m, cap_weight=12)
        for (_, q) in table.entries:
            assert q == dim_g
    # and some twist produces an actually nonzero table
    table = e1_vanishing_table(1, 4, 2, 2, -5, cap_weight=12)
    assert table.entries


def test_e1_table_truncation_notice():
    table = e1_vanishing_table(2, 7, 5, 4, 0, cap_weight=5)
    assert table.truncated
    assert all(w > 5 for w in table.truncated_weights)


def test_c1_c2_requires_r_below_i_plus_one():
    with pytest.raises(LevelAlgError):
        c1_c2_analysis(2, 7, 5, 6)


def test_le32_on_25_fails_c1():
    # expected codimension 8, actual component codimension 6: the class
    # formula is inapplicable here
    rep = c1_c2_analysis(2, 5, 3, 2)
    assert rep.expected_codim == 8
    assert [codim for _, _, codim in rep.candidates] == [6]
    assert not rep.c1_holds


def test_sigma_loci_on_25_have_single_candidates():
    for i, r, expect in [(2, 2, (1, 2, 2, 2, 2, 2)),
                         (4, 2, (1, 2, 2, 2, 2, 2)),
                         (3, 3, (1, 2, 3, 3, 3, 2))]:
        rep = c1_c2_analysis(2, 5, i, r)
        assert rep.c1_holds
        assert [h.values for h, _, _ in rep.candidates] == [expect]
