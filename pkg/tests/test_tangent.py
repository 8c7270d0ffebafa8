import pytest

from conftest import all_level_hfs, burch_point, moved_burch_point
from levelalg.errors import HilbertMismatchError
from levelalg.forms import Form, Subspace, monomials
from levelalg.levelhf import (
    HilbertFunction,
    enumerate_level_hf,
    grassmannian_dim,
    minmax_hf,
)
from levelalg.tangent import (
    tangent_dim_formula,
    tangent_space,
    tangent_space_dual,
)


def test_formula_example_15():
    assert tangent_dim_formula(HilbertFunction.parse("1,2,3,4,5,5,4,3,0")) == 9


def test_formula_25_values():
    dims = [tangent_dim_formula(h) for h in enumerate_level_hf(2, 5)]
    assert dims == [2, 5, 6, 8]


def test_formula_minimal_function_is_t():
    for t, d in [(1, 5), (2, 6), (3, 8), (4, 9)]:
        hmin, _, _ = minmax_hf(t, d)
        assert tangent_dim_formula(hmin) == t


def test_open_stratum_tangent_is_whole_grassmannian(rng):
    for t, d in [(2, 5), (3, 7)]:
        _, hmax, _ = minmax_hf(t, d)
        lam = moved_burch_point(hmax, rng)
        ts = tangent_space(lam)
        assert ts.dimension == grassmannian_dim(t, d)


def test_25_h1_tangent_dimension_is_two(rng):
    h = HilbertFunction.parse("1,2,2,2,2,2,0")
    assert tangent_space(burch_point(h), h).dimension == 2
    assert tangent_space(moved_burch_point(h, rng), h).dimension == 2


def test_example_15_tangent_dimension_is_nine():
    h = HilbertFunction.parse("1,2,3,4,5,5,4,3,0")
    assert tangent_space(burch_point(h), h).dimension == 9


def test_dual_route_agrees(rng):
    for h in all_level_hfs(2, 6):
        lam = burch_point(h)
        assert tangent_space(lam).dimension == tangent_space_dual(lam).dimension
    h = HilbertFunction.parse("1,2,3,4,5,5,4,3,0")
    lam = moved_burch_point(h, rng)
    assert tangent_space(lam).dimension == tangent_space_dual(lam).dimension == 9


def test_dropping_constraints_grows_dimension():
    h = HilbertFunction.parse("1,2,3,3,3,2,0")
    lam = burch_point(h)
    full = tangent_space(lam).dimension
    for i in range(1, 5):
        partial = tangent_space(lam, degrees=[j for j in range(1, 5) if j != i])
        assert partial.dimension >= full


def test_hilbert_mismatch_rejected():
    h = HilbertFunction.parse("1,2,3,3,3,2,0")
    lam = burch_point(h)
    with pytest.raises(HilbertMismatchError):
        tangent_space(lam, HilbertFunction.parse("1,2,2,2,2,2,0"))


def test_basis_maps_have_declared_shape():
    h = HilbertFunction.parse("1,2,2,2,2,2,0")
    lam = burch_point(h)
    ts = tangent_space(lam, h)
    assert len(ts.basis) == ts.dimension
    for mat in ts.basis:
        assert len(mat) == lam.dim
        assert all(len(row) == lam.ambient_dim - lam.dim for row in mat)


def test_three_variable_internal_consistency(rng):
    # no closed dimension formula for n >= 3; both routes must still agree
    forms = [
        Form.make(3, 3, "S", {m: rng.randint(-4, 4) for m in monomials(3, 3)})
        for _ in range(2)
    ]
    lam = Subspace.span(3, 3, "S", forms)
    if lam.dim == 2:
        a = tangent_space(lam)
        b = tangent_space_dual(lam)
        assert a.dimension == b.dimension
        assert a.dimension <= lam.dim * (lam.ambient_dim - lam.dim)


def test_le22_tangent_at_bottom_stratum_is_two():
    # the single rank condition in degree 2 already cuts the tangent space
    # to dimension 2, the dimension of the stratum closure
    h1 = HilbertFunction.parse("1,2,2,2,2,2,0")
    lam = burch_point(h1)
    assert tangent_space(lam, degrees=[2]).dimension == 2


def test_dual_route_on_a_large_case(rng):
    h = HilbertFunction.parse("1,2,3,4,5,5,5,4,3,0")  # (3, 9)
    lam = moved_burch_point(h, rng)
    a = tangent_space(lam).dimension
    b = tangent_space_dual(lam).dimension
    assert a == b == tangent_dim_formula(h)
