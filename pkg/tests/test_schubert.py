import pytest

from levelalg.errors import AmbientMismatchError, InvalidPartitionError
from levelalg.partitions import partitions_in_box
from levelalg.resolution import expected_codim
from levelalg.schubert import (
    chern_taut,
    chern_taut_total,
    class_of,
    class_one,
    format_class,
    lr_coefficient,
    lr_multiply,
    parse_class,
    poincare_complement,
    porteous_class,
    schubert_class,
)


def test_pieri_square():
    a = class_of(2, 6, (1,))
    assert format_class(lr_multiply(a, a)) == "{1,1} + {2}"


def test_lr_coefficient_basic_values():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2, 1), (2, 1), (2, 2, 1, 1)) == 1
    assert lr_coefficient((2,), (1,), (2,)) == 0


def test_box_truncation():
    # {4,2} * {1,1} = {5,3} which leaves the 2 x 4 box
    a = class_of(2, 6, (4, 2))
    b = class_of(2, 6, (1, 1))
    assert lr_multiply(a, b).is_zero


def test_porteous_le22():
    cls = porteous_class(2, 5, 2, 2)
    assert format_class(cls) == "10{3,3} + 6{4,2}"


def test_porteous_le42_equals_le22():
    assert porteous_class(2, 5, 4, 2) == porteous_class(2, 5, 2, 2)


def test_porteous_le33():
    # independently pinned: the sigma_3 coefficient is forced to 1 by the
    # uniqueness of the length-3 power decomposition of a general binary
    # quintic, and the sigma_21 coefficient is 8
    cls = porteous_class(2, 5, 3, 3)
    assert cls.coefficient((2, 1)) == 8
    assert cls.coefficient((3,)) == 1
    assert format_class(cls) == "8{2,1} + {3}"


def test_intersection_numbers_of_secant_lines():
    le = porteous_class(2, 5, 2, 2)
    ten = lr_multiply(le, class_of(2, 6, (1, 1)))
    assert format_class(ten) == "10{4,4}"
    six = lr_multiply(le, class_of(2, 6, (2,)))
    assert format_class(six) == "6{4,4}"


def test_hypersurface_class_via_porteous():
    # (2,7): Sigma_5 = Le(5,5) is a hypersurface of class 3{1}
    cls = porteous_class(2, 7, 5, 5)
    assert format_class(cls) == "3{1}"


def test_chern_classes_of_tautological_bundle():
    assert format_class(chern_taut(2, 6, 0)) == "1"
    assert format_class(chern_taut(2, 6, 1)) == "-{1}"
    assert format_class(chern_taut(2, 6, 2)) == "{1,1}"
    assert chern_taut(2, 6, 3).is_zero
    assert format_class(chern_taut_total(2, 6)) == "1 - {1} + {1,1}"


def test_lr_ring_axioms(rng):
    t, n = 2, 7
    pool = partitions_in_box(t, n - t)

    def random_class():
        return schubert_class(
            t, n,
            {rng.choice(pool): rng.randint(-3, 3) for _ in range(3)},
        )

    for _ in range(10):
        a, b, c = random_class(), random_class(), random_class()
        assert lr_multiply(a, b) == lr_multiply(b, a)
        assert lr_multiply(lr_multiply(a, b), c) == lr_multiply(a, lr_multiply(b, c))
        assert lr_multiply(class_one(t, n), a) == a


def test_poincare_pairing():
    t, n = 3, 8
    box = (n - t,) * t
    for lam in partitions_in_box(t, n - t):
        comp = poincare_complement(lam, t, n)
        prod = lr_multiply(class_of(t, n, lam), class_of(t, n, comp))
        assert prod.coefficient(box) == 1
        # any heavier partner would leave the box entirely
        assert sum(lam) + sum(comp) == t * (n - t)


def test_porteous_terms_have_expected_codimension():
    for (t, d, i, r) in [(2, 5, 2, 2), (2, 5, 3, 3), (2, 7, 5, 4), (3, 7, 5, 4)]:
        cls = porteous_class(t, d, i, r)
        codim = expected_codim(t, d, i, r)
        assert not cls.is_zero
        for lam in cls.coeffs:
            assert sum(lam) == codim


def test_class_parse_format_roundtrip():
    text = "10{3,3} + 6{4,2}"
    assert format_class(parse_class(text, 2, 6)) == text
    assert format_class(parse_class("{2,0}", 2, 6)) == "{2}"
    assert parse_class("0", 2, 6).is_zero
    assert format_class(parse_class("3 - {1}", 2, 6)) == "3 - {1}"


def test_class_box_validation():
    with pytest.raises(InvalidPartitionError):
        schubert_class(2, 6, {(5,): 1})
    with pytest.raises(InvalidPartitionError):
        schubert_class(2, 6, {(1, 1, 1): 1})


def test_class_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        lr_multiply(class_one(2, 6), class_one(2, 7))


def test_giambelli_determinant_identity():
    # sigma_lam = det [ sigma_{(lam_i + j - i)} ], an independent check of
    # the general LR expansion against Pieri-only products
    from levelalg.linalg import QQ

    def one_row(t, n, k):
        if k < 0 or k > n - t:
            return schubert_class(t, n, {})
        if k == 0:
            return class_one(t, n)
        return class_of(t, n, (k,))

    def det_class(entries):
        size = len(entries)
        if size == 1:
            return entries[0][0]
        total = schubert_class(entries[0][0].t, entries[0][0].n, {})
        for j in range(size):
            ent = entries[0][j]
            if ent.is_zero:
                continue
            minor = [row[:j] + row[j + 1:] for row in entries[1:]]
            term = lr_multiply(ent, det_class(minor))
            total = total + (term.scale(-1) if j % 2 else term)
        return total

    for t, n in [(2, 6), (3, 7)]:
        for lam in partitions_in_box(t, n - t):
            if not lam:
                continue
            size = len(lam)
            entries = [
                [one_row(t, n, lam[i] + j - i) for j in range(size)]
                for i in range(size)
            ]
            assert det_class(entries) == class_of(t, n, lam), lam


def test_porteous_gorenstein_hypersurface_coefficient():
    # t = 1, d even: the rank locus in degree s = d/2... is a hypersurface
    # of class (d - s + 1) {1}; tie Porteous to the divisibility criterion
    from levelalg.secant import hypersurface_case

    for d in (4, 6, 8):
        s, coeff = hypersurface_case(1, d)
        cls = porteous_class(1, d, s, s)
        assert format_class(cls) == (f"{coeff}{{1}}" if coeff != 1 else "{1}")
