"""Classification table, exact-sequence reports and cross-module checks.

The expected rows are written out here independently of the library's own
verification module, descriptor realizations are re-verified, and every
cited statement tag must resolve.
"""

import pytest

from extmcg import classifier as cf
from extmcg import smallgrp


def test_family_validation():
    with pytest.raises(cf.FamilyParameterError):
        cf.KnotFamily.unknot_sphere(4)
    with pytest.raises(cf.FamilyParameterError):
        cf.KnotFamily.equal_product(0)
    with pytest.raises(cf.FamilyParameterError):
        cf.KnotFamily.unequal_product(2, 2)
    with pytest.raises(cf.FamilyParameterError):
        cf.KnotFamily.unequal_product(1, 4)
    with pytest.raises(cf.FamilyParameterError):
        cf.KnotFamily.adjacent_product(13)
    with pytest.raises(cf.FamilyParameterError):
        cf.KnotFamily.adjacent_product(6)  # right residue, too small


def test_describe():
    assert cf.KnotFamily.unknot_sphere(7).describe() == "S^7 in S^9"
    assert cf.KnotFamily.equal_product(4).describe() == "S^4 x S^4 in S^10"
    assert cf.KnotFamily.unequal_product(2, 5).describe() == "S^2 x S^5 in S^9"
    assert cf.KnotFamily.adjacent_product(14).describe() == \
        "S^12 x S^13 in S^27"


EXPECTED = [
    ("unknot-sphere", (5,), "trivial", "trivial", "trivial", True),
    ("unknot-sphere", (9,), "trivial", "trivial", "trivial", True),
    ("equal-product", (1,), "GammaV2", "trivial", "GammaV2", True),
    ("equal-product", (2,), "Z2xZ2", None, None, None),
    ("equal-product", (3,), "GammaV2", "trivial", "GammaV2", True),
    ("equal-product", (4,), "Z2xZ2", "Z2xZ2", "D8xZ2", True),
    ("equal-product", (5,), "GammaV2", "trivial", "GammaV2", True),
    ("equal-product", (6,), "Z2xZ2", "Z2xZ2", "D8xZ2", True),
    ("equal-product", (7,), "GammaV2", "trivial", "GammaV2", True),
    ("equal-product", (8,), "Z2xZ2", "Z2xZ2", "D8xZ2", True),
    ("equal-product", (11,), "GammaV2", "trivial", "GammaV2", True),
    ("equal-product", (12,), "Z2xZ2", "Z2xZ2", "D8xZ2", True),
    ("unequal-product", (2, 5), "Z2", None, None, None),
    ("unequal-product", (3, 7), "Z2", None, None, None),
    ("adjacent-product", (14,), "Z2", "Z2", "Z2xZ2", True),
    ("adjacent-product", (22,), "Z2", "Z2", "Z2xZ2", True),
]


@pytest.mark.parametrize("kind,params,image,kernel,total,splits", EXPECTED)
def test_classification_rows(kind, params, image, kernel, total, splits):
    family = cf.KnotFamily(kind, params)
    got = cf.classify(family).to_json()
    assert got["image"] == image
    assert got["kernel"] == kernel
    assert got["total"] == total
    assert got["splits"] == splits
    assert got["citations"]
    if kernel is None:
        assert got["kernel_reason"]
        assert got["splits_reason"]


@pytest.mark.parametrize("kind,params", [(k, p) for k, p, *_ in EXPECTED])
def test_realizations_verify(kind, params):
    result = cf.classify(cf.KnotFamily(kind, params))
    for part in (result.image, result.kernel, result.total):
        if isinstance(part, cf.GroupDescriptor):
            assert part.verify_realization()


def test_citations_resolve():
    for kind, params, *_ in EXPECTED:
        result = cf.classify(cf.KnotFamily(kind, params))
        for tag in result.citations:
            assert tag in cf.STATEMENTS
            assert len(cf.STATEMENTS[tag]) > 20


def test_classify_rejects_unknown_kind():
    with pytest.raises(cf.UnsupportedFamilyError):
        cf.classify(cf.KnotFamily("moebius", (3,)))


def test_group_descriptors():
    for name in ("trivial", "Z2", "Z2xZ2", "D8xZ2", "GammaV2"):
        d = cf.GroupDescriptor.of(name)
        assert d.verify_realization()
        if name == "GammaV2":
            assert d.order() is None
        else:
            assert d.order() >= 1
    with pytest.raises(cf.UnsupportedFamilyError):
        cf.GroupDescriptor.of("E8")
    # realization and name disagreeing is caught
    lying = cf.GroupDescriptor("Z2", smallgrp.klein())
    assert not lying.verify_realization()


def test_result_validation():
    fam = cf.KnotFamily.equal_product(4)
    triv = cf.GroupDescriptor.of("trivial")
    with pytest.raises(ValueError):
        cf.ClassificationResult(fam, triv, triv, triv, True, citations=())
    with pytest.raises(ValueError):
        cf.ClassificationResult(fam, triv, triv, triv, True,
                                citations=("not-a-tag",))
    z2 = cf.GroupDescriptor.of("Z2")
    with pytest.raises(ValueError):
        # 1 * 2 != 4
        cf.ClassificationResult(fam, z2, triv, cf.GroupDescriptor.of("Z2xZ2"),
                                True, citations=("even-total",))


def test_even_sequence_report():
    rep = cf.exact_sequence_report(cf.KnotFamily.equal_product(6))
    assert rep.terms == ("0", "Z2 + Z2", "D8 x Z2", "Z2 + Z2", "0")
    assert rep.orders == (1, 4, 16, 4, 1)
    assert rep.splits is True


def test_odd_sequence_report():
    rep = cf.exact_sequence_report(cf.KnotFamily.equal_product(5))
    assert len(rep.terms) == len(rep.orders) == 5
    assert rep.terms[0] == rep.terms[4] == "0"
    assert rep.terms[1] == "Theta_11"
    assert "SDiff" in rep.terms[2]
    # p = 5 sits on the trivial residue, so the quotient is finite
    assert rep.orders[3] == 1
    assert rep.splits is None
    rep3 = cf.exact_sequence_report(cf.KnotFamily.equal_product(3))
    assert rep3.orders[3] is None  # Hom(Z^2, Z) is infinite
    rep9 = cf.exact_sequence_report(cf.KnotFamily.equal_product(9))
    assert rep9.orders[3] == 4  # Hom(Z^2, Z2) at residue 1


def test_adjacent_sequence_report():
    rep = cf.exact_sequence_report(cf.KnotFamily.adjacent_product(14))
    assert rep.orders == (1, 2, 4, 2, 1)
    assert rep.splits is True


def test_sequence_report_unsupported():
    with pytest.raises(cf.UnsupportedFamilyError):
        cf.exact_sequence_report(cf.KnotFamily.unknot_sphere(5))
    with pytest.raises(cf.UnsupportedFamilyError):
        cf.exact_sequence_report(cf.KnotFamily.unequal_product(2, 5))
    with pytest.raises(cf.UnsupportedFamilyError):
        cf.exact_sequence_report(cf.KnotFamily.equal_product(2))


def test_sequence_validation():
    with pytest.raises(ValueError):
        cf.ExactSequenceReport(("0", "A", "B", "C"), (1, 2, 4, 2), None, ())
    with pytest.raises(ValueError):
        cf.ExactSequenceReport(("0", "A", "B", "C", "0"), (1, 2, 5, 2, 1),
                               None, ())


@pytest.mark.parametrize("p", [1, 3, 5, 7])
def test_cross_validate_odd(p):
    checks = cf.cross_validate(cf.KnotFamily.equal_product(p))
    names = {c.name for c in checks}
    assert "stabilizer-matches-mod2-image" in names
    assert "omega-induces-v" in names
    assert all(c.passed for c in checks)


@pytest.mark.parametrize("p,count", [(2, 1), (4, 3), (6, 3)])
def test_cross_validate_even(p, count):
    checks = cf.cross_validate(cf.KnotFamily.equal_product(p))
    assert len(checks) == count
    assert checks[0].name == "induced-actions-generate-klein"
    assert all(c.passed for c in checks)


def test_cross_validate_unsupported():
    with pytest.raises(cf.UnsupportedFamilyError):
        cf.cross_validate(cf.KnotFamily.unknot_sphere(5))
