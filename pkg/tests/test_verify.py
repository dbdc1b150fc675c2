from dataclasses import replace
from fractions import Fraction

import pytest

from hclassnum.verify import (
    MOD6_IDENTITIES,
    MOD8_IDENTITIES,
    GroupSpec,
    RhsTerm,
    group_index,
    identity_lhs,
    identity_rhs,
    sturm_bound,
    verify_classical,
    verify_identity,
    verify_lemmas,
    verify_mod6,
    verify_mod8,
)


def test_group_index_pinned():
    assert group_index(GroupSpec(36)) == 72
    assert group_index(GroupSpec(144)) == 288
    assert group_index(GroupSpec(256)) == 384
    assert group_index(GroupSpec(144, 6)) == 576
    assert group_index(GroupSpec(256, 8)) == 1536
    assert group_index(GroupSpec(1)) == 1


def test_sturm_bound_pinned():
    assert sturm_bound(2, GroupSpec(36)) == 12
    assert sturm_bound(2, GroupSpec(144)) == 48
    assert sturm_bound(2, GroupSpec(144, 6)) == 96
    assert sturm_bound(2, GroupSpec(256)) == 64
    assert sturm_bound(2, GroupSpec(256, 8)) == 256
    with pytest.raises(ValueError):
        sturm_bound(1, GroupSpec(4))


def test_group_spec_validates():
    with pytest.raises(ValueError):
        GroupSpec(12, 5)
    with pytest.raises(ValueError):
        GroupSpec(0)
    assert GroupSpec(12, 4).label() == "Gamma0(12)&Gamma1(4)"


def test_mod6_reports():
    reports = verify_mod6(overshoot=1)
    assert [r.bound for r in reports] == [48, 96, 96, 96]
    for r in reports:
        assert r.verdict, (r.name, r.mismatches[:3])
        assert r.checked == r.bound + 1
        assert r.bound == 2 * group_index(r.group) // 12
        assert not r.mismatches


def test_mod8_reports():
    reports = verify_mod8(overshoot=1)
    assert [r.bound for r in reports] == [64, 256, 64, 256, 64]
    for r in reports:
        assert r.verdict, (r.name, r.mismatches[:3])
        assert r.bound == 2 * group_index(r.group) // 12


@pytest.mark.parametrize("spec", MOD6_IDENTITIES + MOD8_IDENTITIES,
                         ids=lambda s: s.name)
def test_both_lhs_pipelines_agree(spec):
    prec = 120
    assert identity_lhs(spec, prec) == identity_lhs(spec, prec, direct=True)


def test_mod8_odd_cases_differ_only_in_cm_sign():
    one, three = MOD8_IDENTITIES[1], MOD8_IDENTITIES[3]
    assert one.rhs[0] == three.rhs[0]  # shared divisor-sum term
    assert one.rhs[1].kind == three.rhs[1].kind == "psi"
    assert one.rhs[1].coeff == -three.rhs[1].coeff


def test_perturbed_constant_flips_the_verdict():
    spec = MOD6_IDENTITIES[0]
    bad_terms = (spec.rhs[0], spec.rhs[1],
                 RhsTerm(Fraction(1, 5), "psi", (3,)))  # 1/6 -> 1/5
    bad = replace(spec, rhs=bad_terms)
    report = verify_identity(bad, overshoot=1)
    assert not report.verdict
    assert report.mismatches


def test_report_dict_shape():
    report = verify_identity(MOD6_IDENTITIES[0], overshoot=1)
    d = report.to_dict()
    assert d["verdict"] is True
    assert d["bound"] == 48
    assert d["group"] == {"n1": 144, "n2": 1}
    assert d["index"] == 288
    assert d["mismatches"] == []


def test_overshoot_validation():
    with pytest.raises(ValueError):
        verify_identity(MOD6_IDENTITIES[0], overshoot=0)


def test_verify_lemmas_small():
    report = verify_lemmas(150)
    assert report.verdict, report.mismatches[:5]
    assert report.checked > 0


def test_verify_classical():
    report = verify_classical(500)
    assert report.verdict, report.mismatches[:5]
    # the p = 5 edge: only the full sum is checked there
    assert all(kind != "h05" or p >= 7 for kind, p, *_ in report.mismatches)


def test_identity_rhs_rejects_unknown_term():
    spec = replace(MOD6_IDENTITIES[0],
                   rhs=(RhsTerm(Fraction(1), "mystery", ()),))
    with pytest.raises(ValueError):
        identity_rhs(spec, 10)
