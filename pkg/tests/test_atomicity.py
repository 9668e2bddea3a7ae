import pytest

from centroperm.atomicity import (
    generated_by_centro_up_to,
    is_rc_atomic_up_to,
    rc_witness,
)
from centroperm.classes import (
    enumerate_centrosymmetric,
    enumerate_class,
    member,
    parse_class_spec,
)
from centroperm.perms import contains, is_centrosymmetric, reverse_complement

AV321 = parse_class_spec("av:321")
UNION = parse_class_spec("union(av:312,rc(av:312))")
INTER = parse_class_spec("inter(av:312,rc(av:312))")
XCLASS = parse_class_spec("geom:[-1,1;1,-1]")


class TestRcWitness:
    def test_sum_closed_short_circuit(self):
        report = rc_witness(AV321, (1, 2), 8)
        assert report.found and report.constructed
        assert report.witness == (1, 2, 3, 4)

    def test_union_blocks_the_basis_mirror(self):
        report = rc_witness(UNION, (3, 1, 2), 8)
        assert not report.found
        assert report.searched_to == 8

    def test_grid_class_search(self):
        report = rc_witness(XCLASS, (1, 2), 6)
        assert report.found
        # 12 is rc-fixed and a member, so it is its own least witness
        assert report.witness == (1, 2)

    def test_sigma_must_be_a_member(self):
        with pytest.raises(ValueError, match="not a member"):
            rc_witness(AV321, (3, 2, 1), 8)

    def test_witnesses_pass_the_oracles(self):
        for spec in (AV321, INTER, XCLASS):
            for sigma in enumerate_class(spec, 3):
                report = rc_witness(spec, sigma, 8)
                if report.found:
                    w = report.witness
                    assert member(spec, w)
                    assert contains(w, sigma)
                    assert contains(w, reverse_complement(sigma))

    def test_short_circuit_always_succeeds_at_double_size(self):
        for text in ("av:321", "av:231,312", "sumclosure:monotone-skew-monotone"):
            spec = parse_class_spec(text)
            for s in range(1, 4):
                for sigma in enumerate_class(spec, s):
                    report = rc_witness(spec, sigma, 2 * s)
                    assert report.found, (text, sigma)


class TestAtomicitySweep:
    def test_av321_all_found(self):
        report = is_rc_atomic_up_to(AV321, 4, 8)
        assert report.all_found

    def test_union_fails_at_312(self):
        report = is_rc_atomic_up_to(UNION, 3, 8)
        assert not report.all_found
        assert (3, 1, 2) in [r.sigma for r in report.failures]

    def test_intersection_all_found(self):
        report = is_rc_atomic_up_to(INTER, 3, 8)
        assert report.all_found

    def test_report_text_mentions_the_bound(self):
        report = is_rc_atomic_up_to(UNION, 3, 8)
        assert "up to" in str(report) and "8" in str(report)

    def test_requires_rc_invariance(self):
        with pytest.raises(ValueError, match="rc-invariant"):
            is_rc_atomic_up_to(parse_class_spec("av:312"), 3, 8)


class TestGeneratedByCentro:
    def test_sum_closed_construction(self):
        report = generated_by_centro_up_to(AV321, 3, 8)
        assert report.all_found
        by_sigma = {w.sigma: w for w in report.witnesses}
        w = by_sigma[(2, 3, 1)]
        assert w.constructed and len(w.witness) == 6
        assert is_centrosymmetric(w.witness) and member(AV321, w.witness)
        assert contains(w.witness, (2, 3, 1))

    def test_x_class_single_point(self):
        report = generated_by_centro_up_to(XCLASS, 1, 6)
        assert report.all_found
        w = report.witnesses[0]
        assert w.sigma == (1,) and w.witness == (2, 1)

    def test_union_fails(self):
        report = generated_by_centro_up_to(UNION, 3, 8)
        assert not report.all_found
        assert (3, 1, 2) in [r.sigma for r in report.failures]

    def test_witnesses_are_even_centro_members(self):
        for spec in (AV321, XCLASS, INTER):
            report = generated_by_centro_up_to(spec, 2, 8)
            for w in report.witnesses:
                assert w.found
                assert len(w.witness) % 2 == 0
                assert is_centrosymmetric(w.witness)
                assert member(spec, w.witness)
                assert contains(w.witness, w.sigma)


class TestCentroOfUnionEqualsIntersection:
    def test_spot_check(self):
        # centrosymmetric members of D union rc(D) coincide with those of
        # the intersection, at every size up to 8
        for d in ("av:312", "av:4123", "av:4312"):
            union_spec = parse_class_spec(f"union({d},rc({d}))")
            inter_spec = parse_class_spec(f"inter({d},rc({d}))")
            for m in range(9):
                assert enumerate_centrosymmetric(union_spec, m) == enumerate_centrosymmetric(
                    inter_spec, m
                )
