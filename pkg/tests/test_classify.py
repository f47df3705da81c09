from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from exacthom.classify import (
    SampleConfig,
    check_concentrated_lemma,
    check_sphere_theorem,
    check_torus_theorem,
    commuting_invertible_pairs,
    enumerate_spaces,
    enumerate_sphere_representations,
    enumerate_torus_representations,
    run_check,
    sample_representation_at,
    sample_representations,
)
from exacthom.errors import FormatError
from exacthom.quiver import (
    floer_cohomology,
    sphere_quiver,
    torus_quiver,
    validate_representation,
)


class TestConfig:
    def test_defaults(self):
        cfg = SampleConfig()
        assert cfg.seed == 0
        assert cfg.count == 100
        assert cfg.max_total_dim == 3

    def test_bad_count(self):
        with pytest.raises(FormatError):
            SampleConfig(count=0)

    def test_bad_dim(self):
        with pytest.raises(FormatError):
            SampleConfig(max_total_dim=0)

    def test_empty_band(self):
        with pytest.raises(FormatError):
            SampleConfig(degree_band=(2, -2))

    def test_empty_pool(self):
        with pytest.raises(FormatError):
            SampleConfig(scalar_pool=())

    def test_pool_normalized_to_fractions(self):
        cfg = SampleConfig(scalar_pool=(1, -1))
        assert all(isinstance(x, Fraction) for x in cfg.scalar_pool)


class TestSampling:
    def test_sphere_samples_validate(self):
        cfg = SampleConfig(seed=7, count=40)
        reps = list(sample_representations(sphere_quiver(), cfg))
        assert len(reps) == 40
        assert all(validate_representation(r) for r in reps)

    def test_torus_samples_validate(self):
        # commutation and invertibility must hold by construction
        cfg = SampleConfig(seed=11, count=40)
        for rep in sample_representations(torus_quiver(), cfg):
            assert rep.first_violation() is None

    def test_respects_dim_bound(self):
        cfg = SampleConfig(seed=3, count=60, max_total_dim=2)
        for rep in sample_representations(sphere_quiver(), cfg):
            assert 1 <= rep.space.total_dim() <= 2

    def test_respects_degree_band(self):
        cfg = SampleConfig(seed=3, count=60, degree_band=(-1, 4))
        for rep in sample_representations(sphere_quiver(), cfg):
            assert all(-1 <= i <= 4 for i in rep.space.degrees())

    def test_deterministic(self):
        cfg = SampleConfig(seed=5, count=25)
        a = list(sample_representations(torus_quiver(), cfg))
        b = list(sample_representations(torus_quiver(), cfg))
        assert a == b

    def test_seed_changes_stream(self):
        a = list(sample_representations(sphere_quiver(), SampleConfig(seed=1, count=30)))
        b = list(sample_representations(sphere_quiver(), SampleConfig(seed=2, count=30)))
        assert a != b

    def test_indexed_access_matches_stream(self):
        cfg = SampleConfig(seed=9, count=15)
        stream = list(sample_representations(sphere_quiver(), cfg))
        for i, rep in enumerate(stream):
            assert sample_representation_at(sphere_quiver(), cfg, i) == rep

    def test_parallel_equals_serial(self):
        cfg = SampleConfig(seed=13, count=32)
        serial = [sample_representation_at(torus_quiver(), cfg, i) for i in range(32)]
        with ThreadPoolExecutor(max_workers=4) as pool:
            parallel = list(
                pool.map(lambda i: sample_representation_at(torus_quiver(), cfg, i), range(32))
            )
        assert parallel == serial

    def test_spread_variety(self):
        """The sphere stream must exercise both concentrated and spread
        representations or the theorem checks would be vacuous."""
        cfg = SampleConfig(seed=0, count=80)
        spreads = set()
        for rep in sample_representations(sphere_quiver(), cfg):
            degs = rep.space.degrees()
            spreads.add(max(degs) - min(degs))
        assert 0 in spreads
        assert any(s >= 1 for s in spreads)


class TestEnumeration:
    def test_space_count_dim1(self):
        # one basis vector in one of five degrees
        assert len(list(enumerate_spaces(1, (-2, 2)))) == 5

    def test_space_count_dim2(self):
        # 5 singles + 5 doubled + C(5,2) = 10 split across two degrees
        assert len(list(enumerate_spaces(2, (-2, 2)))) == 20

    def test_commuting_pairs_dim1(self):
        pairs = commuting_invertible_pairs(1, (Fraction(-1), Fraction(1), Fraction(2)))
        assert len(pairs) == 9

    def test_commuting_pairs_are_commuting(self):
        for a, b in commuting_invertible_pairs(2, (Fraction(-1), Fraction(1))):
            assert a @ b == b @ a
            assert a.is_invertible() and b.is_invertible()

    def test_sphere_exhaustive_count(self):
        reps = list(enumerate_sphere_representations())
        assert len(reps) == 28
        assert all(validate_representation(r) for r in reps)

    def test_torus_exhaustive_valid(self):
        reps = list(enumerate_torus_representations())
        assert len(reps) > 500
        assert all(r.first_violation() is None for r in reps)


class TestChecks:
    def test_sphere_small(self):
        report = check_sphere_theorem(SampleConfig(seed=0, count=25))
        assert report.passed
        assert report.theorem == "sphere"
        assert report.samples_checked == 28 + 25

    def test_concentrated_small(self):
        report = check_concentrated_lemma(SampleConfig(seed=0, count=60))
        assert report.passed
        # only spread-out samples are counted
        assert 0 < report.samples_checked < 60

    def test_torus_small(self):
        report = check_torus_theorem(SampleConfig(seed=0, count=25, max_total_dim=2))
        assert report.passed
        assert report.samples_checked > 25

    def test_reports_deterministic(self):
        cfg = SampleConfig(seed=42, count=30)
        assert check_sphere_theorem(cfg) == check_sphere_theorem(cfg)
        assert check_torus_theorem(cfg) == check_torus_theorem(cfg)

    def test_payload_shape(self):
        report = check_concentrated_lemma(SampleConfig(seed=1, count=20))
        payload = report.to_payload()
        assert set(payload) == {"theorem", "checked", "violations"}
        assert payload["theorem"] == "concentrated"
        assert payload["violations"] == []

    def test_run_check_dispatch(self):
        cfg = SampleConfig(seed=0, count=10)
        assert run_check("sphere", cfg).theorem == "sphere"
        with pytest.raises(FormatError):
            run_check("klein_bottle", cfg)

    def test_concentrated_support_shape(self):
        """Spot-check the lemma directly at the extreme degrees for a few
        sampled spread representations."""
        cfg = SampleConfig(seed=17, count=40)
        seen = 0
        for rep in sample_representations(sphere_quiver(), cfg):
            degs = rep.space.degrees()
            k = max(degs) - min(degs)
            if k < 1:
                continue
            hf = floer_cohomology(rep, rep)
            assert hf.dim(-k) > 0
            assert hf.dim(k + 2) > 0
            assert max(hf.support()) - min(hf.support()) + 1 >= 4
            seen += 1
        assert seen > 0
