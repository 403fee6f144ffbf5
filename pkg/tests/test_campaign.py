import math

import numpy as np
import pytest

import wdiam as w
from wdiam.campaign import CampaignConfig, run_campaign, sample_state


class TestSampling:
    def test_reproducible(self):
        a = sample_state(5, np.random.default_rng(7))
        b = sample_state(5, np.random.default_rng(7))
        assert np.array_equal(a.coeffs, b.coeffs)

    def test_mean_squared_coefficient(self, rng):
        n = 8
        acc = np.zeros(n)
        for _ in range(2000):
            acc += sample_state(n, rng).coeffs ** 2
        np.testing.assert_allclose(acc / 2000, 1.0 / n, atol=0.02)

    def test_samples_always_valid(self, rng):
        for _ in range(100):
            state = sample_state(int(rng.integers(3, 64)), rng)
            assert abs(float(np.dot(state.coeffs, state.coeffs)) - 1.0) <= 1e-12

    def test_region_samplers(self, rng):
        for region in w.Region:
            for n in (3, 10, 40):
                state = w.sample_state_in_region(n, rng, region)
                assert w.classify(state).region is region


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            CampaignConfig(n_samples=0)
        with pytest.raises(ValueError):
            CampaignConfig(n_range=(2, 5))
        cfg = CampaignConfig(region_filter="slight")
        assert cfg.region_filter is w.Region.SLIGHT

    def test_tolerance_override(self):
        cfg = CampaignConfig(tolerances={"theorem1": 1e-6})
        assert cfg.tol("theorem1") == 1e-6
        assert cfg.tol("theorem2") == 1e-12


class TestRunCampaign:
    def test_small_campaign_passes(self):
        cfg = CampaignConfig(
            n_samples=120, n_range=(3, 32), seed=3,
            oracle_samples=40, scaling_samples=40,
        )
        report = run_campaign(cfg)
        failed = [p.name for p in report.properties if not p.passed]
        assert report.passed, f"failed: {failed}"
        names = {p.name for p in report.properties}
        assert "diameter_bounds_symmetric" in names
        assert "critical_value_scaling" in names

    def test_report_serializes(self):
        cfg = CampaignConfig(n_samples=30, n_range=(3, 8), seed=5,
                             oracle_samples=10, scaling_samples=5)
        report = run_campaign(cfg)
        data = report.to_dict()
        assert data["seed"] == 5
        assert isinstance(data["properties"], list)
        import json
        json.dumps(data)  # must be JSON-clean

    def test_region_filter_limits_scope(self):
        cfg = CampaignConfig(n_samples=25, n_range=(3, 12), seed=2,
                             region_filter="symmetric")
        report = run_campaign(cfg)
        names = {p.name for p in report.properties}
        assert any("symmetric" in n for n in names)
        assert not any("asymmetric" in n for n in names)
        assert "formula_vs_oracle" not in names

    def test_failure_carries_witness(self):
        # an impossible tolerance forces a failure; the report must carry a
        # reproducible witness instead of raising
        cfg = CampaignConfig(
            n_samples=10, n_range=(3, 8), seed=4,
            oracle_samples=10, scaling_samples=5,
            tolerances={"oracle_agreement": 0.0},
        )
        report = run_campaign(cfg)
        prop = next(p for p in report.properties if p.name == "formula_vs_oracle")
        assert not prop.passed
        assert prop.witness is not None
        assert len(prop.witness["coeffs"]) >= 3
        assert not report.passed

    def test_deterministic_reports(self):
        cfg = CampaignConfig(n_samples=20, n_range=(3, 10), seed=11,
                             oracle_samples=8, scaling_samples=4)
        a, b = run_campaign(cfg), run_campaign(cfg)
        for pa, pb in zip(a.properties, b.properties):
            assert (pa.name, pa.passed, pa.worst) == (pb.name, pb.passed, pb.worst)


class TestContinuityPieces:
    def test_continuity_properties_present_and_tight(self):
        cfg = CampaignConfig(n_samples=1, n_range=(3, 4), seed=1,
                             oracle_samples=1, scaling_samples=1)
        report = run_campaign(cfg)
        by_name = {p.name: p for p in report.properties}
        r1_prop = by_name["diameter_continuous_at_r1"]
        assert r1_prop.passed and r1_prop.worst <= 1e-8
        g_prop = by_name["overlap_continuous_at_critical_values"]
        assert g_prop.passed and g_prop.worst <= 1e-6
