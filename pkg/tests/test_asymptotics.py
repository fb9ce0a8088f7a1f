import math

import numpy as np
import pytest

from spikecov.asymptotics import (
    rescaled_nonspike_direction,
    spike_angle,
    standardize_eigenvalue,
    standardize_eigvec_offdiag,
    summarize,
)
from spikecov.errors import DegeneracyError, InvalidInputError
from spikecov.simulate import SpikedModelSpec


def headline_spec():
    return SpikedModelSpec(p=500, n=50, m=3, spike_values=[50.0, 20.0, 10.0], nonspike_values=1.0)


class TestSummarize:
    def test_headline_constants(self):
        s = summarize(headline_spec())
        assert np.allclose(s.c, [0.2, 0.5, 1.0])
        assert s.c_bar == 1.0
        assert np.allclose(s.eig_bias, [1.2, 1.5, 2.0])
        assert np.allclose(
            s.angle_limit, [1 / math.sqrt(1.2), 1 / math.sqrt(1.5), 1 / math.sqrt(2.0)]
        )
        assert s.angle_limit == pytest.approx([0.9129, 0.8165, 0.7071], abs=5e-5)

    def test_single_spike(self):
        spec = SpikedModelSpec(p=100, n=20, m=1, spike_values=[10.0])
        s = summarize(spec)
        assert s.a.shape == (1, 1) and s.a[0, 0] == 0.0
        assert s.angle_limit[0] == pytest.approx(1 / math.sqrt(1 + s.c_bar * s.c[0]))

    def test_a_matrix_double_ratio(self):
        spec = SpikedModelSpec(p=100, n=20, m=2, spike_values=[8.0, 4.0])
        s = summarize(spec)
        assert s.a[0, 1] == pytest.approx(math.sqrt(2.0), abs=1e-14)
        assert s.a[1, 0] == pytest.approx(-math.sqrt(2.0), abs=1e-14)

    def test_skew_symmetry(self):
        s = summarize(headline_spec())
        assert np.allclose(s.a + s.a.T, 0.0, atol=1e-14)

    def test_tied_spikes_rejected_at_spec(self):
        with pytest.raises(InvalidInputError):
            SpikedModelSpec(p=100, n=20, m=2, spike_values=[5.0, 5.0])

    def test_scale_consistency(self):
        s = summarize(headline_spec())
        spec = headline_spec()
        assert np.array_equal(s.c * spec.spike_values, np.full(3, spec.p / spec.n))

    def test_angle_limit_decreasing_in_c(self):
        s = summarize(headline_spec())
        assert np.all(np.diff(s.angle_limit) < 0)  # c increasing over spikes here


class TestStandardizeEigenvalue:
    def test_exact_zero_at_bias(self):
        spec = headline_spec()
        for j in range(3):
            lam_hat = spec.spike_values[j] * (1.0 + 1.0 * (spec.p / (spec.n * spec.spike_values[j])))
            assert standardize_eigenvalue(lam_hat, spec, j) == 0.0

    def test_headline_arithmetic(self):
        # lambda_hat/lambda = 1.3 at spike 1: sqrt(50/2) * (1.3 - 1.2) = 0.5.
        spec = headline_spec()
        assert standardize_eigenvalue(50.0 * 1.3, spec, 0) == pytest.approx(0.5, abs=1e-12)

    def test_bad_kurtosis(self):
        spec = SpikedModelSpec(p=100, n=20, m=1, spike_values=[10.0], kurtosis=1.0)
        with pytest.raises(InvalidInputError):
            standardize_eigenvalue(12.0, spec, 0)

    def test_index_out_of_range(self):
        with pytest.raises(InvalidInputError):
            standardize_eigenvalue(1.0, headline_spec(), 3)


class TestStandardizeEigvecOffdiag:
    def test_zero_element(self):
        spec = headline_spec()
        xi = np.zeros(500)
        xi[0] = 1.0
        assert standardize_eigvec_offdiag(xi, spec, 0, 1) == 0.0

    def test_worked_example(self):
        # c_j=0.2, c_k=0.5, n=50, ratio 0.1 -> sqrt(50)*0.1/sqrt(0.1/0.09).
        spec = headline_spec()
        xi = np.zeros(500)
        xi[0] = math.sqrt(1 - 0.01)
        xi[1] = 0.1
        expected = math.sqrt(50) * 0.1 / math.sqrt(0.2 * 0.5 / (0.2 - 0.5) ** 2)
        assert expected == pytest.approx(0.6708, abs=2e-4)
        assert standardize_eigvec_offdiag(xi, spec, 0, 1) == pytest.approx(expected, rel=1e-12)

    def test_degenerate_block(self):
        spec = headline_spec()
        xi = np.zeros(500)
        xi[10] = 1.0
        with pytest.raises(DegeneracyError):
            standardize_eigvec_offdiag(xi, spec, 0, 1)


class TestSpikeAngle:
    def test_population_vector(self):
        e1 = np.zeros(10)
        e1[0] = 1.0
        assert spike_angle(e1, 0) == 1.0

    def test_sign_flip(self):
        e2 = np.zeros(10)
        e2[1] = -1.0
        assert spike_angle(e2, 1) == 1.0

    def test_global_flip_invariance(self):
        rng = np.random.default_rng(4)
        xi = rng.standard_normal(20)
        xi /= np.linalg.norm(xi)
        assert spike_angle(xi, 3) == spike_angle(-xi, 3)


class TestRescaledNonspikeDirection:
    def test_identity_rescaling(self):
        spec = headline_spec()
        xi = np.zeros(500)
        xi[:3] = 0.5
        xi[3:] = 0.01
        out = rescaled_nonspike_direction(xi, spec, 0)
        expected = xi[3:] / np.linalg.norm(xi[3:])
        assert np.allclose(out, expected, atol=1e-14)

    def test_unequal_bulk_direction(self):
        # Bulk block concentrated on one axis with that eigenvalue 4 and
        # c_bar 1: the rescaled direction is still that axis after
        # renormalization.
        nonspikes = np.concatenate([[4.0], np.full(96, 31.0 / 32.0)])
        assert np.mean(nonspikes) == pytest.approx(1.0)
        spec = SpikedModelSpec(p=100, n=20, m=3, spike_values=[30.0, 20.0, 10.0],
                               nonspike_values=nonspikes)
        xi = np.zeros(100)
        xi[3] = 1.0
        out = rescaled_nonspike_direction(xi, spec, 0)
        assert out[0] == pytest.approx(1.0, abs=1e-12)
        assert np.abs(out[1:]).max() == 0.0

    def test_unit_norm_output(self):
        rng = np.random.default_rng(5)
        spec = headline_spec()
        xi = rng.standard_normal(500)
        xi /= np.linalg.norm(xi)
        out = rescaled_nonspike_direction(xi, spec, 1)
        assert len(out) == 497
        assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-12)

    def test_degenerate_block(self):
        spec = headline_spec()
        xi = np.zeros(500)
        xi[0] = 1.0
        with pytest.raises(DegeneracyError):
            rescaled_nonspike_direction(xi, spec, 0)
