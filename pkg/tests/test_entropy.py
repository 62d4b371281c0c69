import math

import numpy as np
import pytest

from gaussinfo import (
    EntropyValue,
    InvalidStateError,
    NumericalFailureError,
    entropy,
    entropy_abs_form,
    entropy_from_occupation,
    entropy_squared_form,
    elementary_state,
    gauge_invariant_state,
    make_context,
    matrix_abs,
    purify,
    squared_sympeig_entropy,
    symplectic_spectrum,
    thermal_entropy,
    thermal_fock,
    vn_entropy_fock,
)
from conftest import random_occupation

LN2 = math.log(2.0)

# frozen with 30-digit mpmath arithmetic: (7/4) log(7/4) - (3/4) log(3/4)
G_OF_0_75 = 1.195089183225825


class TestThermalEntropy:
    def test_zero_limit(self):
        assert thermal_entropy(0.0) == 0.0

    def test_closed_form_at_one(self):
        np.testing.assert_allclose(thermal_entropy(1.0), 2 * LN2, rtol=1e-15)

    def test_high_precision_value(self):
        np.testing.assert_allclose(thermal_entropy(0.75), G_OF_0_75, rtol=1e-12)

    def test_strictly_increasing_and_nonnegative(self):
        xs = np.linspace(0.0, 12.0, 200)
        vals = [thermal_entropy(x) for x in xs]
        assert all(v >= 0 for v in vals)
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            thermal_entropy(-1e-3)


class TestSquaredSympeigEntropy:
    def test_pure_boundary(self):
        assert squared_sympeig_entropy(0.25) == 0.0

    def test_matches_thermal_entropy_at_three_halves(self):
        np.testing.assert_allclose(squared_sympeig_entropy(2.25), 2 * LN2, rtol=1e-15)

    def test_identity_with_thermal_entropy(self, rng):
        for a in rng.uniform(0.5, 10.0, size=100):
            np.testing.assert_allclose(
                squared_sympeig_entropy(a * a), thermal_entropy(a - 0.5), rtol=1e-12
            )

    def test_below_quarter_rejected(self):
        with pytest.raises(ValueError):
            squared_sympeig_entropy(0.2)


class TestMatrixAbs:
    def test_rotation_like_matrix(self):
        mat = np.array([[0.0, -1.5], [1.5, 0.0]])
        out = matrix_abs(mat)
        np.testing.assert_allclose(out, 1.5 * np.eye(2), atol=1e-14)
        np.testing.assert_allclose(sorted(np.linalg.eigvals(out).real), [1.5, 1.5])

    def test_identity(self):
        np.testing.assert_allclose(matrix_abs(np.eye(3)), np.eye(3), atol=1e-15)

    def test_diagonal(self):
        np.testing.assert_allclose(matrix_abs(np.diag([-2.0, 3.0])), np.diag([2.0, 3.0]))

    def test_defective_matrix_rejected(self):
        with pytest.raises(NumericalFailureError, match="condition"):
            matrix_abs(np.array([[1.0, 1.0], [0.0, 1.0]]))


class TestSymplecticSpectrum:
    def test_elementary(self):
        spec = symplectic_spectrum(elementary_state(1.0))
        np.testing.assert_allclose(spec.values, [1.5], rtol=1e-14)

    def test_vacuum_clamped_to_half(self):
        spec = symplectic_spectrum(gauge_invariant_state(make_context(1), [[0.0]]))
        assert spec.values[0] == 0.5

    def test_two_mode_block_diagonal(self):
        st = gauge_invariant_state(make_context(2), np.diag([1.0, 2.0]))
        spec = symplectic_spectrum(st)
        np.testing.assert_allclose(spec.values, [2.5, 1.5], rtol=1e-13)
        # independent 4x4 eigensolve of delta^-1 alpha
        w = np.linalg.eigvals(np.linalg.solve(st.delta, st.alpha))
        oracle = np.sort(np.abs(w.imag))[::2][::-1]
        np.testing.assert_allclose(spec.values, oracle, rtol=1e-13)

    def test_descending_order(self, rng):
        st = gauge_invariant_state(make_context(3), random_occupation(rng, 3))
        vals = symplectic_spectrum(st).values
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        assert all(vals >= 0.5)


class TestEntropy:
    def test_vacuum_zero(self):
        st = gauge_invariant_state(make_context(2), np.zeros((2, 2)))
        assert entropy(st).nats == 0.0

    def test_elementary(self):
        np.testing.assert_allclose(entropy(elementary_state(1.0)).nats, 2 * LN2, rtol=1e-13)

    def test_two_mode_additivity(self):
        st = gauge_invariant_state(make_context(2), np.diag([1.0, 2.0]))
        expected = thermal_entropy(1.0) + thermal_entropy(2.0)
        np.testing.assert_allclose(entropy(st).nats, expected, rtol=1e-12)

    def test_against_fock_thermal_entropies(self):
        # independent check: diagonalize truncated thermal density matrices
        fock = vn_entropy_fock(thermal_fock(1.0, 60)) + vn_entropy_fock(thermal_fock(2.0, 90))
        st = gauge_invariant_state(make_context(2), np.diag([1.0, 2.0]))
        np.testing.assert_allclose(entropy(st).nats, fock, atol=1e-6)

    def test_monotone_in_occupation(self):
        vals = [entropy(elementary_state(n)).nats for n in (0.0, 0.2, 0.5, 1.0, 2.0, 5.0)]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_entropy_value_bits(self):
        ev = EntropyValue(2 * LN2)
        np.testing.assert_allclose(ev.bits, 2.0, rtol=1e-15)
        assert ev.value("nats") == ev.nats
        with pytest.raises(ValueError):
            ev.value("trits")

    def test_invalid_state_spectrum_rejected(self):
        from gaussinfo import spectrum_from_matrices

        with pytest.raises(InvalidStateError):
            spectrum_from_matrices(0.25 * np.eye(2), [[0.0, 1.0], [-1.0, 0.0]])


class TestFormAgreement:
    def test_three_forms_agree_on_random_ensemble(self, rng):
        worst_occ = worst_sq = 0.0
        for _ in range(200):
            s = int(rng.integers(1, 4))
            n_mat = random_occupation(rng, s)
            st = gauge_invariant_state(make_context(s), n_mat)
            h_abs = entropy_abs_form(st.alpha, st.delta)
            worst_occ = max(worst_occ, abs(h_abs - entropy_from_occupation(n_mat)))
            worst_sq = max(worst_sq, abs(h_abs - entropy_squared_form(st.alpha, st.delta)))
        assert worst_occ <= 1e-9
        assert worst_sq <= 1e-9

    def test_spectrum_route_matches_abs_form(self, rng):
        for _ in range(20):
            s = int(rng.integers(1, 4))
            st = gauge_invariant_state(make_context(s), random_occupation(rng, s))
            np.testing.assert_allclose(
                entropy(st).nats, entropy_abs_form(st.alpha, st.delta), atol=1e-9
            )

    def test_purity_iff_zero_entropy(self, rng):
        from gaussinfo import entropy_from_matrices, purity_defect

        for _ in range(30):
            s = int(rng.integers(1, 3))
            st = gauge_invariant_state(make_context(s), random_occupation(rng, s))
            bi = purify(st)
            h12 = entropy_from_matrices(bi.alpha12, bi.delta12)
            assert abs(h12) <= 1e-9
            assert purity_defect(bi.alpha12, bi.delta12) <= 1e-8
            if entropy(st).nats > 1e-6:
                assert purity_defect(st.alpha, st.delta) > 1e-8
