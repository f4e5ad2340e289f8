import numpy as np
import pytest

from entrosep.entropy import (
    INFINITY,
    SIGN_TOL,
    VON_NEUMANN,
    EntropicParameter,
    conditional_sign_report,
    conditional_tsallis,
    omega_q,
    renyi,
    tsallis,
    tsallis_from_renyi,
)
from entrosep.errors import StructureError
from entrosep.linalg import _flat_simplex, haar_unitary
from entrosep.states import (
    BipartiteDims,
    DensityMatrix,
    bell_psi_minus,
    maximally_mixed,
    product_state,
    sample_mixed_state,
    werner_state,
)

DIMS_22 = BipartiteDims(2, 2)


def random_spectra(rng, n, size):
    return np.sort(_flat_simplex(n, rng, size=size), axis=-1)[..., ::-1]


def random_factor(rng, n):
    lam = _flat_simplex(n, rng)
    u = haar_unitary(n, rng)
    return (u * lam) @ u.conj().T


class TestEntropicParameter:
    def test_finite_validation(self):
        with pytest.raises(ValueError):
            EntropicParameter.finite(0.0)
        with pytest.raises(ValueError):
            EntropicParameter.finite(-2.0)
        with pytest.raises(ValueError):
            EntropicParameter.finite(1.0)
        with pytest.raises(ValueError):
            EntropicParameter.finite(1.0 + 5e-13)

    def test_parse_tokens(self):
        assert EntropicParameter.parse("inf") == INFINITY
        assert EntropicParameter.parse("INF") == INFINITY
        assert EntropicParameter.parse("1") == VON_NEUMANN
        assert EntropicParameter.parse("2.5") == EntropicParameter.finite(2.5)
        for bad in ("0", "-1", "abc", "nan"):
            with pytest.raises(ValueError):
                EntropicParameter.parse(bad)

    def test_tokens_round_trip(self):
        for tok in ("0.5", "1", "2", "2.5", "6.67", "20", "inf"):
            assert EntropicParameter.parse(tok).token == tok


class TestOmegaQ:
    def test_pure_state(self):
        for q in (0.5, 2.0, 7.0):
            assert omega_q(np.array([1.0, 0.0, 0.0, 0.0]), q) == 1.0

    def test_maximally_mixed(self):
        assert abs(omega_q(np.full(4, 0.25), 2.0) - 0.25) < 1e-15

    def test_known_spectrum(self):
        assert abs(omega_q(np.array([0.5, 0.25, 0.125, 0.125]), 2.0) - 0.34375) < 1e-15

    def test_positive_everywhere(self):
        rng = np.random.default_rng(40)
        s = random_spectra(rng, 6, 500)
        for q in (0.3, 0.5, 2.0, 5.0, 30.0):
            assert np.all(omega_q(s, q) > 0.0)

    def test_rejects_nonpositive_q(self):
        with pytest.raises(ValueError):
            omega_q(np.array([1.0]), 0.0)
        with pytest.raises(ValueError):
            omega_q(np.array([1.0]), -1.0)


class TestRenyi:
    def test_pure_state_vanishes(self):
        s = np.array([1.0, 0.0, 0.0])
        for p in (EntropicParameter.finite(0.5), VON_NEUMANN, EntropicParameter.finite(3), INFINITY):
            assert abs(renyi(s, p)) < 1e-15

    def test_von_neumann_uniform(self):
        assert abs(renyi(np.array([0.5, 0.5]), VON_NEUMANN) - np.log(2)) < 1e-15

    def test_infinity_on_werner_spectrum(self):
        s = np.array([0.625, 0.125, 0.125, 0.125])
        assert abs(renyi(s, INFINITY) - (-np.log(0.625))) < 1e-12

    def test_limit_q_to_one(self):
        rng = np.random.default_rng(41)
        s = random_spectra(rng, 4, 200)
        exact = renyi(s, VON_NEUMANN)
        for q in (1.0 + 1e-6, 1.0 - 1e-6):
            approx = renyi(s, EntropicParameter.finite(q))
            assert np.max(np.abs(approx - exact)) < 1e-4

    def test_limit_q_to_infinity(self):
        rng = np.random.default_rng(42)
        s = random_spectra(rng, 4, 200)
        approx = renyi(s, EntropicParameter.finite(1e4))
        assert np.max(np.abs(approx - renyi(s, INFINITY))) < 1e-3


class TestTsallis:
    def test_examples(self):
        assert abs(tsallis(np.array([1.0, 0.0]), 2.0)) < 1e-15
        assert abs(tsallis(np.full(4, 0.25), 2.0) - 0.75) < 1e-15
        assert abs(tsallis(np.array([0.5, 0.25, 0.125, 0.125]), 2.0) - 0.65625) < 1e-15

    def test_q_one_rejected(self):
        with pytest.raises(ValueError):
            tsallis(np.array([0.5, 0.5]), 1.0)


class TestTsallisFromRenyi:
    def test_zero_fixed_point(self):
        for q in (0.5, 2.0, 9.0):
            assert tsallis_from_renyi(0.0, q) == 0.0

    def test_known_value(self):
        assert abs(tsallis_from_renyi(np.log(2.0), 2.0) - 0.5) < 1e-15

    def test_links_the_two_families(self):
        rng = np.random.default_rng(43)
        s = random_spectra(rng, 5, 300)
        for q in (0.5, 2.0, 3.5):
            lhs = tsallis_from_renyi(renyi(s, EntropicParameter.finite(q)), q)
            assert np.max(np.abs(lhs - tsallis(s, q))) < 1e-12

    def test_strictly_increasing(self):
        rng = np.random.default_rng(44)
        for q in (0.5, 2.0, 8.0):
            x = np.sort(rng.uniform(0.0, 3.0, size=100))
            y = tsallis_from_renyi(x, q)
            assert np.all(np.diff(y) > 0)

    def test_q_one_rejected(self):
        with pytest.raises(ValueError):
            tsallis_from_renyi(0.3, 1.0)


class TestAdditivityLaws:
    def test_tsallis_pseudo_additivity(self):
        rng = np.random.default_rng(45)
        for q in (0.5, 2.0, 3.0):
            for _ in range(20):
                a = random_factor(rng, 2)
                b = random_factor(rng, 3)
                rho = product_state(a, b)
                s_ab = tsallis(rho.spectrum(), q)
                s_a = tsallis(np.linalg.eigvalsh(a), q)
                s_b = tsallis(np.linalg.eigvalsh(b), q)
                assert abs(s_ab - (s_a + s_b + (1 - q) * s_a * s_b)) < 1e-10

    def test_renyi_additivity(self):
        rng = np.random.default_rng(46)
        params = (EntropicParameter.finite(0.5), VON_NEUMANN, EntropicParameter.finite(4), INFINITY)
        for p in params:
            for _ in range(20):
                a = random_factor(rng, 2)
                b = random_factor(rng, 2)
                rho = product_state(a, b)
                s_ab = renyi(rho.spectrum(), p)
                s_a = renyi(np.clip(np.linalg.eigvalsh(a), 0, None), p)
                s_b = renyi(np.clip(np.linalg.eigvalsh(b), 0, None), p)
                assert abs(s_ab - (s_a + s_b)) < 1e-10


class TestConditionalTsallis:
    def test_product_reduces_to_factor_entropy(self):
        rng = np.random.default_rng(47)
        for q in (0.5, 2.0, 3.0):
            a = random_factor(rng, 2)
            b = random_factor(rng, 2)
            rho = product_state(a, b)
            expected = tsallis(np.clip(np.linalg.eigvalsh(a), 0, None), q)
            assert abs(conditional_tsallis(rho, "B", q) - expected) < 1e-10

    def test_bell_state(self):
        assert abs(conditional_tsallis(bell_psi_minus(), "B", 2.0) + 1.0) < 1e-12

    def test_werner_quarter_positive(self):
        assert conditional_tsallis(werner_state(0.25), "B", 2.0) > 0.0

    def test_errors(self):
        with pytest.raises(StructureError):
            conditional_tsallis(DensityMatrix(np.eye(4) / 4), "B", 2.0)
        with pytest.raises(ValueError):
            conditional_tsallis(maximally_mixed(DIMS_22), "B", 1.0)
        with pytest.raises(ValueError):
            conditional_tsallis(maximally_mixed(DIMS_22), "X", 2.0)


class TestConditionalSignReport:
    def test_product_state_deltas_equal_factor_entropies(self):
        rng = np.random.default_rng(48)
        a = random_factor(rng, 2)
        b = random_factor(rng, 2)
        rho = product_state(a, b)
        for p in (EntropicParameter.finite(0.5), VON_NEUMANN, EntropicParameter.finite(3), INFINITY):
            report = conditional_sign_report(rho, p)
            assert report.both_nonnegative
            assert abs(report.delta_ab - renyi(np.clip(np.linalg.eigvalsh(a), 0, None), p)) < 1e-10
            assert abs(report.delta_ba - renyi(np.clip(np.linalg.eigvalsh(b), 0, None), p)) < 1e-10

    def test_bell_at_infinity(self):
        report = conditional_sign_report(bell_psi_minus(), INFINITY)
        assert abs(report.delta_ab + np.log(2.0)) < 1e-12
        assert not report.both_nonnegative

    def test_werner_quarter_at_infinity(self):
        report = conditional_sign_report(werner_state(0.25), INFINITY)
        assert abs(report.delta_ab - np.log(8.0 / 7.0)) < 1e-12
        assert report.both_nonnegative

    def test_denominator_positive_for_sampled_states(self):
        rng = np.random.default_rng(49)
        for _ in range(100):
            rho = sample_mixed_state(DIMS_22, rng)
            spec_b = np.clip(
                np.linalg.eigvalsh(rho.matrix.reshape(2, 2, 2, 2).trace(axis1=0, axis2=2)), 0, None
            )
            for q in (0.5, 2.0, 5.0):
                assert omega_q(spec_b, q) > 0.0


class TestSignEquivalence:
    def test_tsallis_and_renyi_signs_match_per_state(self):
        rng = np.random.default_rng(50)
        for _ in range(2000):
            rho = sample_mixed_state(DIMS_22, rng)
            for q in (0.5, 2.0, 3.0, 5.0):
                p = EntropicParameter.finite(q)
                report = conditional_sign_report(rho, p)
                for side, delta in (("B", report.delta_ab), ("A", report.delta_ba)):
                    cond = conditional_tsallis(rho, side, q)
                    assert _sign_class(cond) == _sign_class(delta)

    def test_sign_equivalence_at_scale(self):
        # same equivalence, vectorized over 10^4 states per q
        rng = np.random.default_rng(51)
        n = 10_000
        u = haar_unitary(4, rng, size=n)
        lam = _flat_simplex(4, rng, size=n)
        rho = (u * lam[:, None, :]) @ np.conj(np.swapaxes(u, 1, 2))
        spec_ab = np.clip(np.linalg.eigvalsh(rho), 0, None)
        r4 = rho.reshape(n, 2, 2, 2, 2)
        spec_b = np.clip(np.linalg.eigvalsh(np.einsum("njajb->nab", r4)), 0, None)
        for q in (0.5, 2.0, 3.0, 5.0):
            p = EntropicParameter.finite(q)
            delta = renyi(spec_ab, p) - renyi(spec_b, p)
            cond = (tsallis(spec_ab, q) - tsallis(spec_b, q)) / omega_q(spec_b, q)
            assert np.array_equal(_sign_class_arr(cond), _sign_class_arr(delta))


def _sign_class(x: float) -> int:
    return 0 if abs(x) <= SIGN_TOL else (1 if x > 0 else -1)


def _sign_class_arr(x: np.ndarray) -> np.ndarray:
    out = np.sign(x).astype(int)
    out[np.abs(x) <= SIGN_TOL] = 0
    return out
