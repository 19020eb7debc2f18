import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from optocorr import (
    ReducedParams,
    Subsystem,
    assemble_global,
    cm_entries,
    extract_subsystem,
    global_covariance,
    symplectic_eigenvalues,
    symplectic_form,
)
from optocorr.covariance import CovarianceEntries

from conftest import CORNER_PARAMS

PARAM_STRATEGY = st.builds(
    ReducedParams,
    alpha=st.floats(min_value=1e-3, max_value=1.0),
    beta=st.floats(min_value=0.0, max_value=100.0),
    r=st.floats(min_value=0.0, max_value=3.0),
    n_th=st.floats(min_value=0.0, max_value=100.0),
)

REF = ReducedParams(alpha=0.05, beta=34.0, r=1.0, n_th=0.0)


class TestEntries:
    def test_vacuum_collapse(self):
        for alpha, beta in ((0.05, 34.0), (1.0, 0.0), (0.3, 7.0)):
            e = cm_entries(ReducedParams(alpha=alpha, beta=beta, r=0.0, n_th=0.0))
            assert e.a1 == pytest.approx(0.5, rel=1e-14)
            assert e.a2 == pytest.approx(0.5, rel=1e-14)
            assert (e.c1, e.c2, e.c3, e.c4) == (0.0, 0.0, 0.0, 0.0)

    def test_reference_point(self):
        # frozen from 50-digit evaluation of the closed forms; the
        # Lyapunov oracle cross-checks the same numbers end to end
        e = cm_entries(REF)
        assert e.a1 == pytest.approx(1.77775038771216, rel=1e-12)
        assert e.c1 == pytest.approx(1.67773134512651, rel=1e-12)
        assert e.a2 == pytest.approx(1.81721032615621, rel=1e-12)
        assert e.c2 == pytest.approx(1.72954363666718, rel=1e-12)
        assert e.c3 == pytest.approx(0.0489994905930689, rel=1e-12)
        assert e.c4 == pytest.approx(0.064338060120192, rel=1e-12)

    def test_decoupled_limit(self):
        p = ReducedParams(alpha=0.2, beta=0.0, r=1.3, n_th=4.0)
        e = cm_entries(p)
        assert e.a1 == pytest.approx(p.n_th + 0.5, rel=1e-14)
        assert e.a2 == pytest.approx(np.cosh(2 * p.r) / 2.0, rel=1e-14)
        assert e.c2 == pytest.approx(np.sinh(2 * p.r) / 2.0, rel=1e-14)
        assert e.c1 == e.c3 == e.c4 == 0.0

    @given(PARAM_STRATEGY)
    def test_no_squeezing_kills_cross_terms(self, p):
        e = cm_entries(ReducedParams(alpha=p.alpha, beta=p.beta, r=0.0, n_th=p.n_th))
        assert e.c1 == 0.0 and e.c2 == 0.0 and e.c4 == 0.0

    def test_small_damping_kills_hybrid_terms(self):
        e = cm_entries(ReducedParams(alpha=1e-12, beta=34.0, r=1.0, n_th=0.0))
        assert abs(e.c3) < 1e-5 and abs(e.c4) < 1e-5
        assert e.c1 > 1.0  # the homogeneous correlations survive

    @given(PARAM_STRATEGY)
    def test_single_mode_variances_at_or_above_vacuum(self, p):
        e = cm_entries(p)
        assert e.a1 >= 0.5 - 1e-12 and e.a2 >= 0.5 - 1e-12
        assert e.c1 >= 0.0 and e.c2 >= 0.0 and e.c4 >= 0.0


class TestGlobalMatrix:
    def test_vacuum_identity(self):
        sigma = global_covariance(ReducedParams(alpha=0.3, beta=0.0, r=0.0, n_th=0.0))
        assert np.allclose(sigma, 0.5 * np.eye(8), atol=1e-15)

    def test_exact_symmetry(self):
        sigma = global_covariance(REF)
        assert np.array_equal(sigma, sigma.T)

    def test_sign_pattern(self):
        e = CovarianceEntries(a1=1.0, a2=2.0, c1=0.1, c2=0.2, c3=0.3, c4=0.4)
        s = assemble_global(e)
        # labels: 0 Xm1, 1 Ym1, 2 Xm2, 3 Ym2, 4 Xo1, 5 Yo1, 6 Xo2, 7 Yo2
        assert s[0, 2] == +e.c1 and s[1, 3] == -e.c1
        assert s[4, 6] == +e.c2 and s[5, 7] == -e.c2
        assert s[0, 4] == +e.c3 and s[1, 5] == +e.c3
        assert s[2, 6] == +e.c3 and s[3, 7] == +e.c3
        assert s[0, 6] == +e.c4 and s[1, 7] == -e.c4
        assert s[2, 4] == +e.c4 and s[3, 5] == -e.c4
        # every X quadrature decouples from every Y quadrature
        for i in (0, 2, 4, 6):
            for j in (1, 3, 5, 7):
                assert s[i, j] == 0.0

    def test_reference_symplectic_spectrum_physical(self):
        nus = symplectic_eigenvalues(global_covariance(REF))
        assert nus.shape == (4,)
        assert nus.min() >= 0.5 - 1e-9

    @settings(max_examples=40)
    @given(PARAM_STRATEGY)
    def test_grid_physicality(self, p):
        nus = symplectic_eigenvalues(global_covariance(p))
        assert nus.min() >= 0.5 - 1e-9

    def test_corner_physicality(self):
        for p in CORNER_PARAMS:
            assert symplectic_eigenvalues(global_covariance(p)).min() >= 0.5 - 1e-9


class TestSymplecticForm:
    def test_blocks(self):
        omega = symplectic_form(2)
        expected = np.array([
            [0, 1, 0, 0],
            [-1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, -1, 0],
        ], dtype=float)
        assert np.array_equal(omega, expected)

    def test_vacuum_spectrum(self):
        assert np.allclose(symplectic_eigenvalues(0.5 * np.eye(8)), 0.5)


class TestExtraction:
    def test_vacuum_blocks(self):
        sigma = 0.5 * np.eye(8)
        cm = extract_subsystem(sigma, Subsystem.MM)
        assert np.array_equal(cm.a_block, 0.5 * np.eye(2))
        assert np.array_equal(cm.b_block, 0.5 * np.eye(2))
        assert np.array_equal(cm.c_block, np.zeros((2, 2)))

    def test_block_structure_per_subsystem(self):
        e = cm_entries(REF)
        sigma = assemble_global(e)
        mm = extract_subsystem(sigma, Subsystem.MM)
        assert np.allclose(mm.a_block, e.a1 * np.eye(2))
        assert np.allclose(mm.b_block, e.a1 * np.eye(2))
        assert np.allclose(mm.c_block, np.diag([e.c1, -e.c1]))
        oo = extract_subsystem(sigma, Subsystem.OO)
        assert np.allclose(oo.c_block, np.diag([e.c2, -e.c2]))
        hl = extract_subsystem(sigma, Subsystem.HYBRID_LOCAL)
        assert np.allclose(hl.a_block, e.a1 * np.eye(2))
        assert np.allclose(hl.b_block, e.a2 * np.eye(2))
        assert np.allclose(hl.c_block, np.diag([e.c3, e.c3]))
        hc = extract_subsystem(sigma, Subsystem.HYBRID_CROSS)
        assert np.allclose(hc.c_block, np.diag([e.c4, -e.c4]))

    def test_reference_cross_determinants(self):
        sigma = global_covariance(REF)
        oo = extract_subsystem(sigma, Subsystem.OO)
        assert oo.det_c == pytest.approx(-2.99132119113595, rel=1e-12)
        hl = extract_subsystem(sigma, Subsystem.HYBRID_LOCAL)
        assert hl.det_c >= 0.0

    def test_symmetric_subsystems_have_equal_block_dets(self):
        sigma = global_covariance(REF)
        for tag in (Subsystem.MM, Subsystem.OO):
            cm = extract_subsystem(sigma, tag)
            assert cm.det_a == pytest.approx(cm.det_b, rel=1e-14)

    def test_matrix_reassembly(self):
        sigma = global_covariance(REF)
        cm = extract_subsystem(sigma, Subsystem.HYBRID_CROSS)
        four = cm.matrix()
        assert four.shape == (4, 4)
        assert np.array_equal(four[:2, :2], cm.a_block)
        assert np.array_equal(four[:2, 2:], cm.c_block)
        assert np.array_equal(four, four.T)

    def test_string_tags_accepted(self):
        sigma = global_covariance(REF)
        assert extract_subsystem(sigma, "oo").tag is Subsystem.OO

    def test_unknown_tag_rejected(self):
        with pytest.raises(ValueError, match="invalid bipartition"):
            extract_subsystem(global_covariance(REF), "mo")

    def test_det_sigma_matches_generic_determinant(self):
        sigma = global_covariance(REF)
        for tag in Subsystem:
            cm = extract_subsystem(sigma, tag)
            assert cm.det_sigma == pytest.approx(
                float(np.linalg.det(cm.matrix())), rel=1e-10
            )
