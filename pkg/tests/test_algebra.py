import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wzernike.algebra import (
    BANDWIDTH_CAP,
    Generator,
    OperatorSpec,
    UEAMonomial,
    apply_generator,
    apply_monomial,
    apply_monomial_composed,
    apply_operator,
    apply_p,
    casimir_apply,
    commutator_residual,
    expected_commutator,
    falling,
    group_exponential,
    ladder_differential_residual,
    monomial_g,
    ode_mode_residual,
    p_alpha,
    p_beta,
    rising,
)
from wzernike.basis import DiskPoint, ModeIndex, modes_upto
from wzernike.transform import CoeffField, build_quadrature, max_abs_diff, synthesize_on


def random_field(rng, bandwidth, integer=False):
    vals = np.zeros((bandwidth + 1, bandwidth + 1), dtype=complex)
    for u in range(bandwidth + 1):
        for v in range(bandwidth + 1 - u):
            if integer:
                vals[u, v] = complex(rng.integers(-9, 10), rng.integers(-9, 10))
            else:
                vals[u, v] = complex(rng.normal(), rng.normal())
    return CoeffField(bandwidth, vals)


class TestGenerators:
    def test_raising_weight(self):
        out = apply_generator(Generator.A_PLUS, CoeffField.basis(4, 1))
        assert out.get(5, 1) == 5.0
        assert out.l2_norm() == 5.0

    def test_lowering_annihilates_edge(self):
        out = apply_generator(Generator.A_MINUS, CoeffField.basis(0, 3))
        assert out.l2_norm() == 0.0

    def test_lowering_weight(self):
        out = apply_generator(Generator.B_MINUS, CoeffField.basis(1, 3))
        assert out.get(1, 2) == 3.0

    def test_diagonal_weight(self):
        out = apply_generator(Generator.A3, CoeffField.basis(2, 2))
        assert out.get(2, 2) == 2.5

    def test_number_operators(self):
        f = CoeffField.basis(3, 2)
        assert apply_generator(Generator.U, f).get(3, 2) == 3.0
        assert apply_generator(Generator.V, f).get(3, 2) == 2.0

    def test_raising_grows_bandwidth(self):
        f = CoeffField.basis(1, 1)
        assert apply_generator(Generator.B_PLUS, f).bandwidth == 3
        assert apply_generator(Generator.B3, f).bandwidth == 2

    def test_bandwidth_cap(self):
        f = CoeffField.zeros(BANDWIDTH_CAP)
        with pytest.raises(ValueError, match="cap"):
            apply_generator(Generator.A_PLUS, f)

    def test_adjoint_pairing(self):
        # <A+ f, g> = <f, A- g> in the plain coefficient l2 pairing
        rng = np.random.default_rng(0)
        f = random_field(rng, 5)
        g = random_field(rng, 6)
        lhs = np.vdot(apply_generator(Generator.A_PLUS, f).values,
                      g.with_bandwidth(6).values)
        rhs = np.vdot(f.with_bandwidth(6).values,
                      apply_generator(Generator.A_MINUS, g).values)
        assert lhs == pytest.approx(rhs)


class TestCommutators:
    def test_su11_bracket(self):
        assert expected_commutator(Generator.A_PLUS, Generator.A_MINUS) == (
            -2.0, Generator.A3,
        )

    def test_reversed_bracket_negates(self):
        assert expected_commutator(Generator.A_MINUS, Generator.A_PLUS) == (
            2.0, Generator.A3,
        )

    def test_cross_family_commutes(self):
        assert expected_commutator(Generator.A_PLUS, Generator.B_MINUS) == (0.0, None)

    def test_residuals_vanish_exactly(self):
        f = random_field(np.random.default_rng(9), 7, integer=True)
        for x in Generator:
            for y in Generator:
                assert commutator_residual(x, y, f) == 0.0


class TestCasimir:
    def test_eigenvalue_on_basis_modes(self):
        for u, v in [(0, 0), (3, 1), (0, 7)]:
            f = CoeffField.basis(u, v)
            for family in "AB":
                assert max_abs_diff(casimir_apply(family, f), -0.25 * f) == 0.0

    def test_eigenvalue_on_dense_field(self):
        f = random_field(np.random.default_rng(4), 6)
        assert max_abs_diff(casimir_apply("A", f), -0.25 * f) <= 1e-14

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="family"):
            casimir_apply("C", CoeffField.zeros(0))


class TestFactorials:
    def test_falling(self):
        assert falling(5.0, 3) == 60.0
        assert falling(2.0, 5) == 0.0
        assert falling(3.0, 0) == 1.0

    def test_rising(self):
        assert rising(2.0, 3) == 24.0
        assert rising(4.0, 0) == 1.0


class TestMonomials:
    def test_worked_example(self):
        # raising three times in u and once in v from (4, 1) gives
        # 5*6*7 * 2 = 420 landing at (7, 2)
        assert monomial_g(4, 1, (3, 0, 0), (1, 0, 0)) == 420.0
        out = apply_monomial(UEAMonomial(1.0, (3, 0, 0), (1, 0, 0)),
                             CoeffField.basis(4, 1))
        assert out.get(7, 2) == 420.0
        assert out.l2_norm() == 420.0

    def test_identity_monomial(self):
        f = random_field(np.random.default_rng(3), 4)
        out = apply_monomial(UEAMonomial(1.0, (0, 0, 0), (0, 0, 0)), f)
        assert max_abs_diff(out, f) == 0.0

    def test_overshoot_lowering_annihilates(self):
        assert monomial_g(2, 0, (0, 0, 3), (0, 0, 0)) == 0.0
        out = apply_monomial(UEAMonomial(1.0, (0, 0, 3), (0, 0, 0)),
                             CoeffField.basis(2, 0))
        assert out.l2_norm() == 0.0

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError, match="non-negative"):
            UEAMonomial(1.0, (-1, 0, 0), (0, 0, 0))

    def test_matches_composed_oracle(self):
        f = random_field(np.random.default_rng(5), 4)
        for alpha in [(1, 1, 0), (2, 0, 1), (0, 2, 2)]:
            for beta in [(0, 0, 0), (1, 0, 1), (0, 1, 0)]:
                m = UEAMonomial(0.5 - 1j, alpha, beta)
                got = apply_monomial(m, f)
                want = apply_monomial_composed(m, f)
                scale = max(1.0, float(np.max(np.abs(want.values))))
                assert max_abs_diff(got, want) / scale <= 1e-13

    @given(
        st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
        st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
        st.integers(0, 6), st.integers(0, 6),
    )
    @settings(max_examples=100, deadline=None)
    def test_coefficient_formula_on_basis_modes(self, alpha, beta, u, v):
        m = UEAMonomial(1.0, alpha, beta)
        got = apply_monomial(m, CoeffField.basis(u, v))
        want = apply_monomial_composed(m, CoeffField.basis(u, v))
        assert max_abs_diff(got, want) <= 1e-9 * max(
            1.0, float(np.max(np.abs(want.values)))
        )


class TestOperators:
    def test_empty_spec_is_zero(self):
        f = random_field(np.random.default_rng(6), 3)
        assert apply_operator(OperatorSpec.of(), f).l2_norm() == 0.0

    def test_single_monomial(self):
        f = CoeffField.basis(1, 1)
        spec = OperatorSpec.of(UEAMonomial(2.0, (1, 0, 0), (0, 0, 0)))
        assert apply_operator(spec, f).get(2, 1) == 4.0

    def test_cancellation(self):
        f = random_field(np.random.default_rng(7), 3)
        m = UEAMonomial(1.0, (1, 0, 0), (0, 1, 0))
        spec = OperatorSpec.of(m, UEAMonomial(-1.0, (1, 0, 0), (0, 1, 0)))
        assert apply_operator(spec, f).l2_norm() == 0.0

    def test_linearity_in_field(self):
        rng = np.random.default_rng(8)
        f, g = random_field(rng, 4), random_field(rng, 4)
        spec = OperatorSpec.of(
            UEAMonomial(1.0 + 1j, (1, 0, 0), (0, 0, 1)),
            UEAMonomial(-2.0, (0, 1, 0), (1, 0, 0)),
        )
        lhs = apply_operator(spec, f + 3j * g)
        rhs = apply_operator(spec, f) + 3j * apply_operator(spec, g)
        assert max_abs_diff(lhs, rhs) <= 1e-12


class TestMultiplicationOperator:
    def test_shift_coefficients(self):
        assert p_alpha(0, 0) == pytest.approx(1 / math.sqrt(2))
        assert p_beta(0, 0) == 0.0
        assert p_beta(2, 1) == pytest.approx(1 / (2 * math.sqrt(3)))

    def test_coefficients_bounded_by_one(self):
        for u in range(20):
            for v in range(20):
                assert 0.0 < p_alpha(u, v) <= 1.0
                assert 0.0 <= p_beta(u, v) < 1.0

    def test_matches_pointwise_product(self):
        f = random_field(np.random.default_rng(10), 5)
        q = build_quadrature(6)
        lhs = synthesize_on(apply_p(f), q).values
        factor = q.r[:, None] * np.exp(1j * q.phi)[None, :]
        rhs = synthesize_on(f.with_bandwidth(6), q).values * factor
        assert np.max(np.abs(lhs - rhs)) <= 1e-12


class TestGroupExponential:
    def test_zero_parameters_identity(self):
        f = random_field(np.random.default_rng(12), 3)
        out = group_exponential("A", (0.0, 0.0, 0.0), 6, f)
        assert max_abs_diff(out, f.with_bandwidth(f.bandwidth + 6)) == 0.0

    def test_norm_preserved_for_small_parameters(self):
        f = random_field(np.random.default_rng(14), 4)
        out = group_exponential("B", (0.02, -0.01, 0.03), 12, f)
        assert out.l2_norm() == pytest.approx(f.l2_norm(), rel=1e-6)

    def test_tail_shrinks_with_order(self):
        f = random_field(np.random.default_rng(15), 3)
        params = (0.03, 0.01, -0.02)
        lo = group_exponential("A", params, 6, f)
        hi = group_exponential("A", params, 12, f)
        hi2 = group_exponential("A", params, 13, f)
        assert max_abs_diff(hi.with_bandwidth(16), hi2.with_bandwidth(16)) < \
            max_abs_diff(lo.with_bandwidth(16), hi2.with_bandwidth(16))

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError, match="non-negative"):
            group_exponential("A", (0.0, 0.0, 0.0), -1, CoeffField.zeros(0))


class TestDifferentialResiduals:
    def test_ladder_residuals_small(self):
        p = DiskPoint(0.52, 0.9)
        for mode in modes_upto(4):
            for g in (Generator.A_PLUS, Generator.A_MINUS,
                      Generator.B_PLUS, Generator.B_MINUS):
                assert ladder_differential_residual(g, mode, p, 1e-4) <= 1e-6

    def test_non_ladder_rejected(self):
        with pytest.raises(ValueError, match="not a ladder"):
            ladder_differential_residual(Generator.A3, ModeIndex(1, 1),
                                         DiskPoint(0.5, 0.0), 1e-4)

    def test_mode_ode_residual_small(self):
        p = DiskPoint(0.43, 2.2)
        for mode in modes_upto(4):
            assert ode_mode_residual(mode, p, 1e-4) <= 1e-5

    def test_boundary_point_rejected(self):
        with pytest.raises(ValueError, match="too close"):
            ode_mode_residual(ModeIndex(1, 0), DiskPoint(1.0, 0.0), 1e-4)
