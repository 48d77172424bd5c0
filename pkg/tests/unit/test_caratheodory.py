from fractions import Fraction

import pytest

from hilbert_caratheodory.caratheodory import (
    cr_box,
    d_density,
    d_membership,
    decompose_face_descent,
    decompose_lp_rounding,
    density,
    descent_guarantee,
    integral_point_of_Q,
    search_integral_point,
    sigma_cap_bound,
    sigma,
    verify_decomposition,
)
from hilbert_caratheodory.core.models import Decomposition, Strategy
from hilbert_caratheodory.exactlin import IntMatrix
from hilbert_caratheodory.experiments import instance_rng, random_cone_point, random_delta2_matrix
from hilbert_caratheodory.geometry import ConeH
from hilbert_caratheodory.utils.error_handling import (
    CapExceededError,
    DimensionMismatchError,
    OutsideConeError,
    PreconditionError,
    StuckError,
)


class TestSigma:
    """Test the exact representation length oracle."""

    def test_skew_point(self, skew_basis):
        """(7, -3) needs two elements although the basis has four."""
        value, witness = sigma((7, -3), skew_basis)
        assert value == 2
        assert witness.as_pairs() == [((1, 0), 1), ((2, -1), 3)]
        assert witness.strategy == Strategy.ORACLE

    def test_basis_elements(self, skew_basis):
        for h in skew_basis:
            assert sigma(h, skew_basis)[0] == 1

    def test_zero(self, quadrant_basis):
        value, witness = sigma((0, 0), quadrant_basis)
        assert value == 0
        assert witness.length == 0

    def test_cap(self, quadrant_basis):
        with pytest.raises(CapExceededError):
            sigma((1, 1), quadrant_basis, cap=1)

    def test_outside(self, quadrant_basis):
        with pytest.raises(OutsideConeError):
            sigma((-1, 2), quadrant_basis)
        with pytest.raises(DimensionMismatchError):
            sigma((1, 2, 3), quadrant_basis)

    def test_sigma_cap_bound(self):
        assert sigma_cap_bound(1) == 1
        assert sigma_cap_bound(3) == 4


class TestBoxStatistics:
    """Test box maxima and densities."""

    def test_cr_box_quadrant(self, quadrant, quadrant_basis):
        result = cr_box(quadrant, quadrant_basis, 5)
        assert result.value == 2
        assert result.point == (1, 1)
        assert result.points == 36

    def test_cr_box_threads_agree(self, skew_cone, skew_basis):
        single = cr_box(skew_cone, skew_basis, 3)
        threaded = cr_box(skew_cone, skew_basis, 3, threads=3)
        assert single == threaded

    def test_density_quadrant(self, quadrant, quadrant_basis):
        rows = density(quadrant, quadrant_basis, 2, [2, 4, 8])
        assert [r.delta for r in rows] == [2, 4, 8]
        assert all(r.fraction == 1 for r in rows)

    def test_density_skew(self, skew_cone, skew_basis):
        """(3, -1) is in the box but needs two elements."""
        rows = density(skew_cone, skew_basis, 1, [3, 8])
        assert all(row.fraction < 1 for row in rows)
        assert all(row.count < row.total for row in rows)

    def test_density_rejects_negative_k(self, quadrant, quadrant_basis):
        with pytest.raises(PreconditionError):
            density(quadrant, quadrant_basis, -1, [2])

    def test_box_radius_must_be_positive(self, quadrant, quadrant_basis):
        with pytest.raises(PreconditionError):
            cr_box(quadrant, quadrant_basis, 0)


class TestIntegralPoints:
    """Test the integral point search behind the rounding steps."""

    def test_wedge(self, wedge_basis):
        assert integral_point_of_Q(wedge_basis, (2, 2)) == (0, 2, 0)

    def test_skew(self, skew_basis):
        assert integral_point_of_Q(skew_basis, (2, -1)) == (0, 0, 1, 0)

    def test_unreachable(self):
        assert search_integral_point([(2, 0), (0, 1)], (1, 1)) is None
        assert search_integral_point([(2, 0), (0, 1)], (0, 0)) == (0, 0)

    def test_outside(self, wedge_basis):
        with pytest.raises(OutsideConeError):
            integral_point_of_Q(wedge_basis, (0, 1))


class TestDMembership:
    """Test the exact membership test of the eligibility set."""

    def test_deep_point(self, quadrant_basis):
        report = d_membership((5, 7), quadrant_basis)
        assert report.in_D is True
        assert report.delta_H == 1
        assert report.vertex_multipliers_ok
        assert report.strips_tested == 2

    def test_boundary_point(self, quadrant_basis):
        assert d_membership((0, 7), quadrant_basis).in_D is False

    def test_origin(self, quadrant_basis):
        assert d_membership((0, 0), quadrant_basis).in_D is False

    def test_d_density(self, quadrant, quadrant_basis):
        (row,) = d_density(quadrant, quadrant_basis, [2])
        # exactly the points with both coordinates >= 1
        assert (row.count, row.total) == (4, 9)
        assert row.fraction == Fraction(4, 9)


class TestLPRounding:
    """Test the LP-rounding decomposition."""

    def test_quadrant(self, quadrant_basis):
        d, report = decompose_lp_rounding((5, 7), quadrant_basis)
        assert d.as_pairs() == [((0, 1), 7), ((1, 0), 5)]
        assert d.certified_bound == 3
        assert report.in_D is None
        assert verify_decomposition(d, quadrant_basis).valid

    def test_exact_membership(self, quadrant_basis):
        _, report = decompose_lp_rounding((5, 7), quadrant_basis, exact_membership=True)
        assert report.in_D is True

    def test_skew(self, skew_basis):
        d, _ = decompose_lp_rounding((7, -3), skew_basis)
        assert d.length <= 3
        assert d.strategy in (Strategy.LP_ROUNDING, Strategy.LP_FALLBACK)
        assert verify_decomposition(d, skew_basis).valid

    def test_wedge_points(self, wedge_basis):
        for b in [(3, 1), (4, 5), (7, 7), (9, 2)]:
            d, _ = decompose_lp_rounding(b, wedge_basis)
            assert d.total() == b
            assert d.length <= 3
            assert verify_decomposition(d, wedge_basis).valid

    def test_zero(self, quadrant_basis):
        d, _ = decompose_lp_rounding((0, 0), quadrant_basis)
        assert d.length == 0


class TestFaceDescent:
    """Test face descent decompositions."""

    def test_guarantee(self, skew_matrix, delta2_matrix):
        assert descent_guarantee(IntMatrix.identity(3)) == 3
        assert descent_guarantee(delta2_matrix) == 2
        assert descent_guarantee(skew_matrix) == 2
        assert descent_guarantee(IntMatrix.diagonal([1, 1, 1, 1, 5])) == 7
        assert descent_guarantee(IntMatrix(((1, 0), (0, 1), (1, 3)))) is None

    def test_delta2_descent(self, delta2_matrix):
        d, trace = decompose_face_descent(delta2_matrix, (3, -1))
        assert [s.action for s in trace.steps] == ["interior-step", "face-projection", "interior-step"]
        assert d.as_pairs() == [((1, 0), 1), ((2, -1), 1)]
        assert not trace.stuck

    def test_boundary_point_projects_first(self):
        d, trace = decompose_face_descent(IntMatrix.identity(2), (0, 3))
        assert trace.steps[0].action == "face-projection"
        assert d.as_pairs() == [((0, 1), 3)]

    def test_stuck_closed_by_oracle(self, skew_matrix):
        d, trace = decompose_face_descent(skew_matrix, (7, -3))
        assert [s.action for s in trace.steps] == ["stuck", "terminal-oracle"]
        assert trace.stuck_dimension == 2
        assert d.certified_bound == 2
        assert d.total() == (7, -3)
        assert d.length == 2

    def test_strict_raises(self, skew_matrix):
        with pytest.raises(StuckError) as info:
            decompose_face_descent(skew_matrix, (7, -3), strict=True)
        assert info.value.trace.stuck

    def test_outside(self, delta2_matrix):
        with pytest.raises(OutsideConeError):
            decompose_face_descent(delta2_matrix, (-1, 0))

    @staticmethod
    def tight_rows(A, x):
        return {i for i, v in enumerate(A.apply(x)) if v == 0}

    def delta2_runs(self, count=8):
        for index in range(count):
            rng = instance_rng(17, index)
            A = random_delta2_matrix(rng, 2 + index % 3)
            z = random_cone_point(rng, ConeH(A))
            yield A, decompose_face_descent(A, z)[1]

    def test_element_steps_tighten_rows(self, delta2_matrix):
        """Each subtraction keeps the tight rows and makes at least one more tight."""
        runs = [(delta2_matrix, decompose_face_descent(delta2_matrix, (3, -1))[1]), *self.delta2_runs()]
        for A, trace in runs:
            for step in trace.steps:
                if step.element is None:
                    continue
                after = tuple(p - step.multiplicity * e for p, e in zip(step.point, step.element))
                assert self.tight_rows(A, step.point) < self.tight_rows(A, after)

    def test_projection_dimensions_decrease(self):
        for A, trace in self.delta2_runs():
            dims = trace.projection_dimensions()
            assert all(a > b for a, b in zip(dims, dims[1:]))
            assert all(d < A.ncols for d in dims)


class TestVerifyDecomposition:
    """Test the decomposition checker."""

    def test_detects_problems(self, quadrant_basis):
        bad = Decomposition.from_pairs((2, 2), [((1, 1), 2)], Strategy.ORACLE, certified_bound=0)
        check = verify_decomposition(bad, quadrant_basis)
        assert not check.valid
        assert "foreign element (1, 1)" in check.messages
        assert any("certified bound" in m for m in check.messages)

    def test_sum_mismatch(self, quadrant_basis):
        bad = Decomposition.from_pairs((2, 2), [((1, 0), 1)], Strategy.ORACLE)
        assert verify_decomposition(bad, quadrant_basis).messages == ["sum mismatch"]
