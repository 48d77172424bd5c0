import pytest

from hilbert_caratheodory.exactlin import IntMatrix
from hilbert_caratheodory.experiments import instance_rng, random_small_cone
from hilbert_caratheodory.geometry import ConeH, cone_product, zero_cone
from hilbert_caratheodory.hilbert import (
    basis_from_elements,
    fundamental_points,
    hilbert_basis,
    is_irreducible,
    pigeonhole_point,
    refine_to_support_minimal,
    support_minimal_element,
    triangulate,
    verify_hilbert_basis,
)
from hilbert_caratheodory.utils.error_handling import (
    EmptyParallelepipedError,
    NotPointedError,
    OutsideConeError,
    OutsideProjectionError,
    PigeonholePreconditionError,
    ShapeError,
)


class TestHilbertBasis:
    """Test Hilbert basis computation."""

    def test_quadrant(self, quadrant_basis):
        assert quadrant_basis.elements == ((0, 1), (1, 0))
        assert quadrant_basis.delta_H == 1

    def test_skew_cone(self, skew_basis):
        assert skew_basis.elements == ((0, 1), (1, 0), (2, -1), (3, -2))
        assert skew_basis.delta_H == 3

    def test_wedge(self, wedge_basis):
        assert wedge_basis.elements == ((1, 0), (1, 1), (1, 2))
        assert wedge_basis.delta_H == 2

    def test_product_cone(self, quadrant):
        C = cone_product(quadrant, ConeH(IntMatrix(((1,),))))
        assert hilbert_basis(C).elements == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_zero_cone(self):
        HB = hilbert_basis(zero_cone(3))
        assert HB.elements == ()
        assert HB.dimension == 0

    def test_lower_dimensional_cone(self):
        C = ConeH(IntMatrix(((0, 1), (0, -1), (1, 0))))
        assert hilbert_basis(C).elements == ((1, 0),)

    def test_not_pointed(self):
        with pytest.raises(NotPointedError):
            hilbert_basis(ConeH(IntMatrix(((1, 0),))))

    def test_elements_are_irreducible(self, skew_basis, skew_cone):
        for h in skew_basis:
            assert is_irreducible(h, skew_cone)

    def test_row_order_and_redundant_rows(self, skew_basis):
        """Reordering rows or adding implied ones leaves the basis unchanged."""
        shuffled = ConeH(IntMatrix(((2, 3), (1, 0))))
        padded = ConeH(IntMatrix(((2, 3), (3, 3), (1, 0), (4, 6))))
        assert hilbert_basis(shuffled).elements == skew_basis.elements
        assert hilbert_basis(padded).elements == skew_basis.elements

    def test_row_permutations_of_random_cones(self):
        for index in range(6):
            rng = instance_rng(31, index)
            C = random_small_cone(rng, 2 + index % 2, 4)
            order = rng.permutation(C.m).tolist()
            redundant = tuple(a + b for a, b in zip(C.A.rows[0], C.A.rows[-1]))
            other = ConeH(IntMatrix(C.A.select_rows(order).rows + (redundant,)))
            assert hilbert_basis(other).elements == hilbert_basis(C).elements


class TestIrreducibility:
    """Test the irreducibility check."""

    def test_reducible_point(self, quadrant):
        assert not is_irreducible((2, 0), quadrant)
        assert not is_irreducible((1, 1), quadrant)
        assert is_irreducible((1, 0), quadrant)

    def test_with_candidates(self, skew_cone, skew_basis):
        assert not is_irreducible((3, -1), skew_cone, skew_basis.elements)
        assert is_irreducible((3, -2), skew_cone, skew_basis.elements)

    def test_outside_cone(self, quadrant):
        with pytest.raises(OutsideConeError):
            is_irreducible((-1, 0), quadrant)


class TestFundamentalDomain:
    """Test parallelepiped points and the triangulation."""

    def test_fundamental_points(self):
        assert fundamental_points([(1, 0), (1, 2)]) == [(0, 0), (1, 1)]
        assert len(fundamental_points([(1, 0), (3, -2)])) == 2

    def test_triangulate_simplicial(self, quadrant):
        assert triangulate(quadrant.rays) == [(0, 1)]

    def test_triangulate_square_cone(self):
        rays = [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
        simplices = triangulate(rays)
        assert len(simplices) == 2
        assert all(len(s) == 3 for s in simplices)


class TestVerification:
    """Test certification of claimed bases."""

    def test_true_basis_passes(self, quadrant_basis):
        report = verify_hilbert_basis(quadrant_basis, 2)
        assert report.passed
        assert report.checked_points == 9

    def test_missing_element(self, quadrant):
        HB = basis_from_elements(quadrant, [(1, 0)])
        assert HB.delta_H is None
        report = verify_hilbert_basis(HB, 2)
        assert not report.passed
        assert (0, 1) in report.generation_failures

    def test_reducible_element(self, quadrant):
        report = verify_hilbert_basis(basis_from_elements(quadrant, [(1, 0), (0, 1), (1, 1)]), 2)
        assert report.irreducibility_failures == [(1, 1)]
        assert report.generation_failures == []

    def test_element_outside_cone(self, quadrant):
        report = verify_hilbert_basis(basis_from_elements(quadrant, [(-1, 0), (0, 1), (1, 0)]), 1)
        assert report.irreducibility_failures == [(-1, 0)]
        assert report.generation_failures == []


class TestSpecialElements:
    """Test elements found inside the unit parallelepiped."""

    def test_support_minimal_identity(self):
        h, supp = support_minimal_element(IntMatrix.identity(2))
        assert h == (1, 0)
        assert supp == (0,)

    def test_support_minimal_empty(self, skew_matrix):
        with pytest.raises(EmptyParallelepipedError):
            support_minimal_element(skew_matrix)

    def test_refine(self):
        A = IntMatrix.identity(2)
        assert refine_to_support_minimal(A, (1, 1)) == (1, 0)
        with pytest.raises(OutsideProjectionError):
            refine_to_support_minimal(A, (2, 0))

    def test_pigeonhole(self):
        A = IntMatrix(((1, 1), (-1, 1)))
        h = pigeonhole_point(A)
        assert h == (0, 1)
        assert A.apply(h) == (1, 1)

    def test_pigeonhole_needs_small_determinant(self, skew_matrix):
        with pytest.raises(PigeonholePreconditionError):
            pigeonhole_point(skew_matrix)

    def test_pigeonhole_square_only(self):
        with pytest.raises(ShapeError):
            pigeonhole_point(IntMatrix(((1, 0), (0, 1), (1, 1))))
