from itertools import product

import pytest

from hilbert_caratheodory.exactlin import IntMatrix, lp_max_sum
from hilbert_caratheodory.experiments import instance_rng, random_small_cone
from hilbert_caratheodory.geometry import (
    BOUNDARY,
    INTERIOR,
    OUTSIDE,
    ConeH,
    Polytope,
    box_polytope,
    cone_face_projection,
    cone_product,
    face_projection,
    facet_cone,
    facet_rows,
    lattice_points,
    lift_point,
    nonzero_lattice_points,
    project_point,
    simplicial_cone,
    unit_parallelepiped,
    zero_cone,
)
from hilbert_caratheodory.utils.error_handling import (
    DimensionMismatchError,
    FaceDimensionError,
    InfeasibleError,
    LatticeFreeError,
    NotPointedError,
    OutsideProjectionError,
    UnboundedPolytopeError,
)


class TestCone:
    """Test H-described cones."""

    def test_rays_and_delta(self, skew_cone):
        assert skew_cone.rays == ((0, 1), (3, -2))
        assert skew_cone.delta == 3
        assert skew_cone.dimension == 2
        assert skew_cone.is_simplicial

    def test_membership(self, quadrant):
        assert quadrant.membership((1, 1)).status == INTERIOR
        boundary = quadrant.membership((0, 3))
        assert boundary.status == BOUNDARY
        assert boundary.tight == (0,)
        assert quadrant.membership((-1, 0)).status == OUTSIDE
        assert not quadrant.contains((-1, 0))

    def test_membership_wrong_length(self, quadrant):
        with pytest.raises(DimensionMismatchError):
            quadrant.membership((1, 2, 3))

    def test_not_pointed(self):
        C = ConeH(IntMatrix(((1, 0),)))
        assert not C.is_pointed
        with pytest.raises(NotPointedError):
            C.delta

    def test_zero_cone(self):
        C = zero_cone(2)
        assert C.is_pointed
        assert C.dimension == 0
        assert C.rays == ()

    def test_simplicial_cone(self, wedge):
        assert wedge.A.rows == ((2, -1), (0, 1))
        assert wedge.rays == ((1, 0), (1, 2))

    def test_cone_product(self, quadrant):
        C = cone_product(quadrant, ConeH(IntMatrix(((1,),))))
        assert C.n == 3
        assert C.rays == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_facets_drop_redundant_rows(self):
        C = ConeH(IntMatrix(((1, 0), (0, 1), (2, 0), (1, 1))))
        assert facet_rows(C) == (0, 1)
        assert facet_cone(C).A.rows == ((1, 0), (0, 1))

    def test_lower_dimensional_frame(self):
        C = ConeH(IntMatrix(((0, 1), (0, -1), (1, 0))))
        assert C.dimension == 1
        assert C.implicit_equalities() == (0, 1)
        frame = C.intrinsic_frame
        assert frame.dimension == 1
        assert frame.to_intrinsic(frame.from_intrinsic((2,))) == (2,)


class TestPolytope:
    """Test polyhedra and lattice point enumeration."""

    def test_unit_parallelepiped_of_identity(self):
        points = lattice_points(unit_parallelepiped(IntMatrix.identity(2)))
        assert points == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_unit_parallelepiped_without_interior_points(self, skew_matrix):
        """P_1 of the Δ = 3 example holds only the origin."""
        assert lattice_points(unit_parallelepiped(skew_matrix)) == [(0, 0)]
        assert nonzero_lattice_points(unit_parallelepiped(skew_matrix)) == []

    def test_box_polytope(self, quadrant):
        points = lattice_points(box_polytope(quadrant, 2))
        assert len(points) == 9
        assert points == sorted(points)

    def test_bounds_from_lps(self):
        # triangle x >= 0, y >= 0, x + y <= 2
        P = Polytope(IntMatrix(((-1, 0), (0, -1), (1, 1))), (0, 0, 2))
        assert P.is_bounded()
        assert len(lattice_points(P)) == 6

    def test_empty_polytope(self):
        P = Polytope(IntMatrix(((1,), (-1,))), (0, -1))
        assert lattice_points(P) == []

    def test_unbounded_polytope(self):
        P = Polytope(IntMatrix(((-1, 0), (0, -1))), (0, 0))
        assert not P.is_bounded()
        with pytest.raises(UnboundedPolytopeError):
            lattice_points(P)


class TestFaceProjection:
    """Test unimodular face projections."""

    def test_cone_face_round_trip(self, delta2_matrix):
        C = ConeH(delta2_matrix)
        fp, projected = cone_face_projection(C, [1])
        assert fp.projected_dimension == 1
        assert lift_point(fp, (1,)) == (2, -1)
        assert project_point(fp, (2, -1)) == (1,)
        assert projected is not None and projected.contains((1,))

    def test_project_point_off_face(self, delta2_matrix):
        fp, _ = cone_face_projection(ConeH(delta2_matrix), [1])
        with pytest.raises(OutsideProjectionError):
            project_point(fp, (1, 0))

    def test_apex_face(self, quadrant):
        fp, projected = cone_face_projection(quadrant, [0, 1])
        assert fp.k == 2
        assert projected is None

    def test_empty_face(self):
        A = IntMatrix(((1,), (-1,)))
        with pytest.raises(FaceDimensionError):
            face_projection(A, (1, 0), [0, 1])

    def test_lattice_free_face(self):
        A = IntMatrix(((2,), (-1,)))
        with pytest.raises(LatticeFreeError):
            face_projection(A, (1, 0), [0])

    def test_zero_row_face_is_the_whole_cone(self):
        C = ConeH(IntMatrix(((2, -2), (0, 0), (-2, 1))))
        fp, projected = cone_face_projection(C, (1,), (-2, -3))
        assert fp.k == 0
        assert fp.requested == (1,)
        assert projected is not None and projected.contains((-2, -3))
        assert lift_point(fp, project_point(fp, (-2, -3))) == (-2, -3)

    def test_zero_row_face_off_the_hyperplane(self):
        A = IntMatrix(((0,), (1,)))
        with pytest.raises(FaceDimensionError):
            face_projection(A, (1, 2), [0])


def random_cones(seed, count=6):
    return [random_small_cone(instance_rng(seed, i), n, 4) for i, n in enumerate([2, 3] * (count // 2))]


class TestConeInvariants:
    """Check cone descriptions against independent computations."""

    def test_simplicial_rays_are_sorted(self, skew_cone, delta2_matrix):
        assert skew_cone.rays == ((0, 1), (3, -2))
        assert ConeH(delta2_matrix).rays == ((0, 1), (2, -1))
        for C in random_cones(21):
            assert list(C.rays) == sorted(C.rays)

    def test_rays_generate_the_cone(self):
        """x is in C exactly when it is a non-negative combination of the rays."""
        for index, C in enumerate(random_cones(22)):
            R = IntMatrix.from_columns(C.rays)
            rng = instance_rng(23, index)
            for x in rng.integers(-10, 11, size=(30, C.n)).tolist():
                try:
                    lp_max_sum(R, x)
                    generated = True
                except InfeasibleError:
                    generated = False
                assert generated == C.contains(x), (C.A, x)

    def test_lattice_points_match_exhaustive_scan(self):
        for C in random_cones(24):
            scan = [x for x in product(range(-3, 4), repeat=C.n) if C.contains(x)]
            assert lattice_points(box_polytope(C, 3)) == sorted(scan)

    def test_lattice_points_of_a_triangle(self):
        P = Polytope(IntMatrix(((-1, 0), (0, -1), (2, 3))), (0, 0, 12))
        scan = [x for x in product(range(-1, 8), repeat=2) if P.contains(x)]
        assert lattice_points(P) == sorted(scan)

    def test_product_points_are_pairs(self, quadrant, skew_cone):
        C = cone_product(quadrant, skew_cone)
        pairs = sorted(
            a + b
            for a in lattice_points(box_polytope(quadrant, 2))
            for b in lattice_points(box_polytope(skew_cone, 2))
        )
        assert lattice_points(box_polytope(C, 2)) == pairs
