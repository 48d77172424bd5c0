from hilbert_caratheodory.exactlin import delta_modulus, det
from hilbert_caratheodory.experiments import (
    instance_rng,
    random_cone_point,
    random_delta2_matrix,
    random_face_point,
    random_simplicial_matrix,
    random_small_cone,
    random_unimodular,
)


class TestInstances:
    """Test the seeded instance generators."""

    def test_rng_is_reproducible(self):
        first = instance_rng(7, 3).integers(0, 1000, size=5).tolist()
        second = instance_rng(7, 3).integers(0, 1000, size=5).tolist()
        other = instance_rng(7, 4).integers(0, 1000, size=5).tolist()
        assert first == second
        assert first != other

    def test_unimodular(self):
        for index in range(10):
            assert abs(det(random_unimodular(instance_rng(1, index), 4))) == 1

    def test_delta2_matrix(self):
        for index in range(10):
            A = random_delta2_matrix(instance_rng(2, index), 3)
            assert A.ncols == 3
            assert delta_modulus(A) <= 2

    def test_simplicial_matrix(self):
        for delta in range(1, 6):
            A = random_simplicial_matrix(instance_rng(3, delta), 5, delta)
            assert abs(det(A)) == delta

    def test_small_cone(self):
        for index in range(5):
            C = random_small_cone(instance_rng(4, index), 3, 4)
            assert C.is_full_dimensional
            assert C.delta <= 4

    def test_cone_point(self, skew_cone):
        for index in range(10):
            z = random_cone_point(instance_rng(5, index), skew_cone)
            assert any(z)
            assert skew_cone.contains(z)
            assert max(abs(v) for v in z) <= 50

    def test_face_point(self):
        C = random_small_cone(instance_rng(6, 0), 3, 4)
        tight, v = random_face_point(instance_rng(6, 1), C)
        assert C.contains(v)
        assert tight == C.membership(v).tight
