"""Generator contracts: GenSpec validation, determinism, exact density."""

import numpy as np
import pytest

from tenkern.errors import GenerationError
from tenkern.synth import GENERATOR, GenSpec, gen_matrix, gen_sparse3, gen_vector


class TestGenSpecValidation:
    def test_unknown_kind(self):
        with pytest.raises(GenerationError):
            GenSpec(1, "cube", (2, 2, 2), 0.5)

    def test_seed_range(self):
        with pytest.raises(GenerationError):
            GenSpec(-1, "vector", (5,))
        with pytest.raises(GenerationError):
            GenSpec(2**64, "vector", (5,))
        assert GenSpec(2**64 - 1, "vector", (5,)).seed == 2**64 - 1

    def test_dims_arity_must_match_kind(self):
        with pytest.raises(GenerationError):
            GenSpec(1, "vector", (2, 3))
        with pytest.raises(GenerationError):
            GenSpec(1, "matrix", (2,))
        with pytest.raises(GenerationError):
            GenSpec(1, "sparse3", (2, 2), 0.5)

    def test_dims_positive(self):
        with pytest.raises(GenerationError):
            GenSpec(1, "vector", (0,))
        with pytest.raises(GenerationError):
            GenSpec(1, "sparse3", (4, -1, 4), 0.5)

    def test_density_rules(self):
        with pytest.raises(GenerationError):
            GenSpec(1, "sparse3", (4, 4, 4))  # missing
        with pytest.raises(GenerationError):
            GenSpec(1, "sparse3", (4, 4, 4), 0.0)
        with pytest.raises(GenerationError):
            GenSpec(1, "sparse3", (4, 4, 4), 1.5)
        with pytest.raises(GenerationError):
            GenSpec(1, "vector", (4,), 0.5)  # density on a dense kind

    def test_degenerate_density_rejected(self):
        with pytest.raises(GenerationError):
            GenSpec(1, "sparse3", (2, 2, 2), 0.05)  # 0.4 expected nonzeros

    def test_kind_guards_on_generators(self):
        vec_spec = GenSpec(1, "vector", (5,))
        with pytest.raises(GenerationError):
            gen_matrix(vec_spec)
        with pytest.raises(GenerationError):
            gen_sparse3(vec_spec)
        with pytest.raises(GenerationError):
            gen_vector(GenSpec(1, "matrix", (2, 2)))


class TestGenVector:
    def test_length_and_range(self):
        v = gen_vector(GenSpec(7, "vector", (5,)))
        assert v.shape == (5,) and v.dtype == np.float64
        assert (v >= 0).all() and (v < 1).all()

    def test_deterministic(self):
        spec = GenSpec(7, "vector", (100,))
        assert gen_vector(spec).tobytes() == gen_vector(spec).tobytes()

    def test_large_sample_mean(self):
        v = gen_vector(GenSpec(7, "vector", (10**6,)))
        assert abs(float(v.mean()) - 0.5) <= 0.002

    def test_no_nan_inf(self):
        v = gen_vector(GenSpec(3, "vector", (1000,)))
        assert np.isfinite(v).all()


class TestGenMatrix:
    def test_shape_and_range(self):
        m = gen_matrix(GenSpec(7, "matrix", (2, 3)))
        assert m.shape == (2, 3)
        assert (m >= 0).all() and (m < 1).all()

    def test_deterministic(self):
        spec = GenSpec(11, "matrix", (10, 10))
        assert np.array_equal(gen_matrix(spec), gen_matrix(spec))

    def test_distinct_seeds_differ(self):
        for seed in range(100):
            a = gen_matrix(GenSpec(seed, "matrix", (4, 4)))
            b = gen_matrix(GenSpec(seed + 1000, "matrix", (4, 4)))
            assert (a != b).any()


class TestGenSparse3:
    def test_exact_nnz(self):
        t = gen_sparse3(GenSpec(5, "sparse3", (20, 20, 20), 0.05))
        assert t.nnz == 400

    def test_saturation(self):
        t = gen_sparse3(GenSpec(5, "sparse3", (3, 3, 3), 1.0))
        assert t.nnz == 27
        expected = np.array(
            [[i, j, k] for i in range(3) for j in range(3) for k in range(3)],
            dtype=np.int64,
        )
        assert np.array_equal(t.subs, expected)

    def test_deterministic(self):
        spec = GenSpec(9, "sparse3", (15, 15, 15), 0.1)
        a, b = gen_sparse3(spec), gen_sparse3(spec)
        assert a == b

    def test_values_in_range_no_zeros(self):
        t = gen_sparse3(GenSpec(9, "sparse3", (10, 10, 10), 0.5))
        assert (t.vals > 0).all() and (t.vals < 1).all()
        assert np.isfinite(t.vals).all()

    def test_rounding_of_nnz(self):
        # 0.011 * 1000 = 11 exactly; 0.0149 * 1000 rounds to 15
        assert gen_sparse3(GenSpec(1, "sparse3", (10, 10, 10), 0.011)).nnz == 11
        assert gen_sparse3(GenSpec(1, "sparse3", (10, 10, 10), 0.0149)).nnz == 15

    def test_generator_name_pinned(self):
        assert "PCG64" in GENERATOR
