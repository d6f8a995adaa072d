"""Bindings layer: zero-copy boundary arrays and the bound kernel set."""

import numpy as np
import pytest

import tenkern
from tenkern import backend
from tenkern.errors import ConfigError, DimensionError

from tenhost import (
    BoundKernelSet,
    as_boundary_array,
    bound_kernels,
)

from conftest import requires_compiled


class TestAsBoundaryArray:
    def test_c_contiguous_float64_passes_through_unchanged(self):
        x = np.arange(8, dtype=np.float64)
        out = as_boundary_array(x)
        assert out is x

    def test_2d_c_contiguous_passes_through(self):
        a = np.ones((3, 4), dtype=np.float64)
        assert as_boundary_array(a, ndim=2) is a

    def test_fortran_order_is_copied_to_c_order(self):
        a = np.asfortranarray(np.arange(12, dtype=np.float64).reshape(3, 4))
        out = as_boundary_array(a, ndim=2)
        assert out is not a
        assert out.flags["C_CONTIGUOUS"]
        assert np.array_equal(out, a)

    def test_strided_view_is_copied(self):
        base = np.arange(10, dtype=np.float64)
        view = base[::2]
        out = as_boundary_array(view)
        assert out is not view
        assert out.flags["C_CONTIGUOUS"]
        assert np.array_equal(out, view)

    def test_wrong_dtype_is_converted(self):
        x = np.arange(5, dtype=np.int32)
        out = as_boundary_array(x)
        assert out.dtype == np.float64
        assert np.array_equal(out, x.astype(np.float64))

    def test_list_input_becomes_contiguous_array(self):
        out = as_boundary_array([1.0, 2.0, 3.0])
        assert isinstance(out, np.ndarray)
        assert out.dtype == np.float64
        assert out.flags["C_CONTIGUOUS"]

    def test_int64_dtype_respected(self):
        subs = np.array([[0, 1], [1, 0]], dtype=np.int64)
        assert as_boundary_array(subs, dtype=np.int64, ndim=2) is subs

    def test_ndim_mismatch_raises(self):
        with pytest.raises(DimensionError):
            as_boundary_array(np.ones((2, 2)), ndim=1)


@requires_compiled
class TestBoundKernelSet:
    def test_dot_bitwise_equal_to_public_native(self, rng):
        bks = bound_kernels()
        for _ in range(20):
            n = int(rng.integers(1, 200))
            x = rng.random(n)
            y = rng.random(n)
            got = bks.dot(x, y)
            want = tenkern.dot(x, y)
            assert isinstance(got, float)
            assert np.float64(got).tobytes() == np.float64(want).tobytes()

    def test_matvec_bitwise_equal_to_public_native(self, rng):
        bks = bound_kernels()
        for _ in range(20):
            m = int(rng.integers(1, 40))
            n = int(rng.integers(1, 40))
            a = rng.random((m, n))
            x = rng.random(n)
            got = bks.matvec(a, x)
            want = tenkern.matvec(a, x)
            assert got.tobytes() == np.asarray(want).tobytes()

    def test_ttv_matches_public_native_triple(self, rng):
        bks = bound_kernels()
        t = tenkern.gen_sparse3(tenkern.GenSpec(7, "sparse3", (8, 9, 10), 0.05))
        for k in range(3):
            x = rng.random(t.shape[k])
            raw = bks.ttv(t.subs, t.vals, t.shape, x, k)
            want = tenkern.ttv(t, x, k)
            assert raw.new_subs.tobytes() == want.new_subs.tobytes()
            assert raw.new_vals.tobytes() == want.new_vals.tobytes()
            assert tuple(raw.new_shape) == tuple(want.new_shape)

    def test_ttv_accepts_non_int64_subs(self):
        bks = bound_kernels()
        subs = np.array([[0, 0, 0], [1, 1, 1]], dtype=np.int32)
        vals = np.array([2.0, 3.0])
        raw = bks.ttv(subs, vals, (2, 2, 2), np.array([1.0, 10.0]), 0)
        assert raw.new_subs.dtype == np.int64
        assert raw.new_vals.tolist() == [2.0, 30.0]

    def test_release_gil_variant_is_bitwise_identical(self, rng):
        plain = bound_kernels()
        nogil = bound_kernels(release_gil=True)
        x = rng.random(500)
        y = rng.random(500)
        a = rng.random((30, 40))
        v = rng.random(40)
        assert np.float64(plain.dot(x, y)).tobytes() == np.float64(
            nogil.dot(x, y)
        ).tobytes()
        assert plain.matvec(a, v).tobytes() == nogil.matvec(a, v).tobytes()
        t = tenkern.gen_sparse3(tenkern.GenSpec(11, "sparse3", (6, 6, 6), 0.1))
        w = rng.random(6)
        r1 = plain.ttv(t.subs, t.vals, t.shape, w, 1)
        r2 = nogil.ttv(t.subs, t.vals, t.shape, w, 1)
        assert r1.new_subs.tobytes() == r2.new_subs.tobytes()
        assert r1.new_vals.tobytes() == r2.new_vals.tobytes()

    def test_explicit_kernel_module_is_used(self):
        bks = BoundKernelSet(tenkern.kernels("compiled"))
        assert bks.dot([1.0, 2.0], [3.0, 4.0]) == 11.0


class TestMissingBackend:
    def test_bound_kernels_raises_config_error(self, monkeypatch):
        monkeypatch.setattr(backend, "_compiled", None)
        with pytest.raises(ConfigError):
            bound_kernels()

    def test_native_via_ffi_reports_unavailable(self, monkeypatch):
        monkeypatch.setattr(backend, "_compiled", None)
        assert "native-via-ffi" not in tenkern.available_implementations("dot")
        entry = tenkern.implementations()["native-via-ffi"]
        assert entry.unavailable_reason

    @requires_compiled
    def test_native_via_ffi_listed_when_backend_present(self):
        for experiment in tenkern.EXPERIMENTS:
            assert "native-via-ffi" in tenkern.available_implementations(experiment)
