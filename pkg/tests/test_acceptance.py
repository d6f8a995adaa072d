"""Acceptance suite: one test per headline guarantee.

Every test enforces its stated tolerance and runtime budget against
independent oracles (see _oracles.py) and prints one pass line. The
suite exercises only this package; no companion packages are needed.
"""

import time

import numpy as np

from _oracles import oracle_dot, oracle_matvec, oracle_ttv, ttv_tolerance
from tenkern import backend, cli, sparse
from tenkern.csvio import read_csv, write_csv
from tenkern.sparse import SparseCooTensor, ttv
from tenkern.synth import GenSpec, gen_sparse3


def test_ttv_oracle_equivalence_50_tensors():
    rng = np.random.default_rng(515151)
    start = time.perf_counter()
    for case in range(50):
        dims = tuple(int(d) for d in rng.integers(4, 21, size=3))
        t = gen_sparse3(GenSpec(int(rng.integers(2**32)), "sparse3", dims, 0.05))
        for k in range(3):
            x = rng.random(dims[k])
            res = ttv(t, x, k)
            o_subs, o_vals, o_shape = oracle_ttv(t.subs, t.vals, t.shape, x, k)
            assert np.array_equal(res.new_subs, o_subs), (
                f"index set mismatch: dims={dims} k={k}"
            )
            assert res.new_shape == o_shape
            tol = ttv_tolerance(t.vals, x, dims[k])
            assert res.new_vals.shape == o_vals.shape
            if res.new_vals.size:
                worst = float(np.max(np.abs(res.new_vals - o_vals)))
                assert worst <= tol, f"values off by {worst} > {tol}"
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"oracle sweep took {elapsed:.2f}s, budget 10s"
    print(f"PASS ttv oracle equivalence (50 tensors x 3 modes, {elapsed:.2f}s)")


def test_dense_kernels_bitwise_oracle_100_operands():
    rng = np.random.default_rng(626262)
    start = time.perf_counter()
    for case in range(100):
        rows = int(rng.integers(1, 65))
        cols = int(rng.integers(1, 65))
        a = rng.random((rows, cols))
        x = rng.random(cols)
        y = rng.random(cols)
        got_mv = backend.kernels().matvec(a, x)
        assert np.asarray(got_mv).tobytes() == oracle_matvec(a, x).tobytes()
        got_dot = backend.kernels().dot(x, y)
        assert np.float64(got_dot).tobytes() == np.float64(oracle_dot(x, y)).tobytes()
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"dense oracle sweep took {elapsed:.2f}s, budget 5s"
    print(f"PASS dense kernels bitwise vs naive oracles (100 operands, {elapsed:.2f}s)")


def _assert_canonical(subs, vals, shape):
    subs = np.asarray(subs)
    vals = np.asarray(vals)
    assert subs.shape == (vals.shape[0], len(shape))
    assert not (vals == 0.0).any(), "stored zero"
    if subs.shape[0]:
        assert subs.min() >= 0, "negative index"
        assert (subs < np.asarray(shape, dtype=np.int64)).all(), "index out of bounds"
    assert sparse._rows_strictly_increasing(subs), "rows not sorted-unique"


def test_canonical_invariants_1000_tensors_and_ttv_outputs():
    rng = np.random.default_rng(737373)
    start = time.perf_counter()
    for case in range(1000):
        dims = tuple(int(d) for d in rng.integers(4, 15, size=3))
        density = float(rng.uniform(0.02, 0.3))
        t = gen_sparse3(GenSpec(int(rng.integers(2**32)), "sparse3", dims, density))
        _assert_canonical(t.subs, t.vals, t.shape)
        k = int(rng.integers(3))
        res = ttv(t, rng.random(dims[k]), k)
        _assert_canonical(res.new_subs, res.new_vals, res.new_shape)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"invariant sweep took {elapsed:.2f}s, budget 30s"
    print(f"PASS canonical invariants (1000 tensors + ttv outputs, {elapsed:.2f}s)")


def test_gen_sparse3_exact_density_protocol():
    t = gen_sparse3(GenSpec(424242, "sparse3", (100, 100, 100), 0.01))
    assert t.nnz == 10000, f"expected exactly 10000 nonzeros, got {t.nnz}"
    assert (t.vals >= 0.0).all() and (t.vals < 1.0).all()
    print("PASS gen_sparse3 (100,100,100) density 0.01 -> exactly 10000 in [0,1)")


def test_bench_schedule_31_records_per_implementation(tmp_path):
    out = tmp_path / "dot.csv"
    code = cli.main(
        [
            "bench",
            "--experiment",
            "dot",
            "--sizes",
            "1000",
            "--trials",
            "30",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    records = read_csv(out)
    by_impl = {}
    for r in records:
        by_impl.setdefault(r.implementation, []).append(r)
    assert by_impl, "no implementations ran"
    for impl, recs in by_impl.items():
        assert len(recs) == 31, f"{impl}: {len(recs)} records, expected 31"
        warm = [r for r in recs if r.is_warmup]
        assert len(warm) == 1, f"{impl}: warm-up not flagged exactly once"
        assert sorted(r.trial for r in recs if not r.is_warmup) == list(range(1, 31))
    out2 = tmp_path / "again.csv"
    write_csv(records, out2)
    assert out.read_bytes() == out2.read_bytes(), "CSV round-trip not lossless"
    impls = ", ".join(sorted(by_impl))
    print(f"PASS bench schedule 31 records per implementation ({impls})")


def test_zero_elimination_canceling_example():
    t = SparseCooTensor([[0, 0, 0], [0, 2, 0]], [1.0, -1.0], (3, 3, 3))
    res = ttv(t, [1.0, 1.0, 1.0], 1)
    assert res.new_vals.shape[0] == 0, "canceling group not eliminated"
    assert res.new_subs.shape == (0, 2)
    assert res.new_shape == (3, 3)
    print("PASS zero-elimination: canceling ttv example yields nnz_out == 0")
