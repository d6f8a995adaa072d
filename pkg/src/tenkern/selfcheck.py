"""Built-in verification suites behind the ``verify`` CLI subcommand.

Each suite checks one contract against an independent reference (pinned
hand-worked values, a dense numpy contraction oracle, or a platform
primitive) and reports a single pass/fail line. Suites are sized to run
in a few seconds total.
"""

import time

import numpy as np

from tenkern import backend, bench, dense, sparse
from tenkern.synth import GenSpec, gen_sparse3, gen_vector

__all__ = ["SUITES", "run_all", "dense_ttv_oracle", "ttv_value_tolerance"]

_CHECK_SEED = 20260815


def dense_ttv_oracle(t: sparse.SparseCooTensor, x, k: int) -> sparse.SparseCooTensor:
    """Mode-k TTV computed by densify, numpy contraction, re-sparsify."""
    dense_t = sparse.densify(t)
    contracted = np.tensordot(dense_t, np.asarray(x, dtype=np.float64), axes=([k], [0]))
    return sparse.SparseCooTensor.from_dense(contracted)


def ttv_value_tolerance(t: sparse.SparseCooTensor, x, k: int) -> float:
    """Per-entry absolute tolerance scaled by the worst-case group sum."""
    if t.nnz == 0:
        return 1e-12
    max_val = float(np.max(np.abs(t.vals)))
    max_x = float(np.max(np.abs(x))) if len(x) else 0.0
    return 1e-12 * (1.0 + max_val * max_x * t.shape[k])


def _suite_dense_pinned():
    got = dense.dot([1.0, 2.0, 3.0], [4.0, 5.0, 6.0])
    if got != 32.0:
        return f"dot pinned example: expected 32.0, got {got!r}"
    mv = dense.matvec([[1.0, 2.0], [3.0, 4.0]], [1.0, 1.0])
    if not np.array_equal(mv, np.array([3.0, 7.0])):
        return f"matvec pinned example: expected [3, 7], got {mv!r}"
    return None


def _suite_dense_backends_bitwise():
    if not backend.compiled_available():
        return None  # nothing to compare; suite passes vacuously
    rng = np.random.default_rng(_CHECK_SEED)
    py = backend.kernels(backend.PYTHON)
    ck = backend.kernels(backend.COMPILED)
    for trial in range(20):
        n = int(rng.integers(1, 50))
        x = rng.random(n)
        y = rng.random(n)
        a, b = py.dot(x, y), ck.dot(x, y)
        if np.float64(a).tobytes() != np.float64(b).tobytes():
            return f"dot bitwise mismatch at n={n}: {a!r} vs {b!r}"
        rows, cols = int(rng.integers(1, 20)), int(rng.integers(1, 20))
        m = rng.random((rows, cols))
        v = rng.random(cols)
        if py.matvec(m, v).tobytes() != np.asarray(ck.matvec(m, v)).tobytes():
            return f"matvec bitwise mismatch at {rows}x{cols}"
    return None


def _suite_ttv_pinned():
    t = sparse.SparseCooTensor(
        [[0, 0, 0], [0, 1, 0]], [2.0, 3.0], (2, 2, 2)
    )
    res = sparse.ttv(t, [10.0, 100.0], 1)
    out = res.to_tensor()
    want = sparse.SparseCooTensor([[0, 0]], [320.0], (2, 2))
    if out != want:
        return f"pinned ttv: expected one entry (0,0)->320.0, got {out!r}"
    return None


def _suite_ttv_canceling():
    t = sparse.SparseCooTensor(
        [[0, 0, 0], [0, 2, 0]], [1.0, -1.0], (3, 3, 3)
    )
    res = sparse.ttv(t, [1.0, 1.0, 1.0], 1)
    if res.new_vals.shape[0] != 0:
        return f"canceling ttv: expected empty output, got {res.new_vals!r}"
    return None


def _suite_ttv_oracle_random():
    rng = np.random.default_rng(_CHECK_SEED + 1)
    for case in range(10):
        # lower bound keeps round(0.05 * prod(dims)) >= 1
        dims = tuple(int(d) for d in rng.integers(4, 13, size=3))
        t = gen_sparse3(GenSpec(int(rng.integers(2**32)), "sparse3", dims, 0.05))
        for k in range(3):
            x = rng.random(dims[k])
            got = sparse.ttv(t, x, k).to_tensor()
            want = dense_ttv_oracle(t, x, k)
            if not np.array_equal(got.subs, want.subs):
                return f"ttv index set mismatch: dims={dims}, k={k}"
            tol = ttv_value_tolerance(t, x, k)
            if got.vals.shape != want.vals.shape or (
                got.nnz and np.max(np.abs(got.vals - want.vals)) > tol
            ):
                return f"ttv values beyond tolerance {tol}: dims={dims}, k={k}"
    return None


def _canonical_violation(t: sparse.SparseCooTensor) -> str:
    if t.subs.shape != (t.vals.shape[0], t.ndim):
        return "subs/vals shape mismatch"
    if t.nnz:
        if t.subs.min() < 0 or (t.subs >= np.array(t.shape)).any():
            return "index out of bounds"
        if (t.vals == 0.0).any():
            return "stored zero value"
        if not sparse._rows_strictly_increasing(t.subs):
            return "rows not sorted-unique"
    return None


def _suite_canonical_invariants():
    rng = np.random.default_rng(_CHECK_SEED + 2)
    for case in range(50):
        dims = tuple(int(d) for d in rng.integers(4, 16, size=3))
        t = gen_sparse3(GenSpec(int(rng.integers(2**32)), "sparse3", dims, 0.1))
        bad = _canonical_violation(t)
        if bad:
            return f"generated tensor violates canonical form: {bad}"
        out = sparse.ttv(t, rng.random(dims[2]), 2).to_tensor()
        bad = _canonical_violation(out)
        if bad:
            return f"ttv output violates canonical form: {bad}"
    return None


def _suite_generation():
    spec = GenSpec(_CHECK_SEED, "sparse3", (20, 20, 20), 0.05)
    t1, t2 = gen_sparse3(spec), gen_sparse3(spec)
    if t1 != t2:
        return "gen_sparse3 not deterministic for a fixed spec"
    if t1.nnz != 400:
        return f"expected exactly 400 nonzeros, got {t1.nnz}"
    if (t1.vals < 0).any() or (t1.vals >= 1).any():
        return "sparse values outside [0,1)"
    v = gen_vector(GenSpec(_CHECK_SEED, "vector", (10**6,)))
    mean = float(v.mean())
    if abs(mean - 0.5) > 0.002:
        return f"large-sample mean {mean} outside 0.5 +/- 0.002"
    return None


def _suite_timer_calibration():
    elapsed = bench.time_once(lambda: time.sleep(0.010))
    if not 0.010 <= elapsed <= 0.050:
        return f"10 ms sleep timed at {elapsed} s, outside [0.010, 0.050]"
    return None


def _suite_helpers():
    if sparse.set_difference([0, 1, 2], [1]) != [0, 2]:
        return "set_difference pinned example failed"
    keys = [[1, 0], [0, 1], [1, 0]]
    u, s = sparse.unique_rows_accumulate(keys, [1.0, 2.0, 3.0])
    if not (np.array_equal(u, [[0, 1], [1, 0]]) and np.array_equal(s, [2.0, 4.0])):
        return f"unique_rows_accumulate: got {u!r}, {s!r}"
    return None


SUITES = (
    ("dense-pinned-examples", _suite_dense_pinned),
    ("dense-backends-bitwise", _suite_dense_backends_bitwise),
    ("ttv-pinned-example", _suite_ttv_pinned),
    ("ttv-exact-cancellation", _suite_ttv_canceling),
    ("ttv-dense-oracle", _suite_ttv_oracle_random),
    ("canonical-invariants", _suite_canonical_invariants),
    ("generator-contracts", _suite_generation),
    ("timer-calibration", _suite_timer_calibration),
    ("helper-examples", _suite_helpers),
)


def run_all(report=print) -> bool:
    """Run every suite, print one PASS/FAIL line each, return overall truth."""
    all_ok = True
    for name, fn in SUITES:
        try:
            detail = fn()
        except Exception as exc:
            detail = f"raised {type(exc).__name__}: {exc}"
        if detail is None:
            report(f"PASS {name}")
        else:
            all_ok = False
            report(f"FAIL {name}: {detail}")
    return all_ok
