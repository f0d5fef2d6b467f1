"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line. Run with ``pytest -s
tests/test_acceptance.py`` to see them, or execute this file directly.
"""

import contextlib
import io
import time
from pathlib import Path

import numpy as np
import pytest

from weakjordan.bv import total_variation
from weakjordan.cli import main
from weakjordan.jordan import decompose
from weakjordan.suites import (
    NORMING_NORMS,
    _random_wbv_curve,
    _random_x0,
    case_rng,
    run_bv,
    run_cone,
    run_jordan,
    run_lattice,
    run_relations,
    run_weakrel,
)
from weakjordan.validation import Tolerance, lp_norm
from weakjordan.weakrel import SampledCurve

SEED = 42
FIXTURES = Path(__file__).parent / "fixtures"
_cache = {}


def report(name, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}: {name}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def timed(key, fn):
    if key not in _cache:
        start = time.perf_counter()
        result = fn()
        _cache[key] = (result, time.perf_counter() - start)
    return _cache[key]


def laws_ok(result, prefix, minimum):
    laws = {k: v for k, v in result.laws.items() if k.startswith(prefix)}
    bad = {k: (v.passed, v.total) for k, v in laws.items() if v.passed != v.total or v.total < minimum}
    return bool(laws) and not bad, bad


def test_lattice_law_suite():
    result, elapsed = timed("lattice", lambda: run_lattice(SEED, cases=1000))
    ok, bad = laws_ok(result, "identity:", 1000)
    names = {k.split(":", 1)[1] for k in result.laws if k.startswith("identity:")}
    ok &= {"triangle_inequality", "join_associative"} <= names
    ok &= elapsed < 5.0
    report("lattice law suite", ok, f"{len(names)} identities x 1000 cases, {elapsed:.2f}s, bad={bad}")


def test_axiom_suite():
    result, _ = timed("lattice", lambda: run_lattice(SEED, cases=1000))
    ok, bad = laws_ok(result, "axiom:", 1000)
    names = sorted(k for k in result.laws if k.startswith("axiom:"))
    ok &= any("d_" in n for n in names) and any("e_" in n for n in names)
    report("absolute-order axioms (a)-(e)", ok, f"{len(names)} checks, bad={bad}")


def test_relations_suite():
    result, _ = timed("relations", lambda: run_relations(SEED, cases=1000, mixed=500))
    expected = [
        "equivalence",
        "scalar_invariance",
        "additivity",
        "characterizations",
        *(f"abs_item_{i}" for i in range(1, 6)),
        "self_relation_zero",
    ]
    bad = {k: (result.laws[k].passed, result.laws[k].total) for k in expected
           if result.laws[k].passed != result.laws[k].total or result.laws[k].total < 1000}
    mixed = result.laws["characterizations_mixed"]
    ok = not bad and mixed.passed == mixed.total == 500
    report("relations suite", ok, f"mixed {mixed.passed}/{mixed.total}, bad={bad}")


def test_weak_relation_suite():
    result, _ = timed("weakrel", lambda: run_weakrel(SEED, cases=500))
    ok = True
    for law in ("five_way_equivalence", "separation", "rank_matches_gram", "witness_iff_rank_deficient"):
        s = result.laws[law]
        ok &= s.passed == s.total >= 500
    for law in ("witness_unit_dual_norm", "witness_annihilates"):
        s = result.laws[law]
        ok &= s.passed == s.total > 0 and s.max_residual <= 1e-9
    report(
        "weak-relation suite",
        ok,
        f"witnesses={result.laws['witness_unit_dual_norm'].total}, "
        f"max annihilation={result.laws['witness_annihilates'].max_residual:.2e}",
    )


def test_norming_functional_oracle():
    result, elapsed = timed("cone", lambda: run_cone(SEED, cases=500))
    ok = elapsed < 30.0
    worst = 0.0
    for p in NORMING_NORMS:
        for kind in ("value", "dual_norm", "oracle"):
            s = result.laws[f"norming_{kind}:p{p:g}"]
            ok &= s.passed == s.total == 500
            if kind != "oracle":
                worst = max(worst, s.max_residual)
    report("norming-functional oracle", ok, f"5 norms x 500, max rel err {worst:.1e}, {elapsed:.2f}s")


def test_cone_suite():
    result, _ = timed("cone", lambda: run_cone(SEED, cases=500))
    laws = ["axiom:sum", "axiom:scaling", "axiom:proper", "axiom:closed",
            "alpha_nesting", "ray_inclusion", "norm_monotone"]
    bad = {k: (result.laws[k].passed, result.laws[k].total) for k in laws
           if result.laws[k].passed != result.laws[k].total or result.laws[k].total < 500}
    report("cone suite", not bad, f"{len(laws)} laws x 500, bad={bad}")


def test_tv_oracle():
    result, _ = timed("bv", lambda: run_bv(SEED, cases=200))
    s = result.laws["tv_matches_brute_force"]
    ok = s.passed == s.total == 200 and s.max_residual <= 1e-12
    report("TV oracle", ok, f"200 traces, max residual {s.max_residual:.1e}")


def test_jordan_decomposition():
    tol = Tolerance()
    norms = (1.0, 2.0, np.inf)
    problems = []
    for i in range(200):
        rng = case_rng(SEED, "jordan", i)
        dim = int(rng.integers(1, 17))
        nodes = int(rng.integers(2, 257))
        p = norms[i % 3]
        f = _random_wbv_curve(rng, dim, nodes)
        x0 = _random_x0(rng, dim)
        alpha = None if i % 2 == 0 else rng.uniform(0.05, 1.0) * lp_norm(x0, p)
        problems.append((f, x0, p, alpha))
    start = time.perf_counter()
    failures = []
    for f, x0, p, alpha in problems:
        r = decompose(f, x0, p, alpha, tol)
        g = r.scalar_trace.values
        good = (
            r.residual <= 1e-8 * (1 + float(np.max(np.abs(g))))
            and r.f1_increasing
            and r.f2_increasing
            and r.variation.values[-1] == total_variation(r.scalar_trace)
            and r.wbv_ok
        )
        if not good:
            failures.append((f.dim, f.n_nodes, p))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10.0
    report("jordan decomposition", ok, f"200 curves, {elapsed:.2f}s, failures={failures[:3]}")


def test_worked_example():
    f = SampledCurve([0.0, 1.0, 2.0], [[0, 5], [2, 5], [1, 5]])
    r = decompose(f, [1.0, 0.0], 2.0)
    ok = (
        r.f1.values.tolist() == [[0, 0], [2, 0], [3, 0]]
        and r.f2.values.tolist() == [[0, 0], [0, 0], [2, 0]]
        and r.residual == 0.0
    )
    report("worked example", ok, f"residual {r.residual!r}")


def test_degenerate_construction():
    # dims 2-8 are drawn inside the jordan suite's degenerate branch
    result, _ = timed("jordan", lambda: run_jordan(SEED, cases=200, degenerate_cases=100))
    exact = result.laws["degenerate_exact_zero"]
    perturbed = result.laws["degenerate_perturbed_related"]
    ok = exact.passed == exact.total == 100 and perturbed.passed == perturbed.total == 100
    ok &= exact.max_residual == 0.0
    report("degenerate construction", ok, f"exact {exact.passed}/100, perturbed {perturbed.passed}/100")


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


def test_cli_determinism_and_exit_codes(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    codes = [_cli("verify", "--suite", "all", "--seed", "42", "-o", str(p))[0] for p in paths]
    same = paths[0].read_bytes() == paths[1].read_bytes()
    worked = str(FIXTURES / "worked.csv")
    exits = {
        0: _cli("decompose", "--input", worked, "--x0", "1,0")[0],
        1: _cli("verify", "--suite", "lattice", "--cases", "20", "--inject-fault")[0],
        2: _cli("decompose", "--input", str(FIXTURES / "nonincreasing.csv"), "--x0", "1,0")[0],
        3: _cli("decompose", "--input", worked, "--x0", "0,0")[0],
    }
    ok = same and codes == [0, 0] and all(k == v for k, v in exits.items())
    report("CLI determinism and exit codes", ok, f"identical={same}, exits={exits}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
