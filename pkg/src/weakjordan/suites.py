"""Seeded property suites that exercise every law on generated instances.

Each case draws from its own generator seeded by ``(seed, suite, case)``, so a
failure is reproducible from the payload recorded in the report and results do
not depend on the order in which suites run.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from unittest import mock

import numpy as np

from . import latcore
from .bv import (
    ScalarTrace,
    is_increasing_cone,
    jordan_scalar,
    total_variation,
    variation_function,
)
from .cone import (
    build_cone,
    check_cone_axioms,
    check_norm_monotone,
    contains,
    norming_functional,
    ray_cone_membership,
    sample_member,
)
from .jordan import decompose, degenerate_construction, verify_increasing_identity
from .oracles import brute_force_tv, gram_rank, sphere_max
from .relations import (
    StrongRelation,
    characterization_values,
    check_abs_properties,
    check_additivity,
    check_equivalence,
    check_scalar_invariance,
    related_to_zero_self,
)
from .validation import Tolerance, dual_index, lp_norm
from .weakrel import (
    Functional,
    SampledCurve,
    check_characterizations_weak,
    check_equivalence_on_functions,
    find_witness_functional,
    range_span_basis,
    separated_implies_equal,
    weakly_related,
)

SUITES = ("lattice", "relations", "weakrel", "cone", "bv", "jordan")
_SUITE_IDS = {name: i for i, name in enumerate(SUITES)}

DEFAULT_CASES = {
    "lattice": 1000,
    "relations": 1000,
    "weakrel": 500,
    "cone": 500,
    "bv": 200,
    "jordan": 200,
}
DIM_RANGE = {
    "lattice": (2, 8),
    "relations": (2, 8),
    "weakrel": (1, 6),
    "cone": (1, 5),
    "jordan": (1, 16),
}
NORMING_NORMS = (1.0, 1.5, 2.0, 3.0, math.inf)


def _jsonable(v):
    if isinstance(v, np.ndarray):
        return [_jsonable(x) for x in v.tolist()]
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return v if math.isfinite(v) else repr(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.bool_,)):
        return bool(v)
    return v


@dataclass
class LawStats:
    passed: int = 0
    total: int = 0
    max_residual: float = 0.0


@dataclass
class SuiteResult:
    name: str
    seed: int
    cases: int
    laws: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def n_failures(self) -> int:
        return sum(s.total - s.passed for s in self.laws.values())

    @property
    def passed(self) -> bool:
        return self.n_failures == 0

    def record(self, law, ok, residual=0.0, case=None, inputs=None):
        stats = self.laws.setdefault(law, LawStats())
        stats.total += 1
        residual = float(residual)
        if math.isfinite(residual):
            stats.max_residual = max(stats.max_residual, abs(residual))
        if ok:
            stats.passed += 1
        else:
            self.failures.append(
                {
                    "suite": self.name,
                    "law": law,
                    "seed": self.seed,
                    "case": case,
                    "inputs": _jsonable(inputs or {}),
                }
            )

    def note(self, key, count=1):
        self.notes[key] = self.notes.get(key, 0) + count

    def summary(self) -> dict:
        return {
            "cases": self.cases,
            "laws": {
                law: {"passed": s.passed, "total": s.total}
                for law, s in sorted(self.laws.items())
            },
            "notes": dict(sorted(self.notes.items())),
            "failures": self.n_failures,
        }

    def residuals(self) -> dict:
        return {law: s.max_residual for law, s in sorted(self.laws.items())}


def case_rng(seed: int, suite: str, case: int) -> np.random.Generator:
    return np.random.default_rng([seed, _SUITE_IDS[suite], case])


def _draw_dim(rng, bounds, fixed=None) -> int:
    lo, hi = bounds
    drawn = int(rng.integers(lo, hi + 1))
    return drawn if fixed is None else int(fixed)


# -- generators -------------------------------------------------------------


def random_support(rng, dim, p=0.5, nonempty=True):
    mask = rng.random(dim) < p
    if nonempty and not mask.any():
        mask[rng.integers(dim)] = True
    return mask


def vector_off(rng, support_mask, low=-10.0, high=10.0):
    """Random vector vanishing on ``support_mask``."""
    v = rng.uniform(low, high, size=support_mask.size)
    v[support_mask] = 0.0
    return v


def null_space(coeffs: np.ndarray) -> np.ndarray:
    _, _, vt = np.linalg.svd(coeffs.reshape(1, -1))
    return vt[1:]


def null_curve_values(rng, coeffs, n_nodes, scale=5.0):
    basis = null_space(coeffs)
    if basis.shape[0] == 0:
        return np.zeros((n_nodes, coeffs.size))
    mix = rng.uniform(-scale, scale, size=(n_nodes, basis.shape[0]))
    return mix @ basis


# -- lattice ----------------------------------------------------------------


def _broken_join(x, y):
    x = latcore.check_vector(x)
    y = latcore.check_vector(y)
    return np.minimum(x, y)


@contextmanager
def injected_fault():
    """Replace the lattice join with the meet, for harness self-tests."""
    with mock.patch.object(latcore, "join", _broken_join):
        yield


def run_lattice(seed, cases=None, dim=None, tol=None) -> SuiteResult:
    tol = tol or Tolerance()
    fixed_dim = dim
    cases = cases or DEFAULT_CASES["lattice"]
    out = SuiteResult("lattice", seed, cases)
    for i in range(cases):
        rng = case_rng(seed, "lattice", i)
        dim = _draw_dim(rng, DIM_RANGE["lattice"], fixed_dim)
        x, y, z = (rng.uniform(-10, 10, size=dim) for _ in range(3))
        inputs = {"x": x, "y": y, "z": z}
        for law in latcore.check_lattice_identities(x, y, z, tol):
            out.record(f"identity:{law.name}", law.passed, law.residual, i, inputs)

        # absolute-value axioms on disjoint-support instances
        mask = random_support(rng, dim)
        ax = np.where(mask, rng.uniform(0.1, 10, size=dim), 0.0)
        ay = np.where(~mask, rng.uniform(0.0, 10, size=dim), 0.0)
        az_d = rng.uniform(0, 1, size=dim) * ay
        az_e = np.where(~mask, rng.uniform(0.0, 10, size=dim), 0.0)
        alpha = rng.uniform(-5, 5)
        for tag, zz in (("d", az_d), ("e", az_e)):
            v = latcore.check_absolute_order_axioms(ax, ay, zz, alpha, tol)
            ax_inputs = {"x": ax, "y": ay, "z": zz, "alpha": alpha}
            for name, ok in v.checks.items():
                out.record(f"axiom:{name}", ok, 0.0, i, ax_inputs)
            active = f"{tag}_vacuous" not in v.notes
            out.record(f"axiom:{tag}_hypothesis_generated", active, 0.0, i, ax_inputs)
        # (a)-(c) on the signed sample as well
        v = latcore.check_absolute_order_axioms(x, y, z, alpha, tol)
        for name in ("a_positive_fixed", "b_abs_dominates", "c_homogeneous"):
            out.record(f"axiom:{name}", v.checks[name], 0.0, i, inputs)

        # unique orthogonal decomposition
        xp, xn = latcore.decompose_unique(x, tol=tol)
        ok = latcore.is_orthogonal_decomposition(x, xp, xn, tol)
        shift = rng.uniform(0.1, 2.0, size=dim) * random_support(rng, dim)
        ok &= not latcore.is_orthogonal_decomposition(x, xp + shift, xn + shift, tol)
        out.record("decomposition_unique", ok, 0.0, i, {"x": x, "shift": shift})

        # orthogonality: symmetry and x ⊥ x iff x = 0
        u = x * random_support(rng, dim)
        w = y * random_support(rng, dim)
        sym = latcore.is_orthogonal(u, w, tol) == latcore.is_orthogonal(w, u, tol)
        out.record("orthogonal_symmetric", sym, 0.0, i, {"u": u, "w": w})
        self_zero = latcore.is_orthogonal(x, x, tol) is False and latcore.is_orthogonal(
            np.zeros(dim), np.zeros(dim), tol
        )
        out.record("orthogonal_self_iff_zero", self_zero, 0.0, i, {"x": x})

        # ∞-orthogonality: exact for sup-norm, refuted for the 2-norm
        inf_ok = latcore.is_inf_orthogonal(ax, ay, math.inf, tol=tol)
        if np.any(ay > 0):
            inf_ok &= not latcore.is_inf_orthogonal(ax, ay, 2.0, samples=5, tol=tol)
        out.record("inf_orthogonal", inf_ok, 0.0, i, {"x": ax, "y": ay})

        # order projections in (R^n, sup, 1)
        proj = (rng.random(dim) < 0.5).astype(float)
        conds = latcore.order_projection_conditions(proj, tol)
        frac = proj.copy()
        frac[rng.integers(dim)] = rng.uniform(0.1, 0.9)
        fconds = latcore.order_projection_conditions(frac, tol)
        ok = all(conds) and not any(fconds)
        out.record("order_projection_equivalence", ok, 0.0, i, {"p": proj, "q": frac})
    return out


# -- strong relation --------------------------------------------------------


def run_relations(seed, cases=None, dim=None, tol=None, mixed=500) -> SuiteResult:
    tol = tol or Tolerance()
    fixed_dim = dim
    cases = cases or DEFAULT_CASES["relations"]
    out = SuiteResult("relations", seed, cases)
    for i in range(cases):
        rng = case_rng(seed, "relations", i)
        dim = _draw_dim(rng, DIM_RANGE["relations"], fixed_dim)
        degenerate = rng.random() < 0.02
        supp = random_support(rng, dim, p=0.4)
        if degenerate:
            x0 = np.zeros(dim)
            supp = np.zeros(dim, dtype=bool)
            out.note("base_zero")
        else:
            x0 = np.where(supp, rng.uniform(-10, 10, size=dim), 0.0)
            x0[supp & (x0 == 0)] = 1.0
        rel = StrongRelation(x0, tol)

        def sparse():
            return rng.uniform(-10, 10, size=dim) * random_support(rng, dim, 0.7, False)

        x = sparse()
        y = x + vector_off(rng, supp)
        z = y + vector_off(rng, supp)
        base = {"x0": x0, "x": x, "y": y, "z": z}

        v = check_equivalence(rel, x, y, z)
        out.record("equivalence", v.passed and rel(x, y) and rel(y, z), 0.0, i, base)

        alpha, beta = rng.uniform(-10, 10), rng.uniform(-10, 10)
        v = check_scalar_invariance(rel, x, y, alpha, beta)
        out.record("scalar_invariance", v.passed, 0.0, i, {**base, "alpha": alpha, "beta": beta})

        x2 = sparse()
        y2 = x2 + vector_off(rng, supp)
        v = check_additivity(rel, x, y, x2, y2)
        out.record("additivity", v.passed, 0.0, i, {**base, "x2": x2, "y2": y2})

        w = sparse()
        vals = characterization_values(rel, x, y, w)
        out.record("characterizations", all(vals), 0.0, i, {**base, "w": w})

        if i < mixed:
            # mixed instances need a base with a support to violate
            msupp, mx0, mrel = supp, x0, rel
            if degenerate:
                msupp = random_support(rng, dim, p=0.4)
                mx0 = np.where(msupp, rng.uniform(1, 10, size=dim), 0.0)
                mrel = StrongRelation(mx0, tol)
            if i % 2:
                yb = x + vector_off(rng, msupp)
                expected = True
            else:
                d = vector_off(rng, msupp)
                k = int(rng.choice(np.flatnonzero(msupp)))
                d[k] = rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 10)
                yb = x + d
                expected = False
            vals = characterization_values(mrel, x, yb, w)
            ok = len(set(vals)) == 1 and vals[0] == expected
            out.record("characterizations_mixed", ok, 0.0, i, {"x0": mx0, "x": x, "y": yb, "z": w})

        # abs-property items, each on an instance satisfying its hypothesis
        flips = np.where(rng.random(dim) < 0.5, -1.0, 1.0)
        y_abs = np.where(supp, flips * x, rng.uniform(-10, 10, size=dim))
        off_x, off_y = vector_off(rng, supp), vector_off(rng, supp)
        for item, (a, b) in {
            1: (x, y),
            2: (x, y_abs),
            3: (off_x, off_y),
            4: (off_x, off_y),
            5: (off_x, off_y),
        }.items():
            v = check_abs_properties(rel, a, b)
            active = v.values[item - 1]
            key = [k for k in v.checks if k.startswith(f"{item}_")][0]
            out.record(f"abs_item_{item}", active and v.checks[key], 0.0, i, {"x0": x0, "x": a, "y": b})

        # x ~_x 0 iff x = 0
        tiny = rng.uniform(-1, 1, size=dim) * 1e-13
        big = rng.uniform(1e-3, 10, size=dim) * np.where(rng.random(dim) < 0.5, -1, 1)
        ok = (
            related_to_zero_self(np.zeros(dim), tol)
            and related_to_zero_self(tiny, tol)
            and not related_to_zero_self(big, tol)
        )
        out.record("self_relation_zero", ok, 0.0, i, {"tiny": tiny, "big": big})
    return out


# -- weak relation ----------------------------------------------------------


def _random_functional(rng, dim, norm=2.0):
    c = rng.uniform(-5, 5, size=dim) * random_support(rng, dim, 0.8)
    c[c == 0] = 0.0
    if not np.any(c):
        c[0] = 1.0
    return Functional(c, norm)


def run_weakrel(seed, cases=None, dim=None, tol=None) -> SuiteResult:
    tol = tol or Tolerance()
    fixed_dim = dim
    cases = cases or DEFAULT_CASES["weakrel"]
    out = SuiteResult("weakrel", seed, cases)
    for i in range(cases):
        rng = case_rng(seed, "weakrel", i)
        dim = _draw_dim(rng, DIM_RANGE["weakrel"], fixed_dim)
        nodes = int(rng.integers(2, 9))
        grid = np.sort(rng.uniform(0, 10, size=nodes))
        grid += np.arange(nodes) * 1e-3
        xstar = _random_functional(rng, dim)
        f1 = SampledCurve(grid, rng.uniform(-10, 10, size=(nodes, dim)))

        # five-way characterisation on related and unrelated pairs
        related = bool(i % 2)
        d = null_curve_values(rng, xstar.coeffs, nodes)
        if not related:
            k = int(rng.integers(nodes))
            direction = xstar.coeffs / np.linalg.norm(xstar.coeffs)
            d[k] += rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 5.0) * direction
        f2 = f1 - f1.with_values(d)
        v = check_characterizations_weak(f1, f2, xstar, tol)
        ok = v.passed and v.values[0] == related
        out.record("five_way_equivalence", ok, v.residual, i, {"f1": f1.values, "f2": f2.values, "xstar": xstar.coeffs})

        # rank against exact Gram determinants; witness iff rank < dim
        r = int(rng.integers(0, dim + 1))
        basis = rng.integers(-3, 4, size=(r, dim)).astype(float)
        n_nodes = max(2, r + int(rng.integers(1, 4)))
        mix = rng.integers(-3, 4, size=(n_nodes, r)).astype(float)
        g1 = rng.integers(-20, 21, size=(n_nodes, dim)).astype(float)
        diffs = mix @ basis if r else np.zeros((n_nodes, dim))
        c1 = SampledCurve(np.arange(n_nodes, dtype=float), g1)
        c2 = SampledCurve(np.arange(n_nodes, dtype=float), g1 - diffs)
        exact_rank = gram_rank((c1 - c2).values)
        span = range_span_basis(c1, c2, tol)
        inputs = {"f1": c1.values, "f2": c2.values}
        out.record("rank_matches_gram", span.shape[0] == exact_rank, 0.0, i, inputs)
        norm = NORMING_NORMS[i % len(NORMING_NORMS)]
        witness = find_witness_functional(c1, c2, tol, norm=norm)
        out.record("witness_iff_rank_deficient", (witness is not None) == (exact_rank < dim), 0.0, i, inputs)
        if witness is not None:
            unit_err = abs(witness.dual_norm - 1.0)
            out.record("witness_unit_dual_norm", unit_err <= 1e-9, unit_err, i, inputs)
            annihilation = float(np.max(np.abs(witness((c1 - c2).values))))
            out.record("witness_annihilates", annihilation <= 1e-9, annihilation, i, inputs)
            out.record("witness_relates", weakly_related(c1, c2, witness, tol), 0.0, i, inputs)

        # separation by the dual basis
        if i % 2:
            f3 = f1.with_values(f1.values.copy())
            expect_fail = None
        else:
            vals = f1.values.copy()
            k, j = int(rng.integers(nodes)), int(rng.integers(dim))
            vals[k, j] += rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 5.0)
            f3 = f1.with_values(vals)
            expect_fail = j
        v = separated_implies_equal(f1, f3, tol)
        if expect_fail is None:
            ok = v.passed and all(v.values)
        else:
            ok = v.passed and [c for c, r_ok in enumerate(v.values) if not r_ok] == [expect_fail]
        out.record("separation", ok, v.residual, i, {"f1": f1.values, "f2": f3.values})

        # equivalence on functions
        g2 = f1 + f1.with_values(null_curve_values(rng, xstar.coeffs, nodes))
        g3 = g2 + f1.with_values(null_curve_values(rng, xstar.coeffs, nodes))
        v = check_equivalence_on_functions(f1, g2, g3, xstar, tol)
        ok = v.passed and weakly_related(f1, g3, xstar, tol)
        out.record("function_equivalence", ok, 0.0, i, {"f1": f1.values, "xstar": xstar.coeffs})
    return out


# -- cones ------------------------------------------------------------------


def _random_x0(rng, dim):
    x0 = rng.uniform(-10, 10, size=dim)
    x0 *= random_support(rng, dim, 0.85)
    return x0


def run_cone(seed, cases=None, dim=None, tol=None) -> SuiteResult:
    tol = tol or Tolerance()
    fixed_dim = dim
    cases = cases or DEFAULT_CASES["cone"]
    out = SuiteResult("cone", seed, cases)
    for i in range(cases):
        rng = case_rng(seed, "cone", i)
        dim = _draw_dim(rng, DIM_RANGE["cone"], fixed_dim)
        x0 = _random_x0(rng, dim)

        # norming functional against the sphere-search oracle, every p
        for p in NORMING_NORMS:
            xs = norming_functional(x0, p)
            size = lp_norm(x0, p)
            value_err = abs(xs(x0) - size**2) / size**2
            out.record(f"norming_value:p{p:g}", value_err <= 1e-9, value_err, i, {"x0": x0})
            dual = lp_norm(xs.coeffs, dual_index(p))
            dual_err = abs(dual - size) / size
            out.record(f"norming_dual_norm:p{p:g}", dual_err <= 1e-9, dual_err, i, {"x0": x0})
            found = sphere_max(xs.coeffs, p, rng)
            oracle_err = abs(found - dual) / max(dual, 1.0)
            out.record(f"norming_oracle:p{p:g}", oracle_err <= 1e-3, oracle_err, i, {"x0": x0})

        p = NORMING_NORMS[i % len(NORMING_NORMS)]
        size = lp_norm(x0, p)
        alpha = size if i % 2 == 0 else rng.uniform(0.05, 1.0) * size
        cone = build_cone(x0, p, alpha, tol)
        inputs = {"x0": x0, "norm": p, "alpha": alpha}

        v = check_cone_axioms(cone, samples=4, seed=int(rng.integers(2**32)), tol=tol)
        for name, ok in v.checks.items():
            out.record(f"axiom:{name}", ok, 0.0, i, inputs)

        # nesting in alpha: cone(alpha2) ⊆ cone(alpha1) for alpha1 <= alpha2
        a1, a2 = sorted(rng.uniform(0.05, 1.0, size=2) * size)
        narrow = build_cone(x0, p, a2, tol)
        wide = build_cone(x0, p, a1, tol)
        ok = all(contains(wide, sample_member(narrow, rng), tol) for _ in range(4))
        out.record("alpha_nesting", ok, 0.0, i, {**inputs, "alpha1": a1, "alpha2": a2})

        # the ray through x0 lies in every such cone
        deltas = rng.uniform(0, 10, size=4)
        ok = all(contains(cone, dl * x0, tol) for dl in deltas)
        ok &= all(ray_cone_membership(x0, dl * x0, tol) for dl in deltas)
        ok &= not ray_cone_membership(x0, -(deltas[0] + 0.1) * x0, tol)
        out.record("ray_inclusion", ok, 0.0, i, inputs)

        # norm monotonicity at alpha = ||x0||
        full = build_cone(x0, p, None, tol)
        a = sample_member(full, rng, scale=rng.uniform(0.1, 5))
        b = a + sample_member(full, rng, scale=rng.uniform(0.1, 5))
        v = check_norm_monotone(full, a, b, tol)
        out.record("norm_monotone", v.passed, v.residual, i, {**inputs, "x": a, "y": b})
    return out


# -- bounded variation ------------------------------------------------------


def run_bv(seed, cases=None, dim=None, tol=None) -> SuiteResult:
    tol = tol or Tolerance()
    cases = cases or DEFAULT_CASES["bv"]
    out = SuiteResult("bv", seed, cases)
    for i in range(cases):
        rng = case_rng(seed, "bv", i)
        nodes = int(rng.integers(2, 14))
        grid = np.cumsum(rng.uniform(0.1, 1.0, size=nodes))
        g = ScalarTrace(grid, rng.uniform(-10, 10, size=nodes))
        h = ScalarTrace(grid, rng.uniform(-10, 10, size=nodes))
        c = rng.uniform(-5, 5)
        inputs = {"g": g.values, "h": h.values, "c": c}

        tv = total_variation(g)
        brute = brute_force_tv(g.values)
        out.record("tv_matches_brute_force", abs(tv - brute) <= 1e-12, abs(tv - brute), i, inputs)

        tv_sum = total_variation(ScalarTrace(grid, g.values + h.values))
        bound = tv + total_variation(h)
        out.record("tv_subadditive", tv_sum <= bound + tol.bound(bound), max(tv_sum - bound, 0), i, inputs)
        scaled = total_variation(ScalarTrace(grid, c * g.values))
        out.record("tv_homogeneous", tol.close(scaled, abs(c) * tv), abs(scaled - abs(c) * tv), i, inputs)

        v = variation_function(g)
        ok = v.values[0] == 0 and np.all(np.diff(v.values) >= 0) and v.values[-1] == tv
        out.record("variation_function", bool(ok), 0.0, i, inputs)

        upper, lower, offset = jordan_scalar(g)
        recon = upper.values - lower.values
        target = g.values - offset
        ok = (
            np.all(np.diff(upper.values) >= 0)
            and np.all(np.diff(lower.values) >= -tol.bound(lower.values))
            and tol.close(recon, target)
        )
        out.record("jordan_scalar", bool(ok), tol.residual(recon, target), i, inputs)

        inc = ScalarTrace(grid, np.cumsum(rng.uniform(0, 3, size=nodes)))
        vi = variation_function(inc)
        res = tol.residual(vi.values, inc.values - inc.values[0])
        out.record("increasing_variation", tol.close(vi.values, inc.values - inc.values[0]), res, i, {"g": inc.values})
    return out


# -- decomposition ----------------------------------------------------------


def _random_wbv_curve(rng, dim, nodes):
    grid = np.cumsum(rng.uniform(0.05, 1.0, size=nodes))
    walk = np.cumsum(rng.normal(size=(nodes, dim)), axis=0)
    wave = np.sin(np.outer(grid, rng.uniform(0.1, 3.0, size=dim)))
    return SampledCurve(grid, walk + rng.uniform(0, 5) * wave)


def _cone_increasing_curve(rng, cone, grid):
    steps = np.array([sample_member(cone, rng) for _ in range(grid.size - 1)])
    start = rng.uniform(-5, 5, size=cone.dim)
    values = np.vstack([start, start + np.cumsum(steps, axis=0)])
    return SampledCurve(grid, values)


def run_jordan(seed, cases=None, dim=None, tol=None, degenerate_cases=100) -> SuiteResult:
    tol = tol or Tolerance()
    fixed_dim = dim
    cases = cases or DEFAULT_CASES["jordan"]
    out = SuiteResult("jordan", seed, cases)
    norms = (1.0, 2.0, math.inf)

    f = SampledCurve([0.0, 1.0, 2.0], [[0.0, 5.0], [2.0, 5.0], [1.0, 5.0]])
    r = decompose(f, [1.0, 0.0], 2.0, tol=tol)
    ok = (
        np.array_equal(r.f1.values, [[0, 0], [2, 0], [3, 0]])
        and np.array_equal(r.f2.values, [[0, 0], [0, 0], [2, 0]])
        and r.residual == 0.0
    )
    out.record("worked_example", ok, r.residual, None, {})

    for i in range(cases):
        rng = case_rng(seed, "jordan", i)
        dim = _draw_dim(rng, DIM_RANGE["jordan"], fixed_dim)
        nodes = int(rng.integers(2, 257))
        p = norms[i % len(norms)]
        f = _random_wbv_curve(rng, dim, nodes)
        x0 = _random_x0(rng, dim)
        size = lp_norm(x0, p)
        alpha = None if i % 2 == 0 else rng.uniform(0.05, 1.0) * size
        inputs = {"x0": x0, "norm": p, "alpha": alpha, "grid": f.grid, "values": f.values}
        res = decompose(f, x0, p, alpha, tol)
        g = res.scalar_trace.values
        limit = 1e-8 * (1.0 + float(np.max(np.abs(g))))
        out.record("residual", res.residual <= limit, res.residual, i, inputs)
        out.record("f1_cone_increasing", res.f1_increasing, 0.0, i, inputs)
        out.record("f2_cone_increasing", res.f2_increasing, 0.0, i, inputs)
        out.record("variation_endpoint", res.variation.values[-1] == total_variation(res.scalar_trace), 0.0, i, inputs)
        excess = max((b.partition_sum - b.bound for b in res.wbv_bounds), default=0.0)
        out.record("wbv_bound", res.wbv_ok, max(excess, 0.0), i, inputs)

        # explicit identity for curves increasing in the cone
        cone = build_cone(x0, p, None, tol)
        inc = _cone_increasing_curve(rng, cone, f.grid[: min(nodes, 32)])
        v = verify_increasing_identity(inc, x0, p, tol)
        out.record("increasing_identity", v.passed, v.residual, i, {"x0": x0, "norm": p, "values": inc.values})

        if i < degenerate_cases:
            ddim = _draw_dim(rng, (2, 8), fixed_dim if fixed_dim and fixed_dim >= 2 else None)
            dx0 = _random_x0(rng, ddim)
            gnodes = int(rng.integers(2, 40))
            gamma = ScalarTrace(
                np.arange(gnodes, dtype=float), np.cumsum(rng.uniform(0, 3, size=gnodes))
            )
            curve, dres, verdict = degenerate_construction(dx0, p, gamma, tol)
            dinputs = {"x0": dx0, "norm": p, "gamma": gamma.values}
            xstar = dres.functional
            gap = xstar((dres.f1 - dres.f2).values)
            exact = bool(np.all(gap == 0.0)) and dres.residual == 0.0
            out.record("degenerate_exact_zero", exact and verdict.passed, verdict.residual, i, dinputs)
            dcone = build_cone(dx0, p, None, tol)
            h = _cone_increasing_curve(rng, dcone, gamma.grid)
            p1, p2 = dres.f1 + h, dres.f2 + h
            ok = (
                is_increasing_cone(p1, dcone, tol)
                and is_increasing_cone(p2, dcone, tol)
                and weakly_related(curve, p1 - p2, xstar, tol)
                and weakly_related(p1, p2, xstar, tol)
            )
            out.record("degenerate_perturbed_related", ok, 0.0, i, dinputs)
    return out


RUNNERS = {
    "lattice": run_lattice,
    "relations": run_relations,
    "weakrel": run_weakrel,
    "cone": run_cone,
    "bv": run_bv,
    "jordan": run_jordan,
}


def run_suite(name, seed=42, cases=None, dim=None, tol=None, inject_fault=False):
    """Run one named suite, or every suite for ``name == "all"``.

    Returns a list of :class:`SuiteResult`.
    """
    if name == "all":
        names = SUITES
    elif name in RUNNERS:
        names = (name,)
    else:
        raise KeyError(f"unknown suite {name!r}")
    results = []
    for n in names:
        if inject_fault:
            with injected_fault():
                results.append(RUNNERS[n](seed, cases, dim, tol))
        else:
            results.append(RUNNERS[n](seed, cases, dim, tol))
    return results
