"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (see ``conftest.verdict``) and
then asserts, so the summary shows all ten verdicts even when some fail.
"""

import io
import math
import time
import timeit
from contextlib import redirect_stderr, redirect_stdout

import mpmath as mp
import numpy as np
import pytest

from tanhgup.bounds import (
    QuarticAlgebra,
    TanhAlgebra,
    check_consistency,
    quartic_window,
    tanh_sharp_momentum_window,
    tanh_window,
)
from tanhgup.chain import (
    ChainParams,
    build_chain,
    eta_closed_form,
    linear_spectrum,
    partner_coeffs,
    spectrum,
)
from tanhgup.cli import main
from tanhgup.grid import Grid, GridState
from tanhgup.oracle import (
    commutator_residual,
    hlin_expectation_check,
    nmax_divergence_sweep,
    solve_reference,
)
from tanhgup.report import read_csv

pytestmark = pytest.mark.acceptance

UNDEFORMED = [-25.0, -16.0, -9.0, -4.0, -1.0]
DEFORMED = [-24.83434, -15.40761, -7.95879, -2.78288, -0.08488]


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


def column(text, name):
    header, body = read_csv(text)
    i = header.index(name)
    return [float(r[i]) for r in body]


def best_time(fn, number=200, repeat=5):
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


@pytest.fixture(scope="module")
def random_chains():
    rng = np.random.default_rng(20240613)
    params = np.column_stack(
        [rng.uniform(0.5, 10, 1000), rng.uniform(0.5, 10, 1000), rng.uniform(0, 0.5, 1000)]
    )
    delta = rng.uniform(0, 0.5, 1000)
    t0 = time.perf_counter()
    chains = [build_chain(x, e, b, d) for (x, e, b), d in zip(params, delta)]
    elapsed = time.perf_counter() - t0
    return chains, elapsed


def test_criterion_01_undeformed_spectrum(verdict):
    code, out = cli("spectrum", "--v0", "30", "--beta", "0", "--delta", "0")
    levels = column(out, "e_physical")
    err = max(abs(a - b) for a, b in zip(levels, UNDEFORMED)) if len(levels) == 5 else math.inf
    t = best_time(lambda: spectrum(30, 0, 0))
    ok = code == 0 and err <= 1e-12 and t < 1e-3
    verdict("1", "undeformed spectrum {-25,-16,-9,-4,-1}", ok, f"max err {err:.1e}, {t * 1e6:.0f} us")
    assert ok


def test_criterion_02_deformed_spectrum(verdict):
    code, out = cli("spectrum", "--v0", "30", "--beta", "0.01", "--delta", "0.01")
    levels = column(out, "e_physical")
    res = spectrum(30, 0.01, 0.01)
    err = max(abs(a - b) for a, b in zip(levels, DEFORMED)) if len(levels) == 5 else math.inf
    above = all(d > u for d, u in zip(levels, UNDEFORMED))
    t = best_time(lambda: spectrum(30, 0.01, 0.01))
    ok = code == 0 and err <= 1e-4 and above and res.n_max == 4 and t < 1e-3
    verdict(
        "2",
        "deformed spectrum, n_max = 4, all levels raised",
        ok,
        f"max err {err:.1e}, {t * 1e6:.0f} us",
    )
    assert ok


def test_criterion_03_recursion_closed_form(verdict, random_chains):
    chains, elapsed = random_chains
    worst = 0.0
    for c in chains:
        for s in c.steps:
            closed = eta_closed_form(s.n, c.xi0, c.eta0, c.beta)
            worst = max(worst, abs(closed - s.eta) / max(1.0, abs(s.eta)))
    ok = worst <= 1e-10 and elapsed < 1.0
    verdict("3", "recursion vs closed form, 1000 chains", ok, f"worst {worst:.1e}, {elapsed:.3f} s")
    assert ok


def test_criterion_04_shape_invariance(verdict, random_chains):
    chains, _ = random_chains
    worst = 0.0

    def rel(a, b):
        return abs(a - b) / max(abs(a), abs(b), 1e-300)

    for c in chains:
        for prev, cur in zip(c.steps, c.steps[1:]):
            plus = partner_coeffs(ChainParams(prev.xi, prev.eta), c.beta, c.delta, "plus")
            minus = partner_coeffs(ChainParams(cur.xi, cur.eta), c.beta, c.delta, "minus")
            worst = max(
                worst,
                rel(plus.kinetic, minus.kinetic),
                rel(plus.depth, minus.depth),
                rel(plus.constant, minus.constant + cur.eps),
            )
    ok = worst <= 1e-12
    verdict("4", "H+_{n-1} = H-_n + eps_n on all chain steps", ok, f"worst {worst:.1e}")
    assert ok


def test_criterion_05_exact_vs_linear(verdict):
    def gap(b):
        s = spectrum(30, b, b)
        lin = linear_spectrum(s.xi0, s.eta0, b, b, s.n_max)
        return max(abs(x - y) for x, y in zip(s.e_chain, lin))

    ratios = [gap(b) / gap(b / 2) for b in (0.02, 0.01, 0.005)]
    ok = all(3.5 <= r <= 4.5 for r in ratios)
    verdict("5", "exact vs first order gap shrinks x4", ok, ", ".join(f"{r:.3f}" for r in ratios))
    assert ok


def test_criterion_06_reference_oracle(verdict):
    t0 = time.perf_counter()
    exact = np.array([(5 - n) ** 2 for n in range(5)], dtype=float)
    errs = []
    for n_pts in (4001, 8001):
        pairs = solve_reference(1, 5, Grid(20, n_pts))
        w = np.array([e - 25 for e, _ in pairs])
        errs.append(np.max(np.abs(w + exact)) if len(w) == 5 else math.inf)
    elapsed = time.perf_counter() - t0
    ratio = errs[0] / errs[1]
    ok = errs[0] <= 5e-3 and 3.5 <= ratio <= 4.5 and elapsed < 30
    verdict(
        "6",
        "grid reference -(5-n)^2, second-order convergence",
        ok,
        f"err {errs[0]:.2e}, ratio {ratio:.3f}, {elapsed:.2f} s",
    )
    assert ok


def test_criterion_07_linear_hamiltonian(verdict):
    t0 = time.perf_counter()
    rows = hlin_expectation_check(1, 5, 1e-3, 1e-3, Grid(12, 2401))
    low_ok = len(rows) == 5 and all(r.within for r in rows[:4])
    sweep = nmax_divergence_sweep(1, 5, 1e-3, 1e-3, half_widths=(10, 15, 20), spacing=0.01)
    div_ok = sweep.expectation_increasing and sweep.expectation_spread > 0.1
    elapsed = time.perf_counter() - t0
    ok = low_ok and div_ok and elapsed < 60
    worst = max(r.abs_diff / r.tolerance for r in rows[:4])
    verdict(
        "7",
        "<H^lin> matches first order for n<4; n=4 grows with L",
        ok,
        f"n<4 worst diff/tol {worst:.2f}; n=4 over L=10,15,20: "
        + ", ".join(f"{e:.4f}" for e in sweep.expectations)
        + f" (spread {sweep.expectation_spread:.2%}); {elapsed:.1f} s",
    )
    assert low_ok, "levels n = 0..3 out of tolerance"
    assert div_ok, "n = n_max expectation does not grow with the box"
    assert elapsed < 60


def test_criterion_08_commutator_scaling(verdict):
    grid = Grid(15, 3001)
    psi = GridState.gaussian(grid, 1.0)
    r1 = commutator_residual(1, 0.01, 0.01, grid, psi)
    r2 = commutator_residual(1, 0.005, 0.005, grid, psi)
    ratio = r2 / r1
    ok = 0.2 <= ratio <= 0.32
    verdict("8", "commutator residual ratio in [0.2, 0.32]", ok, f"ratio {ratio:.4f}")
    assert ok


def _mp_tanh(a, b, d):
    a, b, d = (mp.mpf(float(v)) for v in (a, b, d))
    return {
        "dp_min": d / 2,
        "dp_max": 2 / b,
        "p2_min": d**2 / 4,
        "p2_max": 4 / b**2,
        "dtanh_min": mp.sqrt(b * d),
        "dx_min": mp.sqrt(b * d) / a,
    }


def _mp_quartic(a, b):
    a, b = mp.mpf(float(a)), mp.mpf(float(b))
    return {
        "p2_max": 16 / (a * b**3),
        "dp2_min": mp.mpf(4) / 9 * mp.sqrt(3 * a),
        "x2_max": 4 / (a * b),
        "dx2_min": b,
    }


def test_criterion_09_bounds_calculus(verdict):
    mp.mp.dps = 40
    rng = np.random.default_rng(99)
    worst = 0.0
    nested = True
    for _ in range(1000):
        a = rng.uniform(0.1, 5)
        b = 10 ** rng.uniform(-4, 1)
        d = rng.uniform(0, 4 / b)
        w = tanh_window(TanhAlgebra(a, b, d)).as_dict()
        for k, v in _mp_tanh(a, b, d).items():
            worst = max(worst, float(abs(w[k] - v) / max(abs(v), mp.mpf("1e-300"))))
        if b * d <= 1:
            lo, hi = tanh_sharp_momentum_window(TanhAlgebra(a, b, d))
            nested &= w["dp_min"] * (1 - 1e-12) <= lo <= hi <= w["dp_max"] * (1 + 1e-12)
        qa = rng.uniform(0.1, 5)
        qb = rng.uniform(0.01, 2 / math.sqrt(qa))
        q = quartic_window(QuarticAlgebra(qa, qb)).as_dict()
        for k, v in _mp_quartic(qa, qb).items():
            worst = max(worst, float(abs(q[k] - v) / abs(v)))

    rejected = True
    for _ in range(25):
        b = rng.uniform(0.5, 10)
        d = (4 + rng.uniform(0.01, 10)) / b
        rejected &= not check_consistency(TanhAlgebra(1, b, d)).consistent
        rejected &= cli("bounds", "--algebra", "tanh", "--beta", repr(b), "--delta", repr(d))[0] == 2
        qa = rng.uniform(0.1, 5)
        qb = math.sqrt((4 + rng.uniform(0.01, 10)) / qa)
        rejected &= (
            cli("bounds", "--algebra", "quartic", "--alpha", repr(qa), "--beta", repr(qb))[0] == 2
        )
    ok = worst <= 1e-12 and nested and rejected
    verdict(
        "9",
        "windows vs closed form, sharp nesting, rejection exit 2",
        ok,
        f"worst rel {worst:.1e}",
    )
    assert ok


def test_criterion_10_figure(verdict, tmp_path):
    import pathlib

    golden = pathlib.Path(__file__).parent / "data" / "figure_golden.csv"
    code, _ = cli("figure", "-o", str(tmp_path / "a"))
    code2, _ = cli("figure", "-o", str(tmp_path / "b"))
    a = (tmp_path / "a" / "figure.csv").read_bytes()
    b = (tmp_path / "b" / "figure.csv").read_bytes()
    text = a.decode()
    und, dfm = column(text, "e_undeformed"), column(text, "e_deformed")
    values_ok = und == UNDEFORMED and np.allclose(dfm, DEFORMED, atol=1e-4, rtol=0)
    ok = code == code2 == 0 and a == b == golden.read_bytes() and values_ok
    verdict("10", "figure.csv reproduces criteria 1-2, byte-stable", ok)
    assert ok
