"""End-to-end smoke tests of the python bindings against the compiled core."""

import math

import numpy as np
import pytest

import secure_ia as sia


def system(M, N, Ne, d, K=3, Pt=1.0):
    return sia.SystemConfig(K=K, M=M, N=N, Ne=Ne, d=d, Pt=Pt)


def test_feasibility_truth_table():
    expected = {
        (9, 9, 6, 3): (True, True),
        (9, 9, 9, 3): (True, False),
        (15, 15, 9, 3): (True, True),
        (15, 15, 18, 3): (True, False),
    }
    for (M, N, Ne, d), (wslm_ok, zfws_ok) in expected.items():
        cfg = system(M, N, Ne, d)
        assert sia.wslm_feasible(cfg).feasible == wslm_ok
        assert sia.zfws_feasible(cfg).feasible == zfws_ok
    ref = sia.wslm_feasible(system(9, 9, 6, 3))
    assert (ref.Nv, ref.Neq) == (117, 81)


def test_snr_to_power():
    assert sia.snr_to_power(30.0, 1.0) == pytest.approx(1000.0)
    assert sia.snr_to_power(0.0, 1.0) == pytest.approx(1.0)
    assert sia.snr_to_power(10.0, 2.0) == pytest.approx(20.0)


def test_channel_shapes_and_determinism():
    cfg = system(9, 9, 6, 3)
    ch = sia.draw_channels(cfg, 42)
    assert ch.H(0, 0).shape == (9, 9)
    assert ch.H(3, 1).shape == (6, 9)  # receiver K is the eavesdropper
    assert ch.eaves(2).shape == (6, 9)
    again = sia.draw_channels(cfg, 42)
    assert np.array_equal(ch.H(1, 2), again.H(1, 2))
    other = sia.draw_channels(cfg, 43)
    assert not np.array_equal(ch.H(1, 2), other.H(1, 2))


def test_wslm_trace_monotone_and_power_constraint():
    cfg = system(9, 9, 6, 3, Pt=4.0)
    ch = sia.draw_channels(cfg, 7)
    sol, trace = sia.wslm_ia(ch, cfg, sia.IAOptions(kappa_max=30))
    leak = np.asarray(trace.leakage)
    assert np.all(np.diff(leak) <= 1e-12)
    for F in sol.F:
        gram = F.conj().T @ F
        assert np.linalg.norm(gram - (cfg.Pt / cfg.d) * np.eye(cfg.d)) <= 1e-8
    rep = sia.evaluate_leakage(sia.Scheme.wslm, ch, sol)
    assert rep.J == pytest.approx(leak[-1], rel=1e-10)


def test_zfws_nulls_the_eavesdropper():
    cfg = system(9, 9, 6, 3, Pt=1000.0)
    ch = sia.draw_channels(cfg, 11)
    sol, trace = sia.zfws_ia(ch, cfg, sia.IAOptions(kappa_max=40))
    for l in range(3):
        assert np.linalg.norm(ch.eaves(l) @ sol.F[l]) <= 1e-9 * math.sqrt(cfg.Pt) * (
            np.linalg.norm(ch.eaves(l))
        )
    report = sia.secrecy_report(ch, sol, cfg)
    assert all(re <= 1e-9 for re in report.Re)
    assert report.ssr == pytest.approx(sum(report.R), rel=1e-9)


def test_convergence_runner():
    cfg = system(9, 9, 6, 3, Pt=1000.0)
    trace = sia.run_convergence(cfg, sia.Scheme.wslm,
                                sia.IAOptions(kappa_max=100, eps_leakage=1e-9), 5)
    assert trace.termination == sia.Termination.converged
    assert trace.leakage[-1] <= 1e-9


def test_small_sweep_rows_and_improvement():
    spec = sia.ExperimentSpec()
    spec.config = system(6, 6, 4, 2)
    spec.snr_points = [0.0, 10.0]
    spec.trials = 2
    spec.master_seed = 3
    spec.opts = sia.IAOptions(kappa_max=10)
    res = sia.run_snr_sweep(spec)
    assert len(res.rows) == 3 * 2 * 2
    assert len(res.aggregates) == 3 * 2
    assert all(row.ssr >= 0.0 for row in res.rows)

    spec.snr_points = [10.0]
    spec.ne_points = [4]
    out = sia.run_ne_sweep(spec)
    by_scheme = {imp.scheme: imp.improvement for imp in out.improvements}
    assert by_scheme[sia.Scheme.conventional] == 0.0


def test_numeric_building_blocks():
    a = np.diag([3.0, 2.0, 1.0]).astype(complex)
    vecs, vals = sia.eig_smallest(a, 1)
    assert vals[0] == pytest.approx(1.0)
    assert abs(vecs[2, 0]) == pytest.approx(1.0)
    assert sia.logdet2(np.diag([2.0, 4.0]).astype(complex)) == pytest.approx(3.0)
    delta = sia.null_space_precoder_basis(np.eye(2, 4, dtype=complex), 2)
    assert np.linalg.norm(np.eye(2, 4) @ delta.matrix) <= 1e-12
