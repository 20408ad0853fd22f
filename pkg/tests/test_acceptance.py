"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; all tolerances are fixed here, nothing is tuned at run time.
"""

import json
import time
from fractions import Fraction

import pytest

from higgs_threeterm.chain import RootSequence, multiplicities
from higgs_threeterm.filtered import (
    ResidueBlock,
    connection_to_rep,
    higgs_to_rep,
    rank1_degrees,
    rank1_jump,
    rep_to_connection,
    rep_to_higgs,
)
from higgs_threeterm.harmonic import verification_report
from higgs_threeterm.sweep import MODE_NECESSITY, SweepParams, run_sweep

BOUNDS = dict(n_min=2, n_max=7, max_rise=12, root_bound=12)


def announce(number: int, ok: bool, text: str) -> None:
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {text}")
    assert ok, text


@pytest.fixture(scope="module")
def theorem_sweep():
    started = time.perf_counter()
    report = run_sweep(SweepParams(**BOUNDS), workers=1)
    report["_wall"] = time.perf_counter() - started
    return report


def test_criterion_1_theorem_sweep(theorem_sweep):
    report = theorem_sweep
    counting_or_order_violations = [
        v for v in report["violations"] if v["kind"] in ("three-term", "tail-order")
    ]
    ok = (
        not counting_or_order_violations
        and report["totals"]["stable"] > 0
        and report["_wall"] < 60.0
    )
    announce(
        1,
        ok,
        f"theorem sweep n in [2,7], rise <= 12, |r| <= 12: "
        f"{report['totals']['stable']} stable chains, "
        f"{len(counting_or_order_violations)} three-term/tail-order violations, "
        f"wall {report['_wall']:.2f}s (< 60s)",
    )


def test_criterion_2_certificates(theorem_sweep):
    report = theorem_sweep
    certificate_violations = [
        v
        for v in report["violations"]
        if v["kind"] in ("certificate-build", "certificate-verify", "certificate-count", "route-disagreement")
    ]
    ok = not certificate_violations and report["totals"]["certificates"] > 0
    announce(
        2,
        ok,
        f"matching certificates built and independently verified at every height: "
        f"{report['totals']['certificates']} certificates, "
        f"{len(certificate_violations)} failures, cardinalities all equal m_r",
    )


def test_criterion_3_stability_necessity():
    report = run_sweep(SweepParams(mode=MODE_NECESSITY, **BOUNDS), workers=1)
    witnessed = {tuple(v["roots"]) for v in report["violations"]}
    ok = report["pass"] and len(witnessed) >= 1 and (0, 4) in witnessed
    announce(
        3,
        ok,
        f"admissible-but-unstable sweep finds {len(witnessed)} violating chains, "
        f"(0, 4) witnessed at heights "
        f"{[v['detail']['height'] for v in report['violations'] if v['roots'] == [0, 4]]}",
    )


def test_criterion_4_rank1_degree_identity():
    failures = 0
    for a in range(6):
        for k in range(-12, 13):
            b = Fraction(k, 6)
            unfiltered, filtered = rank1_degrees(a, b)
            jump = rank1_jump(a, b)
            if filtered != b or unfiltered + jump != b or not 0 <= jump < 1:
                failures += 1
    announce(
        4,
        failures == 0,
        f"rank-1 degree identity exact on all 6 x 25 (a, b) pairs: {failures} failures, zero tolerance",
    )


def test_criterion_5_residue_round_trips():
    blocks = [
        ResidueBlock(Fraction(nb, 8), Fraction(nu, 6), Fraction(nv))
        for nb in range(-16, 17)  # beta in {-2..2 step 1/8}, includes step 1/4
        for nu in range(6)  # u in {0, 1/6, ..., 5/6}
        for nv in (-1, 0, 1)
    ]
    failures = sum(
        1
        for block in blocks
        if connection_to_rep(rep_to_connection(block)) != block
        or higgs_to_rep(rep_to_higgs(block)) != block
    )
    ok = failures == 0 and len(blocks) >= 500
    announce(
        5,
        ok,
        f"residue table round trips exact on {len(blocks)} blocks (>= 500), "
        f"{failures} failures, zero tolerance",
    )


def test_criterion_6_metric_numerics():
    started = time.perf_counter()
    report = verification_report(count=20, seed=0, h=1e-4, h_nested=1e-3)
    wall = time.perf_counter() - started
    by_name = {row["check_name"]: row for row in report["checks"]}
    required = {
        "equivariance": 1e-10,
        "theta_vs_finite_difference": 1e-5,
        "harmonic_equation": 1e-4,
        "harmonic_convergence_order_deviation": 0.3,
        "theta_nilpotent": 1e-12,
        "conjugated_higgs_constant": 1e-10,
        "scaling_conjugation": 1e-10,
        "higgs_form_closedness": 1e-5,
    }
    ok = wall < 10.0
    for name, tolerance in required.items():
        row = by_name[name]
        ok = ok and row["tolerance"] == tolerance and row["max_residual"] < tolerance
    announce(
        6,
        ok,
        f"metric numerics over 20 points: all residuals within stated tolerances, "
        f"wall {wall:.2f}s (< 10s); worst rows: "
        + ", ".join(f"{n}={by_name[n]['max_residual']:.2e}" for n in required),
    )


def test_criterion_7_worker_determinism(theorem_sweep):
    single = {k: v for k, v in theorem_sweep.items() if k not in ("timing_seconds", "_wall")}
    eight = run_sweep(SweepParams(**BOUNDS), workers=8)
    eight = {k: v for k, v in eight.items() if k != "timing_seconds"}
    same = json.dumps(single, sort_keys=True) == json.dumps(eight, sort_keys=True)
    announce(
        7,
        same,
        "sweep reports with 1 worker and 8 workers are byte-identical with timing excluded",
    )


def test_sanity_sweep_covers_the_handchecked_chain(theorem_sweep):
    # the stable zigzag (4,2,0,4,2,0,-2) normalizes to (0,-2,-4,0,-2,-4,-6)
    normalized = RootSequence((0, -2, -4, 0, -2, -4, -6))
    profile = multiplicities(normalized)
    assert profile.counts == {0: 2, -2: 2, -4: 2, -6: 1}
    assert theorem_sweep["per_n"]["7"]["stable"] >= 1
