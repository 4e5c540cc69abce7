"""Exit criteria.  Every check is exact and seeded; run with ``-s`` to see the
per-criterion lines, or read the summary block pytest prints at the end."""

import dataclasses
import json
import random

import pytest

from cantorchaos import cli, sampling
from cantorchaos.chaos_witness import (
    periodic_point_in,
    shared_orbit_witness,
    transitivity_witness,
    verify_shared_orbit,
)
from cantorchaos.core_space import (
    VOID,
    cylinder_image,
    cylinder_intersect,
    inclusion,
    membership,
    normalize_cylinder,
    primitive_period,
    shift_point,
)
from cantorchaos.grammar import parse_value
from cantorchaos.sensitivity import (
    SensitivityConfig,
    canonical_pair_and_eta,
    full_orbit,
    select_q,
    sensitivity_witness,
    verify_sensitive,
)
from cantorchaos.sft_oracle import (
    FULL_SHIFT,
    SftSystem,
    periodic_points,
    proposition_sweep,
    remark_demos,
    transfer_trace,
)
from cantorchaos.uniformity import SampleSpec, ball, separating_index, uns_axioms_check

SEED = 20031


def report(n, ok, detail):
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def sensitivity_runs():
    rng = random.Random(SEED + 4)
    cfg = SensitivityConfig("a")
    runs = []
    for _ in range(200):
        x = sampling.random_point(rng)
        N = sampling.random_neighborhood(rng, x)
        runs.append((x, N, sensitivity_witness(x, N, cfg)))
    return cfg, runs


def test_c01_transitivity_witnesses():
    rng = random.Random(SEED + 1)
    bad = []
    for _ in range(500):
        U, V = sampling.random_cylinder(rng), sampling.random_cylinder(rng)
        w = transitivity_witness(U, V)
        if not (w.k >= 1 and inclusion(w.W, U) and inclusion(cylinder_image(w.W, w.k), V)):
            bad.append((U, V))
    report(1, not bad, f"500 pairs, k>=1, W in U, sigma^k W in V; failures={len(bad)}")


def test_c02_periodic_density():
    rng = random.Random(SEED + 2)
    bad = []
    for _ in range(500):
        U = sampling.random_cylinder(rng)
        f = periodic_point_in(U)
        _, k, _ = normalize_cylinder(U, "a")
        if not (membership(f, U) and shift_point(f, k) == f):
            bad.append(U)
    report(2, not bad, f"500 cylinders, f in U and sigma^k f = f; failures={len(bad)}")


def test_c03_shared_orbits():
    rng = random.Random(SEED + 3)
    bad = []
    for _ in range(500):
        U, V = sampling.random_cylinder(rng), sampling.random_cylinder(rng)
        w = shared_orbit_witness(U, V)
        period = primitive_period(w.p)
        ok = (
            period is not None
            and shift_point(w.p, period) == w.p
            and membership(shift_point(w.p, w.tU), U)
            and membership(shift_point(w.p, w.tV), V)
            and verify_shared_orbit(U, V, w)
        )
        if not ok:
            bad.append((U, V))
    report(3, not bad, f"500 pairs, periodic p hits U at tU and V at tV; failures={len(bad)}")


def test_c04_sensitivity(sensitivity_runs):
    cfg, runs = sensitivity_runs
    bad = [
        x
        for x, N, w in runs
        if not (verify_sensitive(x, w, N) and w.chosen != x and membership(w.chosen, N))
    ]
    alphas = {w.alpha for _, _, w in runs}
    ok = not bad and len(alphas) == 1
    report(4, ok, f"200 runs verified, failures={len(bad)}; distinct alphas={sorted(map(str, alphas))}")


def test_c05_lemma_internals(sensitivity_runs):
    cfg, runs = sensitivity_runs
    r, s, eta = canonical_pair_and_eta(cfg)
    bad = []
    for x, N, w in runs:
        q = select_q(x, r, s, eta)
        ok = q == w.q and all(not membership(x, ball(eta, qj)) for qj in full_orbit(q))
        period = primitive_period(q)
        for i, Wi in enumerate(w.chain):
            q_ni = shift_point(q, (w.n - i) % period)
            ok = ok and Wi != VOID and membership(q_ni, Wi) and inclusion(Wi, ball(w.alpha, q_ni))
            if i:
                ok = ok and inclusion(cylinder_image(Wi, 1), w.chain[i - 1])
        if not ok:
            bad.append(x)
    report(5, not bad, f"select_q and backward chain invariants over 200 runs; failures={len(bad)}")


def test_c06_uniformity_axioms():
    reports = uns_axioms_check(SampleSpec(instances=1000, seed=SEED + 6))
    failing = [r.axiom for r in reports if not r.passed]
    rng = random.Random(SEED + 60)
    pairs = 0
    overlap = []
    while pairs < 500:
        p, q = sampling.random_point(rng), sampling.random_point(rng)
        if p == q:
            continue
        pairs += 1
        idx = separating_index(p, q)
        if cylinder_intersect(ball(idx, p), ball(idx, q)) != VOID:
            overlap.append((p, q))
    ok = not failing and not overlap
    report(6, ok, f"UNS1-5, ENT1-5 over 1000 instances failing={failing}; Hausdorff overlaps={len(overlap)}/500")


def test_c07_proposition_sweep():
    reports = proposition_sweep(2, depth=5, period_bound=10)
    disc = [r.system for r in reports if not r.equivalence_holds]
    ok = len(reports) == 16 and not disc
    report(7, ok, f"{len(reports)} systems, discrepancies={disc}")


def test_c08_periodic_counts():
    golden = SftSystem(frozenset({"11"}))
    brute = [periodic_points(golden, n)[0] for n in range(1, 13)]
    trace = [transfer_trace(golden, n) for n in range(1, 13)]
    full = [periodic_points(FULL_SHIFT, n)[0] for n in range(1, 13)]
    ok = brute == trace and trace[:5] == [1, 3, 4, 7, 11] and full == [2**n for n in range(1, 13)]
    report(8, ok, f"forbid {{11}} counts {brute}; full shift 2^n up to n=12")


def test_c09_remark_independence():
    rep = remark_demos(depth=6, period_bound=12, samples=200, seed=SEED + 9)
    frozen = rep["dense_without_transitivity"]
    odo = rep["transitive_without_periodic_points"]
    ok = (
        frozen["periodic_dense"]
        and not frozen["transitive"]
        and odo["cylinder_transitive"]
        and odo["samples"] == 200
        and not odo["periodic_found"]
    )
    report(9, ok, f"frozen SFT dense={frozen['periodic_dense']} transitive={frozen['transitive']}; "
                  f"odometer depth-6 transitive={odo['cylinder_transitive']} periodic={odo['periodic_found']}")


def _random_sft(rng):
    n = rng.randint(0, 4)
    forb = {sampling.random_bits(rng, rng.randint(1, 4)) for _ in range(n)}
    return SftSystem(frozenset(forb))


def test_c10_cli(capsys):
    rng = random.Random(SEED + 10)
    makers = {
        "point": lambda: sampling.random_point(rng),
        "cylinder": lambda: sampling.random_cylinder(rng),
        "index": lambda: sampling.random_index(rng),
        "sft": lambda: _random_sft(rng),
    }
    broken = []
    for kind, make in makers.items():
        for _ in range(500):
            text = str(make())
            if str(parse_value(kind, text)) != text:
                broken.append((kind, text))

    commands = [
        ["witness-transitivity", "--u", "{a:1=1}", "--v", "{b:1=1}"],
        ["witness-sensitivity", "--x", "zero", "--nbhd", "{}", "--fiber", "a"],
        ["sft-sweep", "--max-forbidden-len", "2", "--depth", "5", "--period-bound", "10"],
    ]
    outcomes = []
    for argv in commands:
        code = cli.run(argv)
        doc = json.loads(capsys.readouterr().out)
        outcomes.append(code == 0 and doc["verified"] is True)

    real = cli.sensitivity_witness
    try:
        cli.sensitivity_witness = lambda x, N, cfg: dataclasses.replace(real(x, N, cfg), chosen=x)
        tampered = cli.run(["witness-sensitivity", "--x", "zero", "--nbhd", "{}"])
        capsys.readouterr()
    finally:
        cli.sensitivity_witness = real

    ok = not broken and all(outcomes) and tampered == 1
    report(10, ok, f"round-trip failures={len(broken)}/2000; commands ok={outcomes}; tampered exit={tampered}")
