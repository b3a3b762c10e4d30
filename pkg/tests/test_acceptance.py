"""Acceptance suite: the nine exit criteria, one printed line each.

Each test prints "ACCEPTANCE n: PASS/FAIL - detail" (run pytest -s to see
the lines on success) and asserts at the stated tolerance.  Runtime caps
are asserted where the criterion states one.
"""

import math
import time

import pytest

import oracles
from systolab import (
    BoundParams,
    CrokeDisk,
    EuclideanDisk,
    HeightDisk,
    SurfaceSummary,
    build_flat_torus,
    check_surface_against_bounds,
    count_loops,
    entropy_upper_bound,
    entropy_upper_from_inj,
    estimate_entropy,
    genus_bound_general,
    genus_bound_half_inj,
    genus_cap,
    homological_systole,
    loewner_ratio,
    loop_growth_sample,
    mesh_area,
    nonpositive_center_count,
    betti_genus_bound,
    optimize_general_bound,
    optimize_half_inj_bound,
    run_all_claims,
)
from systolab.report import any_failed


def check(num: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_general_genus_bound():
    start = time.perf_counter()
    value = genus_bound_general(BoundParams(alpha=0.026377, beta=0.394491, delta=1e-6))
    elapsed = time.perf_counter() - start
    ok = abs(value - 16.8728) <= 5e-4 and genus_cap(value) == 17 and elapsed < 0.01
    check(1, ok, f"general chain value {value:.6f} (target 16.8728 +/- 5e-4), genus cap {genus_cap(value)}")


def test_criterion_2_feasibility_margin():
    bound = 0.5 - 4.0 * 0.026377
    ok = 0.394491 < bound and abs(bound - 0.394492) <= 1e-12
    check(2, ok, f"margin holds exactly as printed: 0.394491 < {bound!r} = 0.394492")


def test_criterion_3_half_inj_genus_bound():
    start = time.perf_counter()
    value = genus_bound_half_inj(0.065734)
    elapsed = time.perf_counter() - start
    ok = abs(value - 15.9493) <= 5e-4 and genus_cap(value) == 16 and elapsed < 0.01
    check(3, ok, f"half-injectivity value {value:.6f} (target 15.9493 +/- 5e-4), genus cap {genus_cap(value)}")


def test_criterion_4_nonpositive_chain():
    centers = nonpositive_center_count(math.sqrt(3.0) / 2.0, 1.0)
    betti = betti_genus_bound(8)
    reports = run_all_claims()
    betti_claim = next(r for r in reports if r.claim_id == "betti_step")
    ok = (
        abs(centers - 8.64252) <= 1e-4
        and math.floor(centers) == 8
        and betti == 10.5
        and betti_claim.verdict == "flagged"
        and betti_claim.reference == 10.25
        and not any_failed(reports)
        and math.floor(betti) == 10
    )
    check(
        4,
        ok,
        f"center count {centers:.5f} -> cap 8; quarter-product step recomputes to "
        f"{betti} (printed 10.25, flagged, suite green); genus cap {math.floor(betti)}",
    )


def test_criterion_5_optimizer_general():
    start = time.perf_counter()
    result = optimize_general_bound(1e-6, budget=200_000, seed=12345)
    elapsed = time.perf_counter() - start
    repeat = optimize_general_bound(1e-6, budget=200_000, seed=12345)
    deterministic = (
        repeat.best_params == result.best_params
        and repeat.best_value == result.best_value
        and repeat.evaluations == result.evaluations
    )
    feasible = all(s > 0.0 for s in result.slacks.values())
    ok = (
        feasible
        and result.best_value <= 16.8728 + 1e-3
        and abs(result.best_params.alpha - 0.026377) <= 5e-3
        and abs(result.best_params.beta - 0.394491) <= 5e-3
        and deterministic
        and elapsed < 10.0
    )
    check(
        5,
        ok,
        f"optimizer value {result.best_value:.6f} at alpha {result.best_params.alpha:.6f}, "
        f"beta {result.best_params.beta:.6f}; deterministic repeat; {elapsed:.2f}s < 10s",
    )


def test_criterion_6_optimizer_half_inj():
    start = time.perf_counter()
    result = optimize_half_inj_bound(budget=10_000, seed=0)
    elapsed = time.perf_counter() - start
    ok = (
        abs(result.best_params.eta - 0.065734) <= 1e-3
        and result.best_value <= 15.9493 + 1e-3
        and elapsed < 1.0
    )
    check(
        6,
        ok,
        f"optimizer value {result.best_value:.6f} at eta {result.best_params.eta:.6f}; "
        f"{elapsed:.3f}s < 1s",
    )


def test_criterion_7_hexagonal_torus():
    start = time.perf_counter()
    mesh = build_flat_torus((1.0, 0.0), (0.5, math.sqrt(3.0) / 2.0), 6)
    area = mesh_area(mesh)
    witness = homological_systole(mesh)
    brute = oracles.brute_force_systole(mesh)
    ratio = loewner_ratio(witness.length, area)
    verdicts = {r.claim_id: r for r in check_surface_against_bounds(mesh)}
    elapsed = time.perf_counter() - start
    ok = (
        abs(area - math.sqrt(3.0) / 2.0) <= 1e-12
        and abs(witness.length - 1.0) <= 1e-12
        and abs(witness.length - brute) <= 1e-12
        and abs(ratio - 2.0 / math.sqrt(3.0)) <= 1e-9
        and verdicts["loewner_ratio"].note == "Loewner boundary case"
        and elapsed < 1.0
    )
    check(
        7,
        ok,
        f"hexagonal torus: area {area:.12f}, systole {witness.length!r} == brute force, "
        f"ratio {ratio:.9f}, verdict 'Loewner boundary case'; {elapsed:.2f}s < 1s",
    )


def test_criterion_8_property_suite(
    square_torus3, square_torus4, square_torus5, wide_torus4, genus2_mesh
):
    start = time.perf_counter()
    import random

    ok = True
    notes = []

    # Scale invariance of the ratio and 1/lambda scaling of entropy bounds.
    for lam in (0.5, 2.0, 7.3):
        base_ratio = loewner_ratio(1.3, 0.9)
        ok &= abs(loewner_ratio(lam * 1.3, lam * lam * 0.9) / base_ratio - 1.0) <= 1e-12
        params = BoundParams(alpha=0.03, beta=0.2)
        s1 = SurfaceSummary(genus=2, systole=1.0, area=1.4)
        s2 = SurfaceSummary(genus=2, systole=lam, area=lam * lam * 1.4)
        for m1, m2 in (
            (CrokeDisk(), CrokeDisk()),
            (HeightDisk(1e-5), HeightDisk(lam * 1e-5)),
        ):
            h1 = entropy_upper_bound(s1, params, m1).h_upper
            h2 = entropy_upper_bound(s2, params, m2).h_upper
            ok &= abs(h2 * lam / h1 - 1.0) <= 1e-12
        i1 = entropy_upper_from_inj(0.5, 1.1, 0.07).h_upper
        i2 = entropy_upper_from_inj(lam * 0.5, lam * lam * 1.1, 0.07).h_upper
        ok &= abs(i2 * lam / i1 - 1.0) <= 1e-12
    notes.append("scaling")

    # Monotonicity in delta on 100 feasible samples.
    rng = random.Random(2024)
    done = 0
    while done < 100:
        alpha = rng.uniform(3e-6, 1.0 / 18.0)
        beta = rng.uniform(5.0 * alpha, 0.5 - 4.0 * alpha)
        p_lo = BoundParams(alpha=alpha, beta=beta, delta=1e-6)
        hi_delta = min(alpha / 2.0 * 0.9, 1e-3)
        if not p_lo.genus_chain_feasible() or hi_delta <= 1e-6:
            continue
        p_hi = BoundParams(alpha=alpha, beta=beta, delta=hi_delta)
        ok &= genus_bound_general(p_hi) > genus_bound_general(p_lo)
        done += 1
    notes.append("delta-monotonicity x100")

    # Disk model ordering at 100 radii.
    croke, euclid = CrokeDisk(), EuclideanDisk()
    for _ in range(100):
        r = rng.uniform(1e-9, 100.0)
        ok &= croke.area_lower(r) < euclid.area_lower(r)
    notes.append("croke<euclid x100")

    # Systole equals exhaustive enumeration on the <= 30 vertex corpus.
    corpus = (square_torus3, square_torus4, square_torus5, wide_torus4, genus2_mesh)
    for mesh in corpus:
        assert mesh.n_vertices <= 30
        ok &= abs(
            homological_systole(mesh).length - oracles.brute_force_systole(mesh)
        ) <= 1e-12
    notes.append(f"systole==brute force x{len(corpus)}")

    elapsed = time.perf_counter() - start
    ok &= elapsed < 30.0
    check(8, bool(ok), f"{', '.join(notes)}; {elapsed:.2f}s < 30s")


def test_criterion_9_growth_and_entropy(square_torus4, genus2_polygon):
    start = time.perf_counter()

    sample = loop_growth_sample(square_torus4, [float(t) for t in range(1, 21)])
    est = estimate_entropy(sample)
    torus_ok = est.h_est <= 0.1

    oracle_counts = oracles.WordOracle(2).count_elements_by_length(6)
    package_counts = [count_loops(genus2_polygon, 0, float(t)) for t in range(7)]
    words_ok = package_counts == oracle_counts

    elapsed = time.perf_counter() - start
    ok = torus_ok and words_ok and elapsed < 60.0
    check(
        9,
        ok,
        f"square torus h_est {est.h_est:.4f} <= 0.1 at T_max=20; genus-2 polygon "
        f"counts {package_counts} match the word-enumeration oracle; {elapsed:.1f}s < 60s",
    )
