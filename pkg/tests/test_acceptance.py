"""Acceptance suite: one test per shipped guarantee, each printing a
pass/fail line with the measured quantity at its stated tolerance."""

import json
import math
import random
import time

from wittenloc.cli import main
from wittenloc.cohomology import RingSpec, exp_class, witten_class
from wittenloc.equivariant import (
    EquivariantClass,
    equivariant_euler_antiholo,
    graded_witten_class,
    loopspace_regularized_top_chern,
    normalized_top_chern_antiholo,
    s2_example,
    top_chern_antiholo,
    verify_closedness_s2,
    witten_genus,
)
from wittenloc.fixtures import (
    nonstring_8fold,
    point_manifold,
    random_real_bundle,
    string_4fold,
    string_8fold,
)
from wittenloc.lattice import (
    ArgumentChoice,
    Lattice,
    eisenstein,
    eisenstein_auto,
    g2_regularized,
    g2_via_eta,
    sigma_direct,
    sigma_series,
    witten_char_series,
)

SQ = Lattice.square()
FOUR_PI = 4.0 * math.pi


def report(number, passed, detail):
    status = "PASS" if passed else "FAIL"
    print(f"ACCEPTANCE {number:>2} {status}: {detail}")
    assert passed, detail


def max_coeff(obj):
    worst = 0.0
    stack = [obj]
    while stack:
        item = stack.pop()
        if hasattr(item, "terms"):
            stack.extend(item.terms.values())
        else:
            worst = max(worst, abs(complex(item)))
    return worst


def test_01_s2_localization(capsys):
    t0 = time.perf_counter()
    worst_lhs = 0.0
    exact = True
    for lam in (1, 1j, 3 + 2j):
        result = s2_example(lam)
        worst_lhs = max(worst_lhs, abs(result.lhs_numeric - FOUR_PI))
        exact = exact and result.rhs_exact == FOUR_PI
    # the subcommand runs the same three weights and enforces rhs == 4pi
    cli_code = main(["localize-s2", "--tol", "1e-6"])
    capsys.readouterr()
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        report(
            1,
            worst_lhs <= 1e-6 and exact and cli_code == 0 and elapsed < 1.0,
            f"s2 localization: max |lhs - 4pi| = {worst_lhs:.3e} (tol 1e-6), "
            f"rhs exactly 4pi = {exact}, localize-s2 exit {cli_code}, "
            f"runtime {elapsed:.2f}s (< 1s)",
        )


def test_02_closedness_residual():
    t0 = time.perf_counter()
    residual = verify_closedness_s2(1)  # 100 default sample points
    elapsed = time.perf_counter() - t0
    report(
        2,
        residual <= 1e-6 and elapsed < 1.0,
        f"closedness residual = {residual:.3e} (tol 1e-6), "
        f"runtime {elapsed:.2f}s (< 1s)",
    )


def test_03_g2_consistency():
    t0 = time.perf_counter()
    worst = 0.0
    for tau in (1j, 2j, (1 + 3j) / 2):
        worst = max(
            worst, abs(g2_regularized(Lattice.from_tau(tau)) - g2_via_eta(tau))
        )
    pi_gap = abs(g2_regularized(SQ) - math.pi)
    elapsed = time.perf_counter() - t0
    report(
        3,
        worst <= 1e-8 and pi_gap <= 1e-9 and elapsed < 1.0,
        f"G2 iterated vs eta formula: max gap = {worst:.3e} (tol 1e-8), "
        f"|G2(i) - pi| = {pi_gap:.3e} (tol 1e-9), runtime {elapsed:.2f}s (< 1s)",
    )


def test_04_eisenstein_symmetry_modularity():
    t0 = time.perf_counter()
    g6 = abs(eisenstein(SQ, 6, 200.0))
    tau = 2j
    defect = abs(
        eisenstein(Lattice.from_tau(-1 / tau), 4, 300.0)
        - tau**4 * eisenstein(Lattice.from_tau(tau), 4, 300.0)
    )
    elapsed = time.perf_counter() - t0
    report(
        4,
        g6 <= 1e-10 and defect <= 1e-8 and elapsed < 5.0,
        f"|G6(Z[i])| = {g6:.3e} (tol 1e-10), modularity defect at radius 300 "
        f"= {defect:.3e} (tol 1e-8), runtime {elapsed:.2f}s (< 5s)",
    )


def test_05_sigma_consistency():
    series = sigma_series(SQ, 24)
    worst = 0.0
    for k in range(20):
        z = (0.1 + 0.3 * k / 19) * complex(
            math.cos(2 * math.pi * k / 20), math.sin(2 * math.pi * k / 20)
        )
        worst = max(worst, abs(sigma_direct(z, SQ, 100.0) - series(z)))
    wit = witten_char_series(SQ, 12)
    prod = wit * sigma_series(SQ, 13).shift_down(1)
    recip = max(
        abs(prod.coefficient(0) - 1),
        max(abs(prod.coefficient(k)) for k in range(1, 13)),
    )
    report(
        5,
        worst <= 1e-6 and recip <= 1e-12,
        f"sigma series vs product: max gap over 20 points = {worst:.3e} "
        f"(tol 1e-6), reciprocal defect to order 12 = {recip:.3e} (tol 1e-12)",
    )


def test_06_doubling_identity():
    rng = random.Random(2024)
    ring = RingSpec((("x", 2), ("y", 2)), 8, {})
    choice = ArgumentChoice(0.0)
    failures = 0
    for _ in range(50):
        v = random_real_bundle(rng, ring)
        assert v.real_rank <= 8
        eul = equivariant_euler_antiholo(v, choice, ring=ring)
        rhs = ((-1) ** (v.real_rank // 2)) * top_chern_antiholo(
            v.complexification, ring
        )
        if not (eul.squared() - rhs).is_zero():
            failures += 1
    report(
        6,
        failures == 0,
        f"doubling identity: {50 - failures}/50 randomized rational bundles "
        "(real rank <= 8) match with exact rational equality",
    )


def test_07_argument_choice():
    lat1, lat2 = Lattice(1, 1j), Lattice(1j, -1)
    ac1 = ArgumentChoice.for_lattice(lat1)
    ac2 = ArgumentChoice.for_lattice(lat2)
    # normalized classes: no argument dependence at all
    rng = random.Random(7)
    ring = RingSpec((("x", 2), ("y", 2)), 8, {})
    v = random_real_bundle(rng, ring)
    norm_gap = max_coeff(
        normalized_top_chern_antiholo(v.complexification, ring)
        - normalized_top_chern_antiholo(v.complexification, ring)
    )
    sqrt_gap = max_coeff(
        equivariant_euler_antiholo(v, ac1, ring=ring).sqrt_part
        - equivariant_euler_antiholo(v, ac2, ring=ring).sqrt_part
    )
    m = string_8fold()
    string_gap = max_coeff(witten_class(m, lat1, ac1) - witten_class(m, lat2, ac2))
    genus_gap = abs(
        witten_genus(m, lat1, ac1).value - witten_genus(m, lat2, ac2).value
    )
    mn = nonstring_8fold()
    v1 = witten_class(mn, lat1, ac1)
    v2 = witten_class(mn, lat2, ac2)
    delta = g2_regularized(lat1, ac1) - g2_regularized(lat2, ac2)
    p1 = mn.tangent.pontryagin_class(1, mn.ring)
    predicted_gap = max_coeff(v1 - v2 * exp_class(delta * p1))
    passed = (
        norm_gap <= 1e-12
        and sqrt_gap <= 1e-12
        and string_gap <= 1e-12
        and genus_gap <= 1e-12
        and predicted_gap <= 1e-12
    )
    report(
        7,
        passed,
        f"argument choices: normalized {norm_gap:.1e}, sqrt part {sqrt_gap:.1e}, "
        f"string class {string_gap:.1e}, genus {genus_gap:.1e}, non-string "
        f"predicted factor {predicted_gap:.1e} (all tol 1e-12)",
    )


def test_08_witten_reciprocal():
    worst = 0.0
    for m in (point_manifold(), string_4fold(), string_8fold()):
        chern = loopspace_regularized_top_chern(m, SQ)
        wit = graded_witten_class(m, SQ)
        worst = max(
            worst, max_coeff(chern * wit - EquivariantClass.one(m.ring))
        )
    report(
        8,
        worst <= 1e-12,
        f"loopspace class x graded Witten class = 1 on three fixtures, "
        f"max defect = {worst:.3e} (tol 1e-12)",
    )


def test_09_genus_fixture():
    m = string_8fold(p2_integral=1)
    result = witten_genus(m, SQ)
    g4 = eisenstein_auto(SQ, 4)[0]
    gap = abs(result.value - (-g4))
    report(
        9,
        gap <= 1e-10 and result.xi_power == -4,
        f"8-dim string fixture: genus = -G4 within {gap:.3e} (tol 1e-10) "
        f"at xibar^{result.xi_power} (expected -4)",
    )


def test_10_determinism(capsys, tmp_path):
    manifest = tmp_path / "m.json"
    manifest.write_text(
        json.dumps(
            {
                "lattice": {"tau": [0.0, 1.0]},
                "ring": {
                    "generators": [["a", 4], ["b", 8]],
                    "top_degree": 8,
                    "integral_table": {"a^2": "0", "b": "1"},
                },
                "tangent": {"dimension": 8, "pontryagin": [{}, {"b": "1"}]},
            }
        )
    )
    commands = [
        ["eisenstein", "--tau", "i", "--two-k", "4"],
        ["eisenstein", "--tau", "i", "--two-k", "2"],
        ["eta", "--tau", "i"],
        ["sigma", "--tau", "i", "--order", "8"],
        ["witten", str(manifest)],
        ["witten", str(manifest), "--symbolic", "--json"],
        ["localize-s2", "--weight", "1"],
        ["selfcheck"],
    ]
    stable = True
    for argv in commands:
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out
        if first != second:
            stable = False
            break
    with capsys.disabled():
        report(
            10,
            stable,
            "every subcommand produced byte-identical output on repeated runs",
        )
