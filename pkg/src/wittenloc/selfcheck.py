"""Built-in verification battery behind the ``selfcheck`` subcommand.

Each check mirrors one of the package's acceptance properties: special
function cross-checks, localization on the sphere, the doubling identity,
reciprocity of the graded Witten class, argument-choice behaviour and the
genus fixture.  Checks return (name, passed, detail) records; the CLI
prints one line per record.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .cohomology import RingSpec, exp_class, witten_class
from .equivariant import (
    equivariant_euler_antiholo,
    graded_witten_class,
    loopspace_regularized_top_chern,
    s2_example,
    top_chern_antiholo,
    verify_closedness_s2,
    witten_genus,
)
from .fixtures import (
    nonstring_8fold,
    point_manifold,
    random_real_bundle,
    string_4fold,
    string_8fold,
)
from .lattice import (
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


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _max_coeff(obj):
    """Largest coefficient magnitude of a CohomClass or EquivariantClass."""
    worst = 0.0
    stack = [obj]
    while stack:
        item = stack.pop()
        if hasattr(item, "terms"):
            stack.extend(item.terms.values())
        else:
            worst = max(worst, abs(complex(item)))
    return worst


def check_g2_consistency(tol=1e-8, pi_tol=1e-9):
    taus = (1j, 2j, (1 + 3j) / 2)
    worst = 0.0
    for tau in taus:
        direct = g2_regularized(Lattice.from_tau(tau))
        via_eta = g2_via_eta(tau)
        worst = max(worst, abs(direct - via_eta))
    pi_err = abs(g2_regularized(Lattice.square()) - math.pi)
    passed = worst <= tol and pi_err <= pi_tol
    return CheckResult(
        "g2-eta-consistency",
        passed,
        f"max |iterated - eta formula| = {worst:.3e}, |G2(i) - pi| = {pi_err:.3e}",
    )


def check_eisenstein_symmetry(tol_g6=1e-10, tol_mod=1e-8, radius=300.0):
    g6 = abs(eisenstein(Lattice.square(), 6, 200.0))
    tau = 2j
    lhs = eisenstein(Lattice.from_tau(-1 / tau), 4, radius)
    rhs = tau**4 * eisenstein(Lattice.from_tau(tau), 4, radius)
    mod = abs(lhs - rhs)
    passed = g6 <= tol_g6 and mod <= tol_mod
    return CheckResult(
        "eisenstein-symmetry-modularity",
        passed,
        f"|G6(Z[i])| = {g6:.3e}, modularity defect = {mod:.3e}",
    )


def _sigma_test_points(count=20, r_max=0.4):
    return [
        (0.1 + (r_max - 0.1) * k / (count - 1))
        * cmath.exp(2j * math.pi * k / count)
        for k in range(count)
    ]


def check_sigma_consistency(tol_eval=1e-6, tol_recip=1e-12):
    lat = Lattice.square()
    series = sigma_series(lat, 24)
    worst = 0.0
    for z in _sigma_test_points():
        worst = max(worst, abs(sigma_direct(z, lat, 100.0) - series(z)))
    wit = witten_char_series(lat, 12)
    sig_over_z = sigma_series(lat, 13).shift_down(1)
    prod = wit * sig_over_z
    recip = max(
        abs(prod.coefficient(0) - 1.0),
        max(abs(prod.coefficient(k)) for k in range(1, 13)),
    )
    passed = worst <= tol_eval and recip <= tol_recip
    return CheckResult(
        "sigma-series-vs-product",
        passed,
        f"max eval gap = {worst:.3e}, reciprocal defect = {recip:.3e}",
    )


def check_s2_localization(tol=1e-6):
    four_pi = 4.0 * math.pi
    worst_lhs = 0.0
    rhs_exact = True
    for lam in (1, 1j, 3 + 2j):
        result = s2_example(lam)
        worst_lhs = max(worst_lhs, abs(result.lhs_numeric - four_pi))
        rhs_exact = rhs_exact and result.rhs_exact == four_pi
    residual = verify_closedness_s2(1)
    passed = worst_lhs <= tol and rhs_exact and residual <= tol
    return CheckResult(
        "s2-localization",
        passed,
        f"quadrature gap = {worst_lhs:.3e}, rhs exact = {rhs_exact}, "
        f"closedness residual = {residual:.3e}",
    )


def check_doubling_identity(samples=10, seed=7):
    rng = random.Random(seed)
    ring = RingSpec((("x", 2), ("y", 2)), 8, {})
    choice = ArgumentChoice(0.0)
    failures = 0
    for _ in range(samples):
        bundle = random_real_bundle(rng, ring)
        eul = equivariant_euler_antiholo(bundle, choice, ring=ring)
        h = bundle.real_rank // 2
        rhs = ((-1) ** h) * top_chern_antiholo(bundle.complexification, ring=ring)
        if not (eul.squared() == rhs):
            failures += 1
    return CheckResult(
        "doubling-identity",
        failures == 0,
        f"{samples - failures}/{samples} random bundles match exactly",
    )


def check_witten_reciprocal(tol=1e-12):
    lat = Lattice.square()
    worst = 0.0
    for m in (point_manifold(), string_4fold(), string_8fold()):
        chern = loopspace_regularized_top_chern(m, lat)
        wit = graded_witten_class(m, lat)
        defect = (chern * wit) - 1
        worst = max(worst, _max_coeff(defect))
    passed = worst <= tol
    return CheckResult(
        "witten-reciprocal",
        passed,
        f"max |loopspace class x Witten class - 1| = {worst:.3e}",
    )


def check_argument_invariance(tol=1e-12):
    lat1 = Lattice(1, 1j)
    lat2 = Lattice(1j, -1)  # same lattice, rotated presentation
    ac1 = ArgumentChoice.for_lattice(lat1)
    ac2 = ArgumentChoice.for_lattice(lat2)
    m = string_8fold()
    w1 = witten_class(m, lat1, ac1)
    w2 = witten_class(m, lat2, ac2)
    string_gap = _max_coeff(w1 - w2)
    mn = nonstring_8fold()
    v1 = witten_class(mn, lat1, ac1)
    v2 = witten_class(mn, lat2, ac2)
    delta = g2_regularized(lat1, ac1) - g2_regularized(lat2, ac2)
    p1 = mn.tangent.pontryagin_class(1, mn.ring)
    predicted = v2 * exp_class(delta * p1)
    nonstring_gap = _max_coeff(v1 - predicted)
    passed = string_gap <= tol and nonstring_gap <= tol
    return CheckResult(
        "argument-choice",
        passed,
        f"string gap = {string_gap:.3e}, "
        f"non-string predicted-factor gap = {nonstring_gap:.3e}",
    )


def check_genus_fixture(tol=1e-10):
    lat = Lattice.square()
    m = string_8fold(p2_integral=1)
    result = witten_genus(m, lat)
    g4 = eisenstein_auto(lat, 4)[0]
    gap = abs(result.value - (-g4))
    passed = gap <= tol and result.xi_power == -4
    return CheckResult(
        "witten-genus-fixture",
        passed,
        f"|genus + G4| = {gap:.3e} at xibar^{result.xi_power}",
    )


ALL_CHECKS = (
    check_g2_consistency,
    check_eisenstein_symmetry,
    check_sigma_consistency,
    check_s2_localization,
    check_doubling_identity,
    check_witten_reciprocal,
    check_argument_invariance,
    check_genus_fixture,
)


def run_all():
    return [check() for check in ALL_CHECKS]
