"""Equivariant characteristic classes in the antiholomorphic sector.

Classes on the fixed locus of a torus action are Laurent polynomials in a
single degree-2 generator (written ``xibar`` here, the normalized dual of
the antiholomorphic invariant vector field) with coefficients in a
truncated cohomology ring.  The module provides:

* equivariant first Chern classes  c_1 + lam xibar  of weighted lines;
* the weight polynomial and the normalized top Chern class of an
  isotypically decomposed bundle, the latter computed through power sums
  as a finite exponential, with constant term 1 and no dependence on
  argument choices;
* equivariant Euler classes of real bundles by the doubling trick: the
  chosen square root of (-1)^(rk/2) times the top Chern class of the
  complexification, kept in factored form so that squaring and inversion
  are exact;
* the localization formula: integrate the restricted form divided by the
  Euler class of the normal bundle over each fixed component, with
  orientation signs;
* the rotation-action two-sphere example with an exact fixed-point side
  and a quadrature left-hand side, plus a finite-difference closedness
  check of its equivariant extension;
* the zeta-regularized infinite-rank top Chern class over the space of
  torus maps, whose reciprocal is the xibar-graded Witten class, and the
  Witten genus as its integral.

The holomorphic sector is the mirror image of all of this (swap the two
invariant generators and conjugate the weights); it is intentionally not
duplicated here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .cohomology import (
    RingSpec,
    genus_class,
    integrate,
    newton_power_sums,
    witten_class,
)
from .lattice import (
    ArgumentChoice,
    g2_regularized,
    sigma_series,
)
from .scalars import FormalPolynomial, GaussianRational
from .series import PowerSeries


class EquivariantClass:
    """Laurent polynomial in xibar with CohomClass coefficients.

    A term at power n with cohomological degree d has total degree d + 2n.
    """

    __slots__ = ("terms", "ring")

    def __init__(self, terms, ring):
        clean = {}
        for n, c in terms.items():
            if not c.is_zero():
                clean[int(n)] = c
        self.terms = clean
        self.ring = ring

    @classmethod
    def zero(cls, ring):
        return cls({}, ring)

    @classmethod
    def one(cls, ring):
        return cls({0: ring.one()}, ring)

    @classmethod
    def from_cohom(cls, c, power=0):
        return cls({power: c}, c.ring)

    @classmethod
    def from_graded_cohom(cls, c):
        """Grade a class by its own degrees: a degree-2k part goes to
        xibar^(-k), making every term of total degree zero."""
        return cls(
            {-deg // 2: part for deg, part in c.homogeneous_parts().items()},
            c.ring,
        )

    def coefficient(self, n):
        return self.terms.get(n, self.ring.zero())

    def is_zero(self):
        return not self.terms

    def _check_ring(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("operands live in different rings")

    def __add__(self, other):
        if not isinstance(other, EquivariantClass):
            return self + other * EquivariantClass.one(self.ring)
        self._check_ring(other)
        terms = dict(self.terms)
        for n, c in other.terms.items():
            terms[n] = terms.get(n, self.ring.zero()) + c
        return EquivariantClass(terms, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return EquivariantClass({n: -c for n, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if not isinstance(other, EquivariantClass):
            return EquivariantClass(
                {n: c * other for n, c in self.terms.items()}, self.ring
            )
        self._check_ring(other)
        out = {}
        for n1, c1 in self.terms.items():
            for n2, c2 in other.terms.items():
                prod = c1 * c2
                if prod.is_zero():
                    continue
                n = n1 + n2
                out[n] = out.get(n, self.ring.zero()) + prod
        return EquivariantClass(out, self.ring)

    def __rmul__(self, other):
        return EquivariantClass(
            {n: other * c for n, c in self.terms.items()}, self.ring
        )

    def xibar_shift(self, k):
        return EquivariantClass(
            {n + k: c for n, c in self.terms.items()}, self.ring
        )

    def inverse(self):
        """Inverse of a class of the form xibar^n0 (c0 + nilpotent)."""
        pivots = [
            (n, c.constant_term())
            for n, c in self.terms.items()
            if not (c.constant_term() == 0)
        ]
        if len(pivots) != 1:
            raise ValueError(
                "inverse requires exactly one term with a nonzero constant part"
            )
        n0, c0 = pivots[0]
        shifted = self.xibar_shift(-n0)
        if c0 == 1:
            nil = shifted - EquivariantClass.one(self.ring)
        else:
            nil = (shifted - c0 * EquivariantClass.one(self.ring)) * (1 / c0)
        # geometric series 1 - nil + nil^2 - ...; nil is nilpotent since
        # every term has positive cohomological degree
        result = EquivariantClass.one(self.ring)
        power = EquivariantClass.one(self.ring)
        sign = 1
        for _ in range(self.ring.top_degree + 1):
            power = power * nil
            if power.is_zero():
                break
            sign = -sign
            result = result + sign * power
        if c0 == 1:
            return result.xibar_shift(-n0)
        return (result * (1 / c0)).xibar_shift(-n0)

    def is_homogeneous_total(self, total_degree):
        """Check total degree = cohomological degree + 2 (xibar power)."""
        return all(
            c.is_homogeneous(total_degree - 2 * n)
            for n, c in self.terms.items()
        )

    def map_coefficients(self, fn):
        return EquivariantClass(
            {n: c.map_coefficients(fn) for n, c in self.terms.items()}, self.ring
        )

    def __eq__(self, other):
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        return self.ring == other.ring and (self - other).is_zero()

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for n in sorted(self.terms):
            c = self.terms[n]
            if n == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"({c})*xibar^{n}")
        return " + ".join(parts)

    def __repr__(self):
        return f"EquivariantClass({self})"


def exp_equivariant(nil):
    """exp of an equivariant class all of whose terms are nilpotent."""
    for c in nil.terms.values():
        if not (c.constant_term() == 0):
            raise ValueError("exp_equivariant requires nilpotent input")
    result = EquivariantClass.one(nil.ring)
    term = EquivariantClass.one(nil.ring)
    m = 1
    while True:
        term = (term * nil).map_coefficients(lambda c, m=m: c / m)
        if term.is_zero():
            break
        result = result + term
        m += 1
        if m > nil.ring.top_degree + 2:
            break
    return result


@dataclass(frozen=True)
class IsotypicComponent:
    """One isotypic piece: a weight, a rank, and Chern classes c_1..c_rank."""

    weight: object
    rank: int
    chern: tuple

    def __post_init__(self):
        object.__setattr__(self, "chern", tuple(self.chern))
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if len(self.chern) > self.rank:
            raise ValueError("more Chern classes than the rank allows")
        for j, c in enumerate(self.chern, start=1):
            if not c.is_homogeneous(2 * j):
                raise ValueError(f"c_{j} must be homogeneous of degree {2 * j}")

    def weight_complex(self):
        return complex(self.weight)

    def chern_list(self, ring):
        """c_1..c_rank padded with zeros."""
        out = list(self.chern)
        while len(out) < self.rank:
            out.append(ring.zero())
        return out


@dataclass(frozen=True)
class IsotypicBundle:
    """Zero-weight part plus the effectively acted components."""

    effective: tuple
    zero_component: object = None

    def __post_init__(self):
        comps = tuple(self.effective)
        object.__setattr__(self, "effective", comps)
        seen = set()
        for comp in comps:
            w = comp.weight_complex()
            if w == 0:
                raise ValueError("effective components must have nonzero weight")
            if w in seen:
                raise ValueError("effective weights must be pairwise distinct")
            seen.add(w)

    @property
    def effective_rank(self):
        return sum(c.rank for c in self.effective)

    @property
    def total_rank(self):
        zero_rank = self.zero_component[0] if self.zero_component else 0
        return zero_rank + self.effective_rank


@dataclass(frozen=True)
class RealEquivariantBundle:
    """Real bundle given through its complexification: weights in opposite
    pairs of equal rank, no zero-weight part."""

    complexification: IsotypicBundle

    def __post_init__(self):
        b = self.complexification
        if b.zero_component:
            raise ValueError("the complexification must have no zero-weight part")
        ranks = {c.weight_complex(): c.rank for c in b.effective}
        for w, r in ranks.items():
            if -w not in ranks or ranks[-w] != r:
                raise ValueError(
                    "weights must occur in opposite pairs of equal rank"
                )

    @property
    def real_rank(self):
        return self.complexification.effective_rank

    def paired_components(self, arg_choice):
        """(upper, lower) pairs; the upper member has its argument in
        [base_angle, base_angle + pi), so arg(-w) = arg(w) - pi."""
        by_weight = {c.weight_complex(): c for c in self.complexification.effective}
        pairs = []
        for w, comp in sorted(by_weight.items(), key=lambda kv: (abs(kv[0]), cmath.phase(kv[0]))):
            if arg_choice.is_upper(w):
                pairs.append((comp, by_weight[-w]))
        return pairs


def first_chern_antiholo(c1, weight):
    """Equivariant first Chern class of a weighted line: c_1 + lam xibar."""
    if not (c1.is_zero() or c1.is_homogeneous(2)):
        raise ValueError("c_1 must be homogeneous of degree 2")
    ring = c1.ring
    terms = {0: c1}
    if not (weight == 0):
        terms[1] = weight * ring.one()
    return EquivariantClass(terms, ring)


def weight_polynomial_antiholo(bundle, arg_choice, ring=None):
    """Weight polynomial of the effective part: the product of the weights
    (with multiplicity the ranks) times xibar to the effective rank.

    Integer powers only, so the value does not depend on the argument
    choice; the choice governs the phase once square roots are taken
    downstream (see the Euler class).
    """
    if not bundle.effective:
        raise ValueError("weight polynomial needs a nonempty effective part")
    if ring is None:
        ring = _bundle_ring(bundle)
    scalar = 1
    for comp in bundle.effective:
        scalar = scalar * comp.weight**comp.rank
    return EquivariantClass({bundle.effective_rank: scalar * ring.one()}, ring)


def _bundle_ring(bundle):
    for comp in bundle.effective:
        for c in comp.chern:
            return c.ring
    if bundle.zero_component:
        for c in bundle.zero_component[1]:
            return c.ring
    raise ValueError("cannot infer the ring; pass it explicitly")


def _normalized_log_exponent(bundle, ring, half=False):
    """The exponent sum_{components} sum_k (-1)^(k+1) s_k / (k w^k) xibar^(-k),
    optionally halved (for the square root in the Euler class)."""
    max_k = ring.top_degree // 2
    acc = EquivariantClass.zero(ring)
    if max_k == 0:
        return acc
    for comp in bundle.effective:
        if comp.weight == 0:
            raise ValueError("zero weight in the effective part")
        s = newton_power_sums(comp.chern_list(ring), max_k, ring)
        terms = {}
        for k in range(1, max_k + 1):
            if s[k - 1].is_zero():
                continue
            factor = ((-1) ** (k + 1)) * comp.weight ** (-k)
            coeff = (s[k - 1] * factor) / k
            if half:
                coeff = coeff / 2
            terms[-k] = coeff
        acc = acc + EquivariantClass(terms, ring)
    return acc


def normalized_top_chern_antiholo(bundle, ring=None):
    """Normalized antiholomorphic top Chern class of the effective part:

        prod_lam prod_i (1 + alpha_i(E_lam) xibar^(-1) / lam),

    computed as exp of the power-sum logarithm.  Constant term 1; no
    argument choice enters (only integer powers of the weights appear).
    """
    if ring is None:
        ring = _bundle_ring(bundle)
    return exp_equivariant(_normalized_log_exponent(bundle, ring))


def top_chern_antiholo(bundle, ring=None):
    """Equivariant top Chern class of the effective part, as the direct
    product over components of sum_j c_j (lam xibar)^(rank - j).

    Independent of the power-sum route; used to cross-check the factored
    Euler class through the doubling identity.
    """
    if ring is None:
        ring = _bundle_ring(bundle)
    result = EquivariantClass.one(ring)
    for comp in bundle.effective:
        chern = [ring.one()] + comp.chern_list(ring)
        terms = {}
        for j in range(0, comp.rank + 1):
            power = comp.rank - j
            coeff = chern[j] * comp.weight**power
            if not coeff.is_zero():
                terms[power] = terms.get(power, ring.zero()) + coeff
        result = result * EquivariantClass(terms, ring)
    return result


@dataclass(frozen=True)
class EulerClass:
    """Equivariant Euler class in factored form.

    eul = (i xibar)^(half_rank) * prod lam^(rank_lam / 2) * sqrt_part,

    stored as ``scalar`` = i^half_rank times the pairwise square-root
    product and ``sqrt_part`` = the square root of the normalized top
    Chern class of the complexification.  Keeping the factorization makes
    ``squared`` and ``inverse_class`` exact for exact inputs: the paired
    square roots combine as lam^(1/2) (-lam)^(1/2) = -i lam without any
    floating-point root extraction.
    """

    half_rank: int
    scalar: object
    sqrt_part: EquivariantClass

    def as_class(self):
        return (self.scalar * self.sqrt_part).xibar_shift(self.half_rank)

    def squared(self):
        scalar_sq = self.scalar * self.scalar
        return (scalar_sq * (self.sqrt_part * self.sqrt_part)).xibar_shift(
            2 * self.half_rank
        )

    def inverse_class(self):
        inv_scalar = 1 / self.scalar
        return (inv_scalar * self.sqrt_part.inverse()).xibar_shift(-self.half_rank)


def equivariant_euler_antiholo(v, arg_choice, ring=None):
    """Equivariant Euler class of a real bundle in the antiholomorphic
    sector, for the orientation induced by the argument choice.

    The square root of the normalized class is the principal series branch
    (constant term 1); the weight square roots follow the argument choice,
    and each opposite pair contributes exactly -i times its upper weight.
    """
    bundle = v.complexification
    if ring is None:
        ring = _bundle_ring(bundle)
    half_rank = v.real_rank // 2
    exact = all(
        isinstance(c.weight, GaussianRational) for c in bundle.effective
    )
    i_unit = GaussianRational.i() if exact else 1j
    scalar = i_unit**half_rank
    for upper, _lower in v.paired_components(arg_choice):
        scalar = scalar * ((-i_unit) * upper.weight) ** upper.rank
    sqrt_part = exp_equivariant(_normalized_log_exponent(bundle, ring, half=True))
    return EulerClass(half_rank, scalar, sqrt_part)


class TwoVariableClass:
    """Debug representation with both invariant generators (xi and xibar).

    Terms are keyed by (xi power, xibar power).  Only small bundles go
    through this path; it exists to check that evaluating xi = 0 in the
    full Euler data reproduces the antiholomorphic computation.
    """

    __slots__ = ("terms", "ring")

    def __init__(self, terms, ring):
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}
        self.ring = ring

    @classmethod
    def one(cls, ring):
        return cls({(0, 0): ring.one()}, ring)

    def __mul__(self, other):
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                prod = c1 * c2
                if prod.is_zero():
                    continue
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, self.ring.zero()) + prod
        return TwoVariableClass(out, self.ring)

    def restrict_xi_zero(self):
        return EquivariantClass(
            {b: c for (a, b), c in self.terms.items() if a == 0}, self.ring
        )


def euler_two_variable(v, arg_choice, ring=None):
    """Full two-variable Euler class of a real bundle over a trivial-action
    base: the product over the upper components of

        sum_j c_j (w xibar - conj(w) xi)^(rank - j),

    which is the top Chern class of the complex structure selected by the
    argument choice.  Restricting xi = 0 must reproduce
    ``equivariant_euler_antiholo(...).as_class()`` exactly.
    """
    bundle = v.complexification
    if ring is None:
        ring = _bundle_ring(bundle)
    result = TwoVariableClass.one(ring)
    for upper, _lower in v.paired_components(arg_choice):
        w = upper.weight
        wbar = w.conjugate() if hasattr(w, "conjugate") else complex(w).conjugate()
        chern = [ring.one()] + upper.chern_list(ring)
        terms = {}
        for j in range(0, upper.rank + 1):
            c = chern[j]
            if c.is_zero():
                continue
            p = upper.rank - j
            # (w xibar - wbar xi)^p expanded binomially
            for t in range(0, p + 1):
                coeff = (
                    math.comb(p, t) * (w ** (p - t)) * ((-1) ** t) * (wbar**t)
                )
                key = (t, p - t)
                add = c * coeff
                terms[key] = terms.get(key, ring.zero()) + add
        result = result * TwoVariableClass(terms, ring)
    return result


def localization_rhs(omega_restricted, nu, arg_choice, orientation_signs):
    """Fixed-point side of the localization formula.

    Accepts one fixed component or parallel sequences of components: the
    restricted forms, the normal bundles (no zero-weight part allowed) and
    the orientation signs.  Each contribution is the integral of the
    restricted form times the inverse Euler class of the normal bundle;
    the result is returned per xibar power so the caller can check the
    degree bookkeeping.
    """
    if isinstance(omega_restricted, EquivariantClass):
        omega_restricted = [omega_restricted]
        nu = [nu]
        orientation_signs = [orientation_signs]
    omega_restricted = list(omega_restricted)
    nu = list(nu)
    orientation_signs = list(orientation_signs)
    if not len(omega_restricted) == len(nu) == len(orientation_signs):
        raise ValueError("component lists must have equal length")
    totals = {}
    for omega, bundle, sign in zip(omega_restricted, nu, orientation_signs):
        if sign not in (1, -1):
            raise ValueError("orientation signs must be +1 or -1")
        if bundle.complexification.zero_component:
            raise ValueError("normal bundles carry no zero-weight part")
        eul = equivariant_euler_antiholo(bundle, arg_choice, ring=omega.ring)
        contrib = omega * eul.inverse_class()
        for n, c in contrib.terms.items():
            value = integrate(c)
            if value == 0:
                continue
            totals[n] = totals.get(n, 0) + sign * value
    return {n: v for n, v in totals.items() if not (v == 0)}


_POINT_RING = RingSpec((), 0, {(): 1})


@dataclass(frozen=True)
class S2LocalizationResult:
    """Both sides of the two-sphere localization check."""

    lhs_numeric: float
    rhs_exact: float
    rhs_terms: dict
    weight: complex


def s2_sphere_area_quadrature(n=64):
    """Area of the unit sphere by a tensor-product Gauss-Legendre rule in
    spherical coordinates."""
    x, wx = np.polynomial.legendre.leggauss(n)
    theta = 0.5 * math.pi * (x + 1.0)
    wtheta = 0.5 * math.pi * wx
    phi_w = math.pi * wx  # phi = pi (x + 1), weight pi wx
    integrand = np.sin(theta)
    return float(np.sum(wtheta * integrand) * np.sum(phi_w))


def s2_example(lam, arg_choice=None, quadrature_points=64, flip_orientation=False):
    """Rotation action on the round two-sphere driven by the character of a
    nonzero lattice weight.

    The left-hand side integrates the volume form numerically; the
    right-hand side runs the localization formula on the two fixed points
    with exact rational-complex arithmetic (the overall factor pi is kept
    symbolic until the end), so the weight cancels identically and the
    value is exactly 4 pi.

    Fixed-point data: the restricted equivariant form vanishes at the pole
    fixed by rho = infinity and equals -4 pi lam xibar at the other; the
    normal bundle has weights +-lam; the orientation signs follow the
    convention arg(-lam) = arg(lam) - pi, under which the pole at infinity
    counts positively.
    """
    lam_c = complex(lam)
    if lam_c == 0:
        raise ValueError("the weight must be nonzero")
    if arg_choice is None:
        arg_choice = ArgumentChoice(0.0)
    lam_exact = GaussianRational.from_complex(lam_c)
    ring = _POINT_RING
    nu = RealEquivariantBundle(
        IsotypicBundle(
            (
                IsotypicComponent(lam_exact, 1, ()),
                IsotypicComponent(-lam_exact, 1, ()),
            )
        )
    )
    # restricted forms in units of pi
    omega_north = EquivariantClass.zero(ring)
    omega_south = EquivariantClass({1: (-4 * lam_exact) * ring.one()}, ring)
    # orientation induced by the argument choice: positive at the pole
    # whose weight is the upper member of the pair
    north_sign = 1 if arg_choice.is_upper(lam_c) else -1
    if flip_orientation:
        north_sign = -north_sign
    signs = (north_sign, -north_sign)
    rhs_units = localization_rhs(
        [omega_north, omega_south], [nu, nu], arg_choice, signs
    )
    rhs_terms = {n: complex(v) * math.pi for n, v in rhs_units.items()}
    rhs_exact = rhs_terms.get(0, 0j).real
    lhs = s2_sphere_area_quadrature(quadrature_points)
    return S2LocalizationResult(lhs, rhs_exact, rhs_terms, lam_c)


def closedness_sample_points(count=100, r_min=0.15, r_max=2.5):
    """Deterministic golden-angle spiral in an annulus of the chart."""
    golden = math.pi * (3.0 - math.sqrt(5.0))
    pts = []
    for k in range(count):
        r = r_min + (r_max - r_min) * (k + 0.5) / count
        t = golden * k
        pts.append((r * math.cos(t), r * math.sin(t)))
    return pts


def verify_closedness_s2(lam, sample_points=None, step=1e-5):
    """Max residual of the closedness identity for the equivariant
    extension of the sphere volume form, in the stereographic chart.

    The extension adds H xibar with H = -4 pi lam / (1 + rho^2); closedness
    amounts to dH + (scale) iota_v omega = 0 where v is the rotation field
    of the character, linear in the weight.  The differential of H is taken
    by central differences (the independent check), the contraction side
    analytically; both sides are normalized by the weight, so the residual
    does not grow with it.  The zero weight is rejected: the vector field
    degenerates and the identity fails for any nonconstant H.
    """
    lam = complex(lam)
    if lam == 0:
        raise ValueError("zero weight: the rotation field vanishes")
    if sample_points is None:
        sample_points = closedness_sample_points()
    h = float(step)

    def hamiltonian(x, y):
        return -4.0 * math.pi / (1.0 + x * x + y * y)

    # v = (-i pi lam / vol) R with R the rotation field; the Cartan term
    # rescales by 2 i vol / lam, so the product is 2 pi exactly when the
    # weight cancels.  Both factors are kept to exercise the cancellation.
    v_coef = -1j * math.pi * lam
    scale = 2j / lam
    worst = 0.0
    for x, y in sample_points:
        fd_x = (hamiltonian(x + h, y) - hamiltonian(x - h, y)) / (2.0 * h)
        fd_y = (hamiltonian(x, y + h) - hamiltonian(x, y - h)) / (2.0 * h)
        f = 4.0 / (1.0 + x * x + y * y) ** 2
        contraction_x = v_coef * (-f * x)
        contraction_y = v_coef * (-f * y)
        rx = abs(fd_x + scale * contraction_x)
        ry = abs(fd_y + scale * contraction_y)
        worst = max(worst, rx, ry)
    return worst


def loopspace_regularized_top_chern(m, lattice, arg_choice=None, symbolic=False,
                                    tol=1e-10, radius=None):
    """Zeta-regularized normalized top Chern class of the complexified
    normal bundle of the constant maps inside the torus mapping space.

    Every Fourier mode contributes one copy of the tangent Chern roots, and
    the regularized product over the modes collapses to the sigma quotient:

        exp(-zeta2 p_1 xibar^(-2)) prod_j sigma(z)/z  at  z = alpha_j xibar^(-1).

    Degree-2k cohomology terms carry xibar^(-k), so the class has total
    degree zero.  For a rationally string manifold the prefactor is 1 and
    the result is independent of the argument choice.
    """
    ring = m.ring
    order = ring.top_degree // 2
    if symbolic:
        coeffs = [FormalPolynomial()] * (order + 1)
        for k in range(4, order + 1, 2):
            coeffs[k] = -(FormalPolynomial.symbol(f"G{k}") / k)
        series = PowerSeries(coeffs, order).exp()
    else:
        series = sigma_series(lattice, order + 1, tol=tol, radius=radius).shift_down(1)
    body = genus_class(series, m.tangent, ring)
    result = EquivariantClass.from_graded_cohom(body)
    if not m.string_flag:
        if symbolic:
            zeta2 = FormalPolynomial.symbol("G2")
        else:
            zeta2 = g2_regularized(lattice, arg_choice)
        p1 = m.tangent.pontryagin_class(1, ring)
        prefactor = exp_equivariant(
            EquivariantClass({-2: -(zeta2 * p1)}, ring)
        )
        result = result * prefactor
    return result


def graded_witten_class(m, lattice, arg_choice=None, symbolic=False,
                        tol=1e-10, radius=None):
    """The xibar-graded Witten class: sum_j Wit_j xibar^(-j).

    Reciprocal of ``loopspace_regularized_top_chern`` (including the
    non-string prefactor, which inverts to exp(+zeta2 p_1 xibar^(-2)))."""
    w = witten_class(m, lattice, arg_choice, symbolic=symbolic, tol=tol,
                     radius=radius)
    return EquivariantClass.from_graded_cohom(w)


@dataclass(frozen=True)
class WittenGenusResult:
    value: complex
    xi_power: int


def witten_genus(m, lattice, arg_choice=None, tol=1e-10, radius=None):
    """Witten genus: the integral over the manifold of the reciprocal
    regularized top Chern class.

    The only xibar power that can integrate to something nonzero is
    -dimension/2; a nonzero integral anywhere else signals a grading bug
    and raises.  For string manifolds the value does not depend on the
    argument choice.
    """
    d = m.dimension
    if d % 2 != 0:
        raise ValueError("dimension must be even")
    chern = loopspace_regularized_top_chern(
        m, lattice, arg_choice, tol=tol, radius=radius
    )
    reciprocal = chern.inverse()
    expected = -(d // 2)
    value = 0j
    for n, c in reciprocal.terms.items():
        contribution = integrate(c)
        if n == expected:
            value = complex(contribution)
        elif not (contribution == 0):
            raise RuntimeError(
                f"unexpected nonzero integral at xibar^{n}: grading bug"
            )
    return WittenGenusResult(value, expected)


def witten_genus_symbolic(m):
    """Witten genus with the lattice sums as formal symbols."""
    w = witten_class(m, None, symbolic=True)
    genus = integrate(w)
    if not isinstance(genus, FormalPolynomial):
        genus = FormalPolynomial.constant(genus) if genus else FormalPolynomial()
    return genus, -(m.dimension // 2)
