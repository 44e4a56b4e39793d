"""Graded truncated polynomial model of the even cohomology of a closed
manifold, with a top-degree integration table.

A ring is described by named generators of even positive degree, an even
truncation degree D, and the values of the integration functional on the
degree-D monomials.  Classes are finite sums of monomials of degree <= D;
products exceeding D truncate to zero.

On top of the ring sits the splitting-principle calculus: Newton's
identities convert between elementary symmetric data (Chern or Pontryagin
classes) and power sums of formal roots, and ``genus_class`` evaluates a
multiplicative characteristic series on tangent data as
exp(sum_k q_k s_k) with log Q = sum q_k z^k.

Coefficients are duck-typed: complex for numeric results, Fraction or
GaussianRational for exact work, FormalPolynomial when the lattice sums
are kept symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import (
    g2_regularized,
    witten_char_series,
    witten_char_series_symbolic,
)
from .scalars import FormalPolynomial


def _as_table_value(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, str)):
        return Fraction(v)
    raise TypeError(f"integral table values must be rational, got {v!r}")


def _scalar_str(c):
    """Readable coefficient: complex as re+imi with 15 significant digits."""
    if isinstance(c, complex):
        if c.imag == 0:
            return f"{c.real:.15g}"
        if c.real == 0:
            return f"{c.imag:.15g}i"
        sign = "+" if c.imag > 0 else "-"
        return f"{c.real:.15g}{sign}{abs(c.imag):.15g}i"
    if isinstance(c, float):
        return f"{c:.15g}"
    return str(c)


class RingSpec:
    """Generators, truncation degree and integration table."""

    def __init__(self, generators, top_degree, integral_table=None):
        gens = tuple((str(name), int(deg)) for name, deg in generators)
        for name, deg in gens:
            if deg <= 0 or deg % 2 != 0:
                raise ValueError(f"generator {name} must have even positive degree")
        if len({g[0] for g in gens}) != len(gens):
            raise ValueError("generator names must be distinct")
        top_degree = int(top_degree)
        if top_degree < 0 or top_degree % 2 != 0:
            raise ValueError("top_degree must be even and nonnegative")
        self.generators = gens
        self.top_degree = top_degree
        self._name_index = {name: i for i, (name, _) in enumerate(gens)}

        table = {}
        for mono, value in (integral_table or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(gens):
                raise ValueError(f"monomial {mono} has wrong arity")
            if self.monomial_degree(mono) != top_degree:
                raise ValueError(
                    f"integral table key {mono} is not of top degree {top_degree}"
                )
            table[mono] = _as_table_value(value)
        # every top-degree monomial appears, defaulting to 0
        for mono in self.monomials_of_degree(top_degree):
            table.setdefault(mono, Fraction(0))
        self.integral_table = table

    def monomial_degree(self, mono):
        return sum(e * deg for e, (_, deg) in zip(mono, self.generators))

    def monomials_of_degree(self, degree):
        """All exponent tuples of total degree exactly ``degree``."""
        out = []

        def rec(i, remaining, prefix):
            if i == len(self.generators):
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            deg = self.generators[i][1]
            for e in range(remaining // deg + 1):
                rec(i + 1, remaining - e * deg, prefix + [e])

        rec(0, degree, [])
        return out

    def zero(self):
        return CohomClass({}, self)

    def one(self):
        return CohomClass({(0,) * len(self.generators): 1}, self)

    def generator(self, name):
        if name not in self._name_index:
            raise KeyError(f"no generator named {name}")
        mono = [0] * len(self.generators)
        mono[self._name_index[name]] = 1
        return CohomClass({tuple(mono): 1}, self)

    def element(self, terms):
        """Class from {monomial: coefficient}; monomials may use generator
        names, e.g. {"a": 2, "a*b": Fraction(1, 3)} or exponent tuples."""
        out = {}
        for mono, coeff in terms.items():
            if isinstance(mono, str):
                mono = self.parse_monomial(mono)
            else:
                mono = tuple(int(e) for e in mono)
            out[mono] = out.get(mono, 0) + coeff
        return CohomClass(out, self)

    def parse_monomial(self, text):
        """Parse 'a^2*b' (or '1' / '' for the constant monomial)."""
        text = text.strip()
        expo = [0] * len(self.generators)
        if text in ("", "1"):
            return tuple(expo)
        for factor in text.split("*"):
            factor = factor.strip()
            if "^" in factor:
                name, _, power = factor.partition("^")
                power = int(power)
            else:
                name, power = factor, 1
            name = name.strip()
            if name not in self._name_index:
                raise ValueError(f"unknown generator {name!r} in monomial {text!r}")
            expo[self._name_index[name]] += power
        return tuple(expo)

    def monomial_str(self, mono):
        parts = []
        for e, (name, _) in zip(mono, self.generators):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        if not isinstance(other, RingSpec):
            return NotImplemented
        return (
            self.generators == other.generators
            and self.top_degree == other.top_degree
            and self.integral_table == other.integral_table
        )

    def __repr__(self):
        gens = ", ".join(f"{n}:{d}" for n, d in self.generators)
        return f"RingSpec([{gens}], top_degree={self.top_degree})"


class CohomClass:
    """Element of a truncated graded ring: {exponent tuple: coefficient}."""

    __slots__ = ("terms", "ring")

    def __init__(self, terms, ring):
        clean = {}
        for mono, coeff in terms.items():
            mono = tuple(mono)
            deg = ring.monomial_degree(mono)
            if deg > ring.top_degree:
                raise ValueError(
                    f"monomial {mono} of degree {deg} exceeds the truncation "
                    f"degree {ring.top_degree}"
                )
            if not (coeff == 0):
                clean[mono] = coeff
        self.terms = clean
        self.ring = ring

    def _check_ring(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("operands live in different rings")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, CohomClass):
            return self + other * self.ring.one()
        self._check_ring(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return CohomClass(terms, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CohomClass({m: -c for m, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if not isinstance(other, CohomClass):
            return CohomClass(
                {m: c * other for m, c in self.terms.items()}, self.ring
            )
        self._check_ring(other)
        ring = self.ring
        top = ring.top_degree
        out = {}
        for m1, c1 in self.terms.items():
            d1 = ring.monomial_degree(m1)
            for m2, c2 in other.terms.items():
                if d1 + ring.monomial_degree(m2) > top:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return CohomClass(out, ring)

    def __rmul__(self, other):
        return CohomClass({m: other * c for m, c in self.terms.items()}, self.ring)

    def __truediv__(self, scalar):
        return CohomClass(
            {m: c / scalar for m, c in self.terms.items()}, self.ring
        )

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be nonnegative integers")
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, CohomClass):
            return self.ring == other.ring and (self - other).is_zero()
        return (self - other * self.ring.one()).is_zero()

    def homogeneous_component(self, degree):
        ring = self.ring
        return CohomClass(
            {m: c for m, c in self.terms.items()
             if ring.monomial_degree(m) == degree},
            ring,
        )

    def homogeneous_parts(self):
        """{degree: component}, nonzero parts only."""
        parts = {}
        for mono, coeff in self.terms.items():
            deg = self.ring.monomial_degree(mono)
            parts.setdefault(deg, {})[mono] = coeff
        return {
            deg: CohomClass(t, self.ring) for deg, t in sorted(parts.items())
        }

    def is_homogeneous(self, degree):
        return all(
            self.ring.monomial_degree(m) == degree for m in self.terms
        )

    def constant_term(self):
        return self.terms.get((0,) * len(self.ring.generators), 0)

    def max_degree(self):
        if not self.terms:
            return 0
        return max(self.ring.monomial_degree(m) for m in self.terms)

    def map_coefficients(self, fn):
        return CohomClass({m: fn(c) for m, c in self.terms.items()}, self.ring)

    def to_complex(self):
        return self.map_coefficients(complex)

    def coefficient(self, mono):
        if isinstance(mono, str):
            mono = self.ring.parse_monomial(mono)
        return self.terms.get(tuple(mono), 0)

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        keys = sorted(self.terms, key=lambda m: (ring.monomial_degree(m), m))
        parts = []
        for mono in keys:
            coeff = self.terms[mono]
            ms = ring.monomial_str(mono)
            cs = _scalar_str(coeff)
            if ms == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ms)
            elif cs == "-1":
                parts.append(f"-{ms}")
            else:
                if any(op in cs[1:] for op in "+-") or " " in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{ms}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CohomClass({self})"


def integrate(c):
    """Push forward to a point: pair the top-degree part with the table.

    Lower-degree terms contribute nothing.
    """
    ring = c.ring
    total = 0
    for mono, coeff in c.terms.items():
        if ring.monomial_degree(mono) == ring.top_degree:
            total = total + coeff * ring.integral_table[mono]
    return total


def newton_power_sums(elementary, max_k, ring):
    """Power sums s_1..s_max_k from elementary symmetric classes e_1..e_r.

    Newton's identity:
        s_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i s_{k-i} + (-1)^(k-1) k e_k,
    with e_i = 0 beyond the given list.
    """
    e = [ring.one()] + list(elementary)

    def e_at(i):
        return e[i] if i < len(e) else ring.zero()

    s = []
    for k in range(1, max_k + 1):
        acc = ((-1) ** (k - 1) * k) * e_at(k)
        for i in range(1, k):
            term = e_at(i) * s[k - i - 1]
            acc = acc + ((-1) ** (i - 1)) * term
        s.append(acc)
    return s


@dataclass(frozen=True)
class TangentData:
    """Pontryagin classes p_1, p_2, ... of a tangent bundle and its rank."""

    pontryagin: tuple
    dimension: int

    def __post_init__(self):
        ps = tuple(self.pontryagin)
        object.__setattr__(self, "pontryagin", ps)
        if self.dimension < 0 or self.dimension % 2 != 0:
            raise ValueError("dimension must be even and nonnegative")
        for k, p in enumerate(ps, start=1):
            if not p.is_homogeneous(4 * k):
                raise ValueError(f"p_{k} must be homogeneous of degree {4 * k}")

    @property
    def ring(self):
        if self.pontryagin:
            return self.pontryagin[0].ring
        raise ValueError("tangent data with no Pontryagin entries has no ring")

    def pontryagin_class(self, k, ring):
        if 1 <= k <= len(self.pontryagin):
            return self.pontryagin[k - 1]
        return ring.zero()

    def complexified_chern(self, max_j, ring):
        """Chern classes of the complexification: c_odd = 0 and
        c_{2k} = (-1)^k p_k; zero above the complex rank."""
        out = []
        for j in range(1, max_j + 1):
            if j % 2 == 1 or j > self.dimension:
                out.append(ring.zero())
            else:
                k = j // 2
                out.append(((-1) ** k) * self.pontryagin_class(k, ring))
        return out


def power_sums_from_pontryagin(tangent, max_k, ring=None):
    """Power sums of the Chern roots of the complexified tangent bundle.

    All odd power sums are exactly zero, since the roots come in opposite
    pairs.
    """
    ring = ring or tangent.ring
    chern = tangent.complexified_chern(max_k, ring)
    return newton_power_sums(chern, max_k, ring)


def pontryagin_root_power_sums(tangent, max_k, ring=None):
    """Power sums of the Pontryagin roots (e_i = p_i directly)."""
    ring = ring or tangent.ring
    e = [tangent.pontryagin_class(k, ring) for k in range(1, max_k + 1)]
    return newton_power_sums(e, max_k, ring)


def exp_class(c):
    """exp of a class with zero constant term (nilpotent, so finite)."""
    if not (c.constant_term() == 0):
        raise ValueError("exp_class requires zero constant term")
    ring = c.ring
    result = ring.one()
    term = ring.one()
    m = 1
    while True:
        term = (term * c) / m
        if term.is_zero():
            break
        result = result + term
        m += 1
        if m > ring.top_degree + 1:
            break
    return result


def _genus_from_log(log_coeffs, power_sums, ring):
    """exp(sum_k log_coeffs[k] * s_k); log_coeffs is indexed from 1."""
    acc = ring.zero()
    for k, s in enumerate(power_sums, start=1):
        q = log_coeffs[k] if k < len(log_coeffs) else 0
        if q == 0 or s.is_zero():
            continue
        acc = acc + q * s
    return exp_class(acc)


def genus_class(series, tangent, ring=None):
    """Multiplicative genus: the series evaluated on all Chern roots of the
    complexified tangent bundle, computed as exp(sum q_k s_k) where
    log Q = sum q_k z^k.  The series variable has cohomological degree 2."""
    if not (series.coefficient(0) == 1):
        raise ValueError("characteristic series must have constant term 1")
    ring = ring or tangent.ring
    max_k = min(series.order, ring.top_degree // 2)
    logq = series.truncate(max_k).log() if max_k > 0 else None
    if logq is None:
        return ring.one()
    s = power_sums_from_pontryagin(tangent, max_k, ring)
    return _genus_from_log([0] + logq.coeffs[1:], s, ring)


def whitney_sum(t1, t2, ring=None):
    """Tangent data of a direct sum: total Pontryagin class multiplies."""
    if t1.dimension % 2 or t2.dimension % 2:
        raise ValueError("dimensions must be even")
    ring = ring or t1.ring
    d = t1.dimension + t2.dimension
    kmax = ring.top_degree // 4
    ps = []
    for k in range(1, kmax + 1):
        acc = ring.zero()
        for i in range(0, k + 1):
            a = t1.pontryagin_class(i, ring) if i else ring.one()
            b = t2.pontryagin_class(k - i, ring) if k - i else ring.one()
            acc = acc + a * b
        ps.append(acc)
    return TangentData(tuple(ps), d)


@dataclass(frozen=True)
class ManifoldSpec:
    """Ring model plus tangent data; the input to genus computations."""

    ring: RingSpec
    tangent: TangentData

    def __post_init__(self):
        if self.tangent.dimension != self.ring.top_degree:
            raise ValueError(
                "tangent dimension must equal the ring truncation degree"
            )

    @property
    def string_flag(self):
        """True when p_1 vanishes in the ring (rational string condition)."""
        return self.tangent.pontryagin_class(1, self.ring).is_zero()

    @property
    def dimension(self):
        return self.tangent.dimension


def witten_class(m, lattice, arg_choice=None, symbolic=False, tol=1e-10,
                 radius=None):
    """Witten class: the characteristic series z/sigma(z) evaluated on all
    Chern roots of the complexified tangent bundle.

    For a manifold that is not rationally string the class acquires the
    prefactor exp(+zeta2 p_1), with zeta2 the regularized second power sum
    of the lattice for the given argument choice; the result then depends
    on that choice.  In the string case the prefactor is absent and the
    output is argument-choice independent.

    With ``symbolic=True`` the coefficients are FormalPolynomial values in
    the symbols G4, G6, ... (and G2 for the non-string prefactor), each
    standing for the corresponding regularized lattice power sum.
    """
    ring = m.ring
    order = ring.top_degree // 2
    if symbolic:
        series = witten_char_series_symbolic(order)
    else:
        series = witten_char_series(lattice, order, tol=tol, radius=radius)
    result = genus_class(series, m.tangent, ring)
    if not m.string_flag:
        if symbolic:
            zeta2 = FormalPolynomial.symbol("G2")
        else:
            zeta2 = g2_regularized(lattice, arg_choice)
        p1 = m.tangent.pontryagin_class(1, ring)
        result = result * exp_class(zeta2 * p1)
    return result


def real_witten_class(m, lattice, symbolic=False, tol=1e-10, radius=None):
    """Witten class computed through the Pontryagin roots:

        prod_j sqrt(w)/sigma(sqrt(w)) at w = beta_j,

    an even series in w of cohomological degree 4 with
    log(sqrt(w)/sigma(sqrt(w))) = sum_{k>=2} G_{2k} w^k/(2k).

    Since the Chern roots of the complexification come in opposite pairs
    with beta_j the squares, this is a square root of ``witten_class``:
    real_witten_class(m)**2 == witten_class(m) including the non-string
    prefactor, which here is exp(+zeta2 p_1 / 2).
    """
    ring = m.ring
    max_k = ring.top_degree // 4
    log_coeffs = [0] * (max_k + 1)
    for k in range(2, max_k + 1):
        if symbolic:
            log_coeffs[k] = FormalPolynomial.symbol(f"G{2 * k}") / (2 * k)
        else:
            log_coeffs[k] = eisenstein_value(lattice, 2 * k, tol, radius) / (2 * k)
    s = pontryagin_root_power_sums(m.tangent, max_k, ring)
    result = _genus_from_log(log_coeffs, s, ring)
    if not m.string_flag:
        if symbolic:
            zeta2 = FormalPolynomial.symbol("G2") / 2
        else:
            zeta2 = g2_regularized(lattice) / 2
        p1 = m.tangent.pontryagin_class(1, ring)
        result = result * exp_class(zeta2 * p1)
    return result


def eisenstein_value(lattice, two_k, tol=1e-10, radius=None):
    from .lattice import eisenstein_auto

    return eisenstein_auto(lattice, two_k, tol=tol, radius=radius)[0]
