"""Exact coefficient domains for the characteristic-class calculus.

Two small scalar types complement the builtin numeric tower:

* :class:`GaussianRational` -- complex numbers with rational real and
  imaginary parts.  Used wherever exact cancellation matters (equivariant
  Euler classes, localization ratios, the doubling identity).
* :class:`FormalPolynomial` -- polynomials with rational coefficients in
  named formal symbols such as ``G4``, ``G6``.  Used for symbolic genus
  output where the lattice-sum values are kept as unevaluated symbols.

Both types interoperate with ``int`` and ``Fraction`` and support division
by integers, which is all the truncated exp/log recurrences need.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, float)):
        # Fraction(float) is the exact binary value, not a decimal guess.
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class GaussianRational:
    """Exact complex number with Fraction real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def from_complex(cls, z):
        z = complex(z)
        return cls(Fraction(z.real), Fraction(z.imag))

    @staticmethod
    def i():
        return GaussianRational(0, 1)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, float, Fraction)):
            # floats are exact binary rationals, so no precision is lost
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n2 = o.norm2()
        if n2 == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n2,
            (self.im * o.re - self.re * o.im) / n2,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (GaussianRational(1) / self) ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (complex, float)):
                return complex(self) == complex(other)
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


class FormalPolynomial:
    """Polynomial in named formal symbols with Fraction coefficients.

    Monomials are stored as sorted tuples of ``(symbol, exponent)`` pairs;
    the empty tuple is the constant monomial.  No relations between
    symbols are imposed.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = coeff if isinstance(coeff, Fraction) else _as_fraction(coeff)
            if coeff:
                clean[tuple(sorted(mono))] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FormalPolynomial is immutable")

    @classmethod
    def constant(cls, value):
        return cls({(): _as_fraction(value)})

    @classmethod
    def symbol(cls, name):
        return cls({((name, 1),): Fraction(1)})

    def _coerce(self, other):
        if isinstance(other, FormalPolynomial):
            return other
        if isinstance(other, (int, float, Fraction)):
            return FormalPolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in o.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return FormalPolynomial(terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return FormalPolynomial({m: -c for m, c in self.terms.items()})

    @staticmethod
    def _mul_mono(a, b):
        exps = dict(a)
        for sym, e in b:
            exps[sym] = exps.get(sym, 0) + e
        return tuple(sorted(exps.items()))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = self._mul_mono(m1, m2)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return FormalPolynomial(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return FormalPolynomial(
                {m: c / other for m, c in self.terms.items()}
            )
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = FormalPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def evaluate(self, values):
        """Substitute numeric values (a ``{symbol: complex}`` map)."""
        total = 0j
        for mono, coeff in self.terms.items():
            term = complex(coeff)
            for sym, e in mono:
                term *= values[sym] ** e
            total += term
        return total

    @staticmethod
    def _mono_str(mono):
        if not mono:
            return ""
        return "*".join(s if e == 1 else f"{s}^{e}" for s, e in mono)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            coeff = self.terms[mono]
            ms = self._mono_str(mono)
            if not ms:
                body = str(coeff)
            elif coeff == 1:
                body = ms
            elif coeff == -1:
                body = f"-{ms}"
            else:
                body = f"{coeff}*{ms}"
            if parts and not body.startswith("-"):
                parts.append("+ " + body)
            elif parts:
                parts.append("- " + body[1:])
            else:
                parts.append(body)
        return " ".join(parts)

    def __repr__(self):
        return f"FormalPolynomial({self})"
