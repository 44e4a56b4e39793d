"""Manifest ingestion: a JSON document describing the lattice, the
cohomology ring with its integration table, and the tangent data.

Scalar conventions chosen so exact ring data survives round trips:
complex numbers are two-element arrays [re, im] (plain numbers are taken
as real), rationals are strings like "2/3" (or integers).  Monomials are
strings in the generator names, e.g. "a^2*b"; "1" is the constant
monomial.

Example document:

    {
      "lattice": {"tau": [0.0, 1.0]},
      "ring": {
        "generators": [["a", 4], ["b", 8]],
        "top_degree": 8,
        "integral_table": {"a^2": "0", "b": "1"}
      },
      "tangent": {"dimension": 8, "pontryagin": [{}, {"b": "1"}]},
      "options": {"tol": "1e-10"}
    }

Validation failures raise :class:`ManifestError` tagged with the JSON
path of the offending entry and, when the entry can be located in the
source text, its line number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cohomology import ManifoldSpec, RingSpec, TangentData
from .lattice import ArgumentChoice, Lattice


class ManifestError(ValueError):
    def __init__(self, path, message, line=None):
        self.path = path
        self.line = line
        where = f"{path} (line {line})" if line else path
        super().__init__(f"{where}: {message}")


def _line_of(raw_text, key):
    """Best-effort line of the first occurrence of a quoted key."""
    if raw_text is None:
        return None
    needle = f'"{key}"'
    for i, line in enumerate(raw_text.splitlines(), start=1):
        if needle in line:
            return i
    return None


class _Ctx:
    def __init__(self, raw_text=None):
        self.raw = raw_text

    def fail(self, path, message):
        leaf = path.rsplit(".", 1)[-1].split("[")[0]
        raise ManifestError(path, message, _line_of(self.raw, leaf))


def _as_complex(value, path, ctx):
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, (int, float)) for v in value)
    ):
        return complex(value[0], value[1])
    ctx.fail(path, f"expected a number or [re, im] pair, got {value!r}")


def _as_fraction(value, path, ctx):
    try:
        if isinstance(value, (int, str)):
            return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        ctx.fail(path, f"bad rational {value!r}: {exc}")
    ctx.fail(path, f"expected a rational ('p/q' string or integer), got {value!r}")


@dataclass
class Manifest:
    """Validated manifest: lattice, optional argument choice, manifold."""

    lattice: Lattice
    manifold: ManifoldSpec
    arg_choice: ArgumentChoice | None = None
    options: dict = field(default_factory=dict)

    @property
    def effective_arg_choice(self):
        return self.arg_choice or ArgumentChoice.for_lattice(self.lattice)

    def to_json_dict(self):
        ring = self.manifold.ring
        doc = {
            "lattice": {
                "omega1": [self.lattice.omega1.real, self.lattice.omega1.imag],
                "omega2": [self.lattice.omega2.real, self.lattice.omega2.imag],
            },
            "ring": {
                "generators": [[n, d] for n, d in ring.generators],
                "top_degree": ring.top_degree,
                "integral_table": {
                    ring.monomial_str(m): str(v)
                    for m, v in sorted(ring.integral_table.items())
                },
            },
            "tangent": {
                "dimension": self.manifold.tangent.dimension,
                "pontryagin": [
                    {
                        ring.monomial_str(m): str(c)
                        for m, c in sorted(p.terms.items())
                    }
                    for p in self.manifold.tangent.pontryagin
                ],
            },
        }
        if self.arg_choice is not None:
            doc["arg_choice"] = {"base_angle": self.arg_choice.base_angle}
        if self.options:
            doc["options"] = dict(sorted(self.options.items()))
        return doc

    def dumps(self):
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def _parse_polynomial(data, ring, path, ctx):
    if not isinstance(data, dict):
        ctx.fail(path, "expected an object {monomial: rational}")
    terms = {}
    for mono_text, coeff in data.items():
        coeff = _as_fraction(coeff, f"{path}[{mono_text!r}]", ctx)
        try:
            mono = ring.parse_monomial(mono_text)
        except ValueError as exc:
            ctx.fail(f"{path}[{mono_text!r}]", str(exc))
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    try:
        return ring.element(terms)
    except ValueError as exc:
        ctx.fail(path, str(exc))


def parse_manifest(document, raw_text=None):
    """Build a Manifest from a decoded JSON document."""
    ctx = _Ctx(raw_text)
    if not isinstance(document, dict):
        ctx.fail("$", "top-level document must be an object")

    lat = document.get("lattice")
    if not isinstance(lat, dict):
        ctx.fail("lattice", "missing or not an object")
    try:
        if "tau" in lat:
            lattice = Lattice.from_tau(_as_complex(lat["tau"], "lattice.tau", ctx))
        else:
            lattice = Lattice(
                _as_complex(lat.get("omega1"), "lattice.omega1", ctx),
                _as_complex(lat.get("omega2"), "lattice.omega2", ctx),
            )
    except ValueError as exc:
        ctx.fail("lattice", str(exc))

    arg_choice = None
    if "arg_choice" in document:
        ac = document["arg_choice"]
        if not isinstance(ac, dict) or "base_angle" not in ac:
            ctx.fail("arg_choice", "expected {'base_angle': radians}")
        try:
            arg_choice = ArgumentChoice(float(ac["base_angle"]))
        except (TypeError, ValueError) as exc:
            ctx.fail("arg_choice.base_angle", str(exc))

    ring_doc = document.get("ring")
    if not isinstance(ring_doc, dict):
        ctx.fail("ring", "missing or not an object")
    gens = ring_doc.get("generators")
    if not isinstance(gens, list) or not all(
        isinstance(g, list) and len(g) == 2 for g in gens
    ):
        ctx.fail("ring.generators", "expected a list of [name, degree] pairs")
    top = ring_doc.get("top_degree")
    if not isinstance(top, int):
        ctx.fail("ring.top_degree", "expected an even integer")
    table_doc = ring_doc.get("integral_table", {})
    if not isinstance(table_doc, dict):
        ctx.fail("ring.integral_table", "expected an object {monomial: rational}")
    try:
        ring = RingSpec(
            [(str(n), int(d)) for n, d in gens], top, {}
        )
    except ValueError as exc:
        ctx.fail("ring", str(exc))
    table = {}
    for mono_text, value in table_doc.items():
        path = f"ring.integral_table[{mono_text!r}]"
        try:
            mono = ring.parse_monomial(mono_text)
        except ValueError as exc:
            ctx.fail(path, str(exc))
        if ring.monomial_degree(mono) != top:
            ctx.fail(path, f"monomial degree is not the top degree {top}")
        table[mono] = _as_fraction(value, path, ctx)
    try:
        ring = RingSpec([(str(n), int(d)) for n, d in gens], top, table)
    except ValueError as exc:
        ctx.fail("ring", str(exc))

    tangent_doc = document.get("tangent")
    if not isinstance(tangent_doc, dict):
        ctx.fail("tangent", "missing or not an object")
    dim = tangent_doc.get("dimension")
    if not isinstance(dim, int) or dim % 2 != 0 or dim < 0:
        ctx.fail("tangent.dimension", "expected an even nonnegative integer")
    p_docs = tangent_doc.get("pontryagin", [])
    if not isinstance(p_docs, list):
        ctx.fail("tangent.pontryagin", "expected a list of polynomials")
    ps = []
    for k, p_doc in enumerate(p_docs, start=1):
        ps.append(_parse_polynomial(p_doc, ring, f"tangent.pontryagin[{k - 1}]", ctx))
    try:
        tangent = TangentData(tuple(ps), dim)
        manifold = ManifoldSpec(ring, tangent)
    except ValueError as exc:
        ctx.fail("tangent", str(exc))

    options = document.get("options", {})
    if not isinstance(options, dict):
        ctx.fail("options", "expected an object")

    return Manifest(lattice, manifold, arg_choice, dict(options))


def load_manifest(path):
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    document = json.loads(raw)  # JSONDecodeError carries line/column
    return parse_manifest(document, raw_text=raw)


def loads_manifest(text):
    document = json.loads(text)
    return parse_manifest(document, raw_text=text)
