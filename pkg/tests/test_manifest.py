import json

import pytest

from wittenloc.manifest import (
    ManifestError,
    load_manifest,
    loads_manifest,
    parse_manifest,
)

GOOD = {
    "lattice": {"tau": [0.0, 1.0]},
    "ring": {
        "generators": [["a", 4], ["b", 8]],
        "top_degree": 8,
        "integral_table": {"a^2": "0", "b": "1"},
    },
    "tangent": {"dimension": 8, "pontryagin": [{}, {"b": "1"}]},
    "options": {"tol": "1e-10"},
}


def doc(**overrides):
    out = json.loads(json.dumps(GOOD))
    out.update(overrides)
    return out


class TestParsing:
    def test_good_document(self):
        m = parse_manifest(GOOD)
        assert m.lattice.tau == 1j
        assert m.manifold.dimension == 8
        assert m.manifold.string_flag
        assert m.arg_choice is None

    def test_omega_basis_and_arg_choice(self):
        d = doc(lattice={"omega1": [0.0, 1.0], "omega2": [-1.0, 0.0]})
        d["arg_choice"] = {"base_angle": 1.5707963267948966}
        m = parse_manifest(d)
        assert m.lattice.omega1 == 1j
        assert m.arg_choice.base_angle == pytest.approx(1.5707963)

    def test_rational_coefficients_survive(self):
        d = doc()
        d["tangent"]["pontryagin"][1] = {"b": "2/3"}
        m = parse_manifest(d)
        from fractions import Fraction

        assert m.manifold.tangent.pontryagin[1].coefficient("b") == Fraction(2, 3)

    def test_file_roundtrip(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps(GOOD))
        m1 = load_manifest(path)
        m2 = loads_manifest(m1.dumps())
        assert m1.lattice == m2.lattice
        assert m1.manifold == m2.manifold
        assert m1.arg_choice == m2.arg_choice
        assert m1.options == m2.options

    def test_roundtrip_is_stable(self):
        m1 = parse_manifest(GOOD)
        text = m1.dumps()
        assert loads_manifest(text).dumps() == text


class TestValidation:
    def test_missing_lattice(self):
        with pytest.raises(ManifestError, match="lattice"):
            parse_manifest(doc(lattice=None))

    def test_bad_orientation(self):
        with pytest.raises(ManifestError, match="oriented"):
            parse_manifest(doc(lattice={"tau": [0.0, -1.0]}))

    def test_bad_rational(self):
        d = doc()
        d["ring"]["integral_table"]["b"] = "1/0"
        with pytest.raises(ManifestError, match="integral_table"):
            parse_manifest(d)

    def test_unknown_generator_in_monomial(self):
        d = doc()
        d["ring"]["integral_table"]["c"] = "1"
        with pytest.raises(ManifestError, match="unknown generator"):
            parse_manifest(d)

    def test_wrong_degree_table_key(self):
        d = doc()
        d["ring"]["integral_table"]["a"] = "1"
        with pytest.raises(ManifestError, match="top degree"):
            parse_manifest(d)

    def test_dimension_mismatch(self):
        d = doc()
        d["tangent"]["dimension"] = 6
        with pytest.raises(ManifestError, match="tangent"):
            parse_manifest(d)

    def test_pontryagin_degree_error(self):
        d = doc()
        d["tangent"]["pontryagin"] = [{"b": "1"}]  # degree 8 in the p1 slot
        with pytest.raises(ManifestError, match="tangent"):
            parse_manifest(d)

    def test_error_carries_line_number(self):
        text = json.dumps(doc(), indent=2)
        broken = text.replace('"b": "1"', '"b": "1/0"', 1)
        with pytest.raises(ManifestError) as err:
            loads_manifest(broken)
        assert err.value.line is not None

    def test_syntax_error_propagates(self):
        with pytest.raises(json.JSONDecodeError):
            loads_manifest("{not json")
