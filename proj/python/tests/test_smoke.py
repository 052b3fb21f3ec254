from pathlib import Path

import pytest

import qtorsion

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def test_scalars():
    assert qtorsion.rational("3/6") == "1/2"
    assert qtorsion.rational_function("1/(2*t-2)") == "1/2/(t-1)"
    with pytest.raises(qtorsion.QTorsionError) as info:
        qtorsion.rational("1/0")
    assert info.value.code == "ZeroDenominator"


def test_fixture_torsion():
    assert qtorsion.torsion(FIXTURES / "example1.map.json") == "1/2"
    assert qtorsion.torsion_self_map(FIXTURES / "example2.map.json") == "1/2"
    assert qtorsion.torsion(FIXTURES / "example3.map.json") == "1"
    assert qtorsion.induced_maps(FIXTURES / "example3.map.json")[1] == [["1", "1"], ["0", "1"]]
    assert qtorsion.torsion_acyclic(FIXTURES / "elementary.json") == "1"


def test_homology_counts():
    degrees = qtorsion.homology(FIXTURES / "example3.complex.json")
    assert [d["betti"] for d in degrees] == [1, 2]


def test_validation_error_has_degree():
    with pytest.raises(qtorsion.QTorsionError) as info:
        qtorsion.validate(FIXTURES / "not_a_complex.json")
    assert info.value.code == "NotAComplex"
    assert info.value.degree == 1


def test_polynomial_ring():
    c = FIXTURES / "tminus1.json"
    assert qtorsion.turaev_torsion(c) == "1/(t-1)"
    assert qtorsion.order_of_homology(c, 0) == "t-1"
    snf = qtorsion.smith_normal_form([["t", "0"], ["0", "t-1"]])
    assert snf["invariant_factors"] == ["1", "t^2-t"]
    assert snf["rank"] == 2


def test_generated_instances():
    doc = qtorsion.generate(3, length=3, profile="iso")
    assert doc == qtorsion.generate(3, length=3, profile="iso")
    assert qtorsion.is_quasi_isomorphism(doc)
    dual = qtorsion.dual(doc)
    assert qtorsion.is_quasi_isomorphism(dual)
    assert not qtorsion.is_quasi_isomorphism(qtorsion.generate(3, profile="non-qiso"))
    with pytest.raises(qtorsion.QTorsionError) as info:
        qtorsion.generate(1, length=9)
    assert info.value.code == "ParamOutOfRange"


def test_multiplicativity_through_documents():
    # tau(f f) = tau(f)^2 for a generated self-map
    from fractions import Fraction

    doc = qtorsion.generate(11, length=2, profile="self")
    f = doc["maps"]
    n = [len(m) for m in f]
    squared = dict(doc)
    squared["maps"] = [
        [
            [str(sum(Fraction(m[i][k]) * Fraction(m[k][j]) for k in range(n[d]))) for j in range(n[d])]
            for i in range(n[d])
        ]
        for d, m in enumerate(f)
    ]
    tau = Fraction(qtorsion.torsion(doc))
    assert Fraction(qtorsion.torsion(squared)) == tau * tau


def test_cli_in_process():
    code, out, _ = qtorsion.run_cli("torsion", "--map", str(FIXTURES / "example1.map.json"))
    assert (code, out) == (0, "tau = 1/2\n")
    assert qtorsion.run_cli("frobnicate")[0] == 2
