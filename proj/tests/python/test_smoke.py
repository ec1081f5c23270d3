"""Smoke tests for the python bindings."""

import braidrep as br


def test_polynomial_arithmetic():
    t = br.LaurentPolynomial("t")
    b = br.LaurentPolynomial("b")
    assert str(t * b) == "b*t"
    assert str(t * t) == "t^2"
    assert (t + (-t)).is_zero()
    assert str(t.monomial_inverse()) == "t^-1"


def test_example_matrix():
    spec = br.make_spec("simple")
    w = br.parse_word("s2 s1^-1 s2", 3)
    m = br.evaluate(spec, w)
    assert m.rows() == [
        ["0", "0", "b^-1*t"],
        ["0", "b*t", "0"],
        ["b*t^-1", "0", "0"],
    ]
    assert br.path_matrix(w) == m


def test_relations_and_classification():
    assert br.check_relations(br.make_spec("burau"), 4).passed
    label, _reason = br.classify_case("0", "b", "c", "0")
    assert label == "Case3"
    label, _reason = br.classify_case("1", "1", "1", "1")
    assert label == "Inadmissible"


def test_witness_and_search():
    spec = br.make_spec("simple")
    w = br.parse_word("1 -2 1 -2 1 -2", 3)
    assert br.verify_kernel_witness(spec, w).certified

    result = br.search_kernel(n=3, max_len=6, spec=spec)
    assert len(result.witnesses) == 1
    assert result.witnesses[0].certified
    assert len(result.witnesses[0].word.letters) == 6


def test_case1_inverse_rejected():
    import pytest

    spec = br.make_spec("case1", {"a": "a", "b": "b"})
    with pytest.raises(br._core.NonUnitDeterminant):
        br.evaluate(spec, br.parse_word("-1", 3))
