import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import vectors
from weakjordan.relations import (
    StrongRelation,
    characterization_values,
    check_abs_properties,
    check_additivity,
    check_characterizations,
    check_equivalence,
    check_scalar_invariance,
    related_to_zero_self,
    strongly_related,
)
from weakjordan.validation import Tolerance


def rel(*base):
    return StrongRelation(np.array(base, dtype=float), Tolerance())


def test_strongly_related_examples():
    r = rel(1, 0)
    assert strongly_related(r, [5, 2], [5, 7])
    assert not strongly_related(r, [5, 2], [4, 2])
    assert r([3.3, -1], [3.3, -1])


def test_equivalence_examples():
    r = rel(1, 0, 0)
    x = np.array([1.0, 1, 1])
    y = x + [0, 2, 0]
    z = y + [0, 0, -3]
    v = check_equivalence(r, x, y, z)
    assert v.passed and r(x, z)
    assert check_equivalence(r, x, x, x).passed
    assert check_equivalence(rel(1, 1), [2, 2], [2, 2], [2, 2]).passed


def test_zero_base_is_flagged():
    r = rel(0, 0)
    assert r.base_is_zero
    assert r([1, 2], [-5, 7])
    assert "base_zero" in check_equivalence(r, [1, 2], [3, 4], [5, 6]).notes


def test_scalar_invariance_examples():
    r = rel(1, 0)
    x = np.array([2.0, 5.0])
    y = x - [0, 3]
    assert check_scalar_invariance(r, x, y, -2.5, 7.0).passed
    assert check_scalar_invariance(r, x, y, 0.0, 7.0).passed
    assert check_scalar_invariance(r, x, y, 1.0, 1.0).passed
    with pytest.raises(ValueError):
        check_scalar_invariance(r, [1, 0], [0, 0], 2.0, 2.0)


def test_additivity_examples():
    r = rel(1, 0)
    assert check_additivity(r, [1, 1], [1, 0], [2, 2], [2, 6]).passed
    assert check_additivity(r, [1, 1], [1, 0], [3, 3], [3, 3]).passed
    assert check_additivity(r, [0, 0], [0, 0], [0, 0], [0, 0]).passed


def test_characterization_examples():
    assert characterization_values(rel(0, 1), [3, 5], [-2, 5], [1, 1]) == (True,) * 4
    assert characterization_values(rel(1, 0), [1, 0], [0, 0], [1, 1]) == (False,) * 4
    assert check_characterizations(rel(2, -1), [4, 4], [4, 4], [0, 9]).passed


def test_abs_property_examples():
    v = check_abs_properties(rel(1, 0), [0, 2], [0, -7])
    assert v.passed and v.values[4]
    v = check_abs_properties(rel(1, 0), [0, 0], [0, 0])
    assert v.passed and all(v.values)
    v = check_abs_properties(rel(0, 1), [4, 0], [-4, 0])
    assert v.passed and v.values[1]


def test_related_to_zero_self_examples():
    assert related_to_zero_self([0, 0])
    assert not related_to_zero_self([1, 0])
    assert related_to_zero_self([1e-12, 0], Tolerance(1e-9))


@st.composite
def related_setup(draw, dim=5):
    x0 = draw(vectors(dim))
    supp = np.abs(x0) > 0
    x = draw(vectors(dim))
    d = np.where(supp, 0.0, draw(vectors(dim)))
    return x0, x, x + d, supp


@given(related_setup(), vectors(5), st.floats(-10, 10), st.floats(-10, 10))
def test_related_pairs_satisfy_laws(setup, w, alpha, beta):
    x0, x, y, supp = setup
    r = StrongRelation(x0)
    assert r(x, y)
    assert check_scalar_invariance(r, x, y, alpha, beta).passed
    assert all(characterization_values(r, x, y, w))
    assert check_abs_properties(r, x, y).passed
    z = y + np.where(supp, 0.0, w)
    assert check_equivalence(r, x, y, z).passed


@given(related_setup(), vectors(5))
def test_characterizations_agree(setup, w):
    x0, x, _, _ = setup
    r = StrongRelation(x0)
    y = x + w
    vals = characterization_values(r, x, y, w)
    assert len(set(vals)) == 1


@given(vectors(4))
def test_self_relation_iff_zero(x):
    assert related_to_zero_self(x) == (float(np.max(np.abs(x))) <= 1e-9)
