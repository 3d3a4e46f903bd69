import pytest
from hypothesis import given, strategies as st

from rbkit.algebra import (
    DISCREPANCY_NOTE,
    ONE,
    PRINTED_QUADRATIC_ID,
    X,
    AlgebraElement,
    Polynomial,
    add,
    check_presentation,
    ideal_membership,
    multiply,
    presentation_ok,
    scale,
)
from rbkit.diagrams import Letter, count, generator

from conftest import basis, diagram_pairs

coeff_lists = st.lists(st.integers(-50, 50), max_size=6)


def e(kind, i, k):
    return AlgebraElement.basis(generator(kind, i, k))


# -- polynomials ------------------------------------------------------------------

def test_polynomial_normalizes_trailing_zeros():
    assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([]).degree == -1
    assert Polynomial([3]).degree == 0


def test_polynomial_repr_and_terms():
    p = (X + 1) * (X - 1)
    assert p == Polynomial([-1, 0, 1])
    assert Polynomial.from_terms(p.terms()) == p
    assert p(3) == 8
    assert repr(X * X - 2) == "x^2 - 2"


@given(coeff_lists, coeff_lists, st.integers(-9, 9))
def test_polynomial_ring_ops_commute_with_evaluation(a, b, x):
    p, q = Polynomial(a), Polynomial(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p ** 2)(x) == p(x) ** 2


@given(coeff_lists, coeff_lists)
def test_polynomial_hash_consistent(a, b):
    p, q = Polynomial(a), Polynomial(b)
    if p == q:
        assert hash(p) == hash(q)


# -- elements ---------------------------------------------------------------------

def test_t1_squared_is_x_t1():
    t1 = e("t", 1, 2)
    assert multiply(t1, t1) == scale(t1, X)


def test_identity_is_unit():
    for d in basis(3):
        a = AlgebraElement.basis(d, X + 2)
        assert AlgebraElement.one(3) * a == a == a * AlgebraElement.one(3)


def test_p1_t1_p1_is_p1_p2():
    p1, t1, p2 = e("p", 1, 2), e("t", 1, 2), e("p", 2, 2)
    assert p1 * t1 * p1 == p1 * p2


def test_zero_terms_dropped():
    t1 = e("t", 1, 2)
    assert (t1 - t1).is_zero()
    assert add(t1, scale(t1, -1)) == AlgebraElement.zero(2)


@given(diagram_pairs(max_k=3, arity=3), st.integers(-3, 3))
def test_associative_and_distributive(triple, c):
    a, b, d = (AlgebraElement.basis(x) for x in triple)
    s = a.scale(X + c) + d
    assert (a * b) * d == a * (b * d)
    assert s * b == (a * b).scale(X + c) + d * b
    assert b * s == (b * a).scale(X + c) + b * d


@given(diagram_pairs(max_k=4, arity=4))
def test_terms_bounded_by_dimension(quad):
    k = quad[0].k
    total = AlgebraElement.zero(k)
    for d in quad:
        total = total + AlgebraElement.basis(d) * AlgebraElement.basis(quad[0])
    assert len(total.terms) <= count(k)


def test_ideal_membership_examples():
    assert ideal_membership(e("t", 1, 3), 1)
    assert not ideal_membership(AlgebraElement.one(3), 2)
    assert ideal_membership(AlgebraElement.zero(3), 0)


@pytest.mark.parametrize("k", range(4))
def test_ideals_are_two_sided_and_nested(k):
    ds = basis(k)
    for r in range(k + 1):
        members = [d for d in ds if ideal_membership(AlgebraElement.basis(d), r)]
        for m in members:
            assert ideal_membership(AlgebraElement.basis(m), r + 1) or r == k
            for d in ds:
                assert ideal_membership(AlgebraElement.basis(d) * AlgebraElement.basis(m), r)
                assert ideal_membership(AlgebraElement.basis(m) * AlgebraElement.basis(d), r)


def test_element_json_round_trip():
    a = e("t", 1, 3).scale(X * X - 2) + e("s", 2, 3)
    assert AlgebraElement.from_json(a.to_json()) == a


def test_word_constructor():
    w = AlgebraElement.word(2, [Letter("t", 1), Letter("t", 1)])
    assert w == AlgebraElement.basis(generator("t", 1, 2), X)
    assert AlgebraElement.word(2, []) == AlgebraElement.one(2)


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        AlgebraElement.one(2) + AlgebraElement.one(3)


# -- presentation -----------------------------------------------------------------

def _report(k, rid, instance=None):
    for r in check_presentation(k):
        if r.id == rid and (instance is None or r.instance == instance):
            return r
    raise LookupError(rid)


def test_braid_relation_k3():
    assert _report(3, "S(c)", "s1 s2 s1 = s2 s1 s2").holds


def test_tpt_relation_k2():
    assert _report(2, "RB(d)", "t1 p1 t1 = t1").holds


def test_quadratic_discrepancy_k2():
    good = _report(2, "B(a)")
    printed = _report(2, PRINTED_QUADRATIC_ID)
    assert good.holds
    assert not printed.holds
    assert printed.note == DISCREPANCY_NOTE
    # the printed form is off by exactly one copy of t1
    assert printed.difference == e("t", 1, 2).scale(-ONE)


@pytest.mark.parametrize("k", range(6))
def test_presentation_holds(k):
    reports = check_presentation(k)
    assert presentation_ok(reports)
    assert all(r.holds for r in reports if r.id != PRINTED_QUADRATIC_ID)


def test_presentation_bound():
    with pytest.raises(ValueError):
        check_presentation(7)


def test_report_json_shape():
    rep = _report(2, PRINTED_QUADRATIC_ID).to_json()
    assert rep["holds"] is False and "x+1" in rep["note"]
    assert rep["difference"]["terms"]
