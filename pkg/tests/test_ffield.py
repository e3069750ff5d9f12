import pickle

import pytest
from hypothesis import given, settings, strategies as st

from npcurves.errors import BadDegree, EnumerationCapExceeded, NotPrime, ParseError
from npcurves.ffield import (
    Field,
    FieldElement,
    canonical_modulus,
    embed,
    embedding,
    enumerate_field,
    is_irreducible,
    is_prime,
    make_field,
    norm_fibers,
    parse_element,
    trace_to_prime,
)
from oracles import exhaustive_irreducible

FIELDS = [(2, 1), (2, 3), (2, 8), (3, 1), (3, 4), (5, 2), (7, 3), (13, 2)]
field_params = st.sampled_from(FIELDS)


@st.composite
def field_and_elems(draw, n=3):
    p, r = draw(field_params)
    F = make_field(p, r)
    return F, [draw(st.integers(0, F.size - 1)) for _ in range(n)]


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2)])
def test_canonical_modulus_is_least_irreducible(p, r):
    mod = canonical_modulus(p, r)
    assert mod[-1] == 1 and len(mod) == r + 1
    assert exhaustive_irreducible(mod, p)
    # every monic polynomial of degree r with a smaller code is reducible
    code = sum(c * p**i for i, c in enumerate(mod[:-1]))
    for smaller in range(code):
        coeffs = [(smaller // p**i) % p for i in range(r)] + [1]
        assert not exhaustive_irreducible(coeffs, p)


@pytest.mark.parametrize("p,deg", [(2, 4), (3, 3), (5, 2)])
def test_is_irreducible_matches_exhaustive(p, deg):
    for code in range(p**deg):
        coeffs = [(code // p**i) % p for i in range(deg)] + [1]
        assert is_irreducible(coeffs, p) == exhaustive_irreducible(coeffs, p), coeffs


def test_bad_parameters():
    with pytest.raises(NotPrime):
        Field(4, 1)
    with pytest.raises(BadDegree):
        Field(3, 0)
    with pytest.raises(EnumerationCapExceeded):
        make_field(2, 20).codes(cap=1000)


@settings(max_examples=200, deadline=None)
@given(field_and_elems())
def test_field_axioms(data):
    F, (a, b, c) = data
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.size - 1) == 1


@settings(max_examples=200, deadline=None)
@given(field_and_elems(2))
def test_frobenius_and_trace(data):
    F, (a, b) = data
    p = F.p
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(a) == F.pow(a, p)
    assert F.frobenius(a, F.r) == a
    assert F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % p
    assert F.trace(a) == F._slow_trace(a)


@pytest.mark.parametrize("p,r", FIELDS[:6])
def test_trace_fibers_are_uniform(p, r):
    F = make_field(p, r)
    fib = [0] * p
    for x in F.codes():
        fib[F.trace(x)] += 1
    assert fib == [F.size // p] * p


@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)])
def test_norm_fibers(p, r):
    q = p**r
    fib = norm_fibers(make_field(p, r), make_field(p, 2 * r))
    assert len(fib) == q - 1 and set(fib.values()) == {q + 1}


@pytest.mark.parametrize("src,dst", [((2, 2), (2, 4)), ((2, 3), (2, 6)), ((3, 2), (3, 4)), ((5, 1), (5, 3))])
def test_embedding_is_ring_homomorphism(src, dst):
    S, T = make_field(*src), make_field(*dst)
    e = embedding(S, T)
    image = {e(a) for a in S.codes()}
    assert len(image) == S.size
    for a in range(S.size):
        for b in range(0, S.size, max(1, S.size // 7)):
            assert e(S.add(a, b)) == T.add(e(a), e(b))
            assert e(S.mul(a, b)) == T.mul(e(a), e(b))
    # the image is exactly the fixed field of x -> x^|S|
    fixed = {x for x in T.codes() if T.pow(x, S.size) == x}
    assert image == fixed


def test_embedding_wrong_degree():
    with pytest.raises(BadDegree):
        embedding(make_field(2, 2), make_field(2, 3))


def test_element_wrapper():
    F = make_field(3, 2)
    t = F.gen()
    assert str(t * t) == str(parse_element("t^2", F))
    assert (t + 1) * (t + 1) - t * t - 2 * t == FieldElement(F, 1)
    assert t.inverse() * t == FieldElement(F, 1)
    assert trace_to_prime(t) == F.trace(t.code)
    assert embed(t, make_field(3, 4)).field == make_field(3, 4)
    assert len(list(enumerate_field(F))) == 9
    assert FieldElement.from_coeffs(F, [1, 2]).coeffs == (1, 2)
    with pytest.raises(ParseError):
        parse_element("x+1", F)


def test_pickle_roundtrip():
    F = make_field(2, 5)
    assert pickle.loads(pickle.dumps(F)) == F


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([(3, 2), (3, 5), (3, 13), (5, 6), (7, 3), (13, 4), (31, 2)]), st.data())
def test_packed_multiplication_matches_schoolbook(pr, data):
    F = make_field(*pr)
    a = data.draw(st.integers(0, F.size - 1))
    b = data.draw(st.integers(0, F.size - 1))
    assert F.mul(a, b) == F._mul_schoolbook(a, b)
