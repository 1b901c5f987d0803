"""Twisted tensor products, leg embeddings, and the grading flip."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from suq2 import (
    PresentationMismatchError,
    Scalar,
    embed,
    grading_flip,
    suq2_presentation,
    tensor_morphism,
    twisted_tensor,
)
from suq2.morphisms import delta_su, identity_morphism, iota2

A = suq2_presentation()
ZETA = A.params["zeta"]
AA = twisted_tensor([A, A], ZETA)
A3 = twisted_tensor([A, A, A], ZETA)


def j(leg, x, product=AA):
    return embed(product, leg, x)


def test_products_are_cached():
    assert twisted_tensor([A, A], ZETA) is AA
    assert twisted_tensor([A, A, A], ZETA) is A3


def test_cross_rule_examples():
    g, gs, a = A.gen("g"), A.gen("g'"), A.gen("a")
    # j2(g) j1(g) -> zeta^-1 j1(g) j2(g)
    assert j(2, g) * j(1, g) == (j(1, g) * j(2, g)).scale(ZETA.inverse())
    # degree-zero letters cross freely
    for x in (g, gs, a, A.gen("a'")):
        assert j(2, a) * j(1, x) == j(1, x) * j(2, a)
    # j2(g') j1(g) -> zeta j1(g) j2(g')
    assert j(2, gs) * j(1, g) == (j(1, g) * j(2, gs)).scale(ZETA)


def test_embed_is_a_unital_star_homomorphism():
    x = A.gen("a") * A.gen("g") - A.gen("g'").scale(A.params["q"])
    y = A.gen("g") * A.gen("a'")
    for leg in (1, 2):
        assert j(leg, x * y) == j(leg, x) * j(leg, y)
        assert j(leg, x.adjoint()) == j(leg, x).adjoint()
        assert j(leg, A.unit()) == AA.unit()
        assert j(leg, x).degree() == x.degree()


def test_embed_rejects_bad_leg_and_presentation():
    with pytest.raises(ValueError):
        embed(AA, 3, A.gen("a"))
    with pytest.raises(ValueError):
        embed(A, 1, A.gen("a"))
    B = grading_flip(A)
    with pytest.raises(PresentationMismatchError):
        embed(AA, 1, B.gen("a"))


def test_cross_commutation_witness():
    # j1(x) j2(y) = zeta^(deg x deg y) j2(y) j1(x) on monomials
    rng = random.Random(5)
    words = [tuple(rng.randrange(4) for _ in range(rng.randint(1, 3))) for _ in range(40)]
    words += [(i,) for i in range(4)]
    for xw, yw in zip(words, reversed(words)):
        x, y = A.element([(1, xw)]), A.element([(1, yw)])
        k, l = A.degree_of_word(xw), A.degree_of_word(yw)
        assert j(1, x) * j(2, y) == (j(2, y) * j(1, x)).scale(ZETA ** (k * l))


def test_ordinary_tensor_legs_commute():
    plain = twisted_tensor([A, A], Scalar.one())
    for xi, yi in itertools.product(range(4), repeat=2):
        x, y = A.gen(xi), A.gen(yi)
        assert (
            embed(plain, 1, x) * embed(plain, 2, y)
            == embed(plain, 2, y) * embed(plain, 1, x)
        )


def test_triple_product_association_orders_agree():
    x = A.gen("a") * A.gen("g")
    y = A.gen("g'")
    z = A.gen("a'") * A.gen("g")
    e1, e2, e3 = j(1, x, A3), j(2, y, A3), j(3, z, A3)
    assert (e1 * e2) * e3 == e1 * (e2 * e3)
    # fully mixed word reduces to leg-sorted normal form
    mixed = e3 * e1 * e2
    for word, _ in mixed.terms():
        legs = [A3.leg_of(i) for i in word]
        assert legs == sorted(legs)


def test_grading_flip_involution_and_degrees():
    S = grading_flip(A)
    assert S.generators[A.gen_index("g")].degree == -1
    assert grading_flip(S) is A
    # same rules, same normal forms
    raw = [(Scalar.one(), (3, 2, 0, 1))]
    assert S.normalize_raw(raw).terms() == A.normalize_raw(raw).terms()


def test_flip_of_product_keeps_twist():
    SS = grading_flip(AA)
    S = grading_flip(A)
    assert SS is twisted_tensor([S, S], ZETA)
    g = S.gen("g")
    lhs = embed(SS, 2, g) * embed(SS, 1, g)
    assert lhs == (embed(SS, 1, g) * embed(SS, 2, g)).scale(ZETA.inverse())


def test_tensor_morphism_bifunctoriality():
    d = delta_su()
    d.check()
    ident = identity_morphism(A)
    ident.check()
    m = tensor_morphism([d, ident], A3)
    assert m.check()
    # on leg 1 generators: m(j1(x)) = retag of delta(x) into legs (1, 2)
    for name in ("a", "g"):
        x = A.gen(name)
        got = m.apply(embed(AA, 1, x))
        expected_terms = []
        for word, coeff in d.apply(x).terms():
            expected_terms.append((coeff, word))  # legs 1,2 keep their indices
        assert got == A3.normalize_raw(expected_terms)
    # on leg 2: m(j2(x)) = j3(x)
    offset = A3.leg_offsets[2] - 0
    for name in ("a", "g", "g'"):
        x = A.gen(name)
        got = m.apply(embed(AA, 2, x))
        expected = A3.normalize_raw(
            [(c, tuple(i + offset for i in w)) for w, c in x.terms()]
        )
        assert got == expected


def test_tensor_morphism_identity_pair_is_identity():
    ident = identity_morphism(A)
    ident.check()
    m = tensor_morphism([ident, ident], AA)
    x = j(1, A.gen("a")) * j(2, A.gen("g"))
    assert m.apply(x) == x


def test_tensor_morphism_rejects_non_equivariant():
    i2 = iota2()
    i2.check()
    assert not i2.is_equivariant()
    B = i2.target.factors[0]
    target4 = twisted_tensor([B, B, B, B], Scalar.one())
    with pytest.raises(ValueError, match="equivariant"):
        tensor_morphism([i2, i2], target4)
