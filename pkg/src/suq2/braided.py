"""Twisted tensor products of presented graded algebras.

``twisted_tensor([P1, ..., Pn], zeta)`` builds one flat presentation whose
letters carry leg tags 1..n.  Normal words put leg-1 letters first, then
leg-2, and so on; a leg-j letter y of degree l directly left of a leg-i
letter x of degree k (i < j) commutes across it with the factor
``zeta^(-k*l)``, which is the directed form of the cross-leg commutation law
``j_i(x) j_j(y) = zeta^(k*l) j_j(y) j_i(x)``.  Iterating is unnecessary: the
triple product is built directly with three legs and the same pairwise
twist, and bracketed forms are identified with it letter-for-letter.
"""

from __future__ import annotations

from .algebra import (
    Generator,
    Presentation,
    RewriteRule,
    _PRESENTATION_CACHE,
)
from .errors import PresentationMismatchError
from .scalars import Scalar


def twisted_tensor(factors, zeta=None):
    """The zeta-twisted tensor product of two or more base presentations."""
    factors = tuple(factors)
    if len(factors) < 2:
        raise ValueError("a tensor product needs at least two factors")
    for f in factors:
        if f.factors is not None:
            raise ValueError("tensor factors must be base presentations")
    if zeta is None:
        zeta = Scalar.zeta()
    if not isinstance(zeta, Scalar):
        raise TypeError("zeta must be a Scalar")
    if not (zeta * zeta.conjugate()).is_one():
        raise ValueError("zeta must be formally unimodular")
    key = ("tensor", tuple(f._token for f in factors), zeta)
    cached = _PRESENTATION_CACHE.get(key)
    if cached is not None:
        return cached

    gens = []
    offsets = [0]
    for leg, f in enumerate(factors, start=1):
        base = offsets[-1]
        for g in f.generators:
            gens.append(Generator(g.name, g.degree, g.adjoint + base, leg))
        offsets.append(base + f.n_gens)

    rules = []
    for leg, f in enumerate(factors, start=1):
        base = offsets[leg - 1]
        for rule in f.rules.values():
            lhs = tuple(i + base for i in rule.lhs)
            rhs = tuple((c, tuple(i + base for i in w)) for c, w in rule.rhs)
            rules.append(RewriteRule(lhs, rhs))
    # cross-leg rules: [y][x] -> zeta^(-deg(x)*deg(y)) [x][y] for legs(y) > legs(x)
    for i_leg in range(1, len(factors) + 1):
        for j_leg in range(i_leg + 1, len(factors) + 1):
            fi, fj = factors[i_leg - 1], factors[j_leg - 1]
            bi, bj = offsets[i_leg - 1], offsets[j_leg - 1]
            for xi, gx in enumerate(fi.generators):
                for yj, gy in enumerate(fj.generators):
                    coeff = zeta ** (-(gx.degree * gy.degree))
                    rules.append(
                        RewriteRule(
                            (yj + bj, xi + bi),
                            ((coeff, (xi + bi, yj + bj)),),
                        )
                    )

    label = " x ".join(f.label for f in factors)
    params = dict(factors[0].params)
    params["zeta"] = zeta
    pres = Presentation(label, gens, rules, params=params, factors=factors)
    _PRESENTATION_CACHE[key] = pres
    return pres


def retag(x, target, offset):
    """Copy an element into ``target`` shifting every letter by ``offset``."""
    raw = [(c, tuple(i + offset for i in w)) for w, c in x.terms()]
    return target.normalize_raw(raw)


def embed(product, leg, x):
    """The injective unital *-homomorphism of one factor into the product."""
    if product.factors is None:
        raise ValueError("embed needs a tensor-product presentation")
    if not (1 <= leg <= len(product.factors)):
        raise ValueError(f"invalid leg {leg}")
    factor = product.factors[leg - 1]
    if x.pres is not factor:
        raise PresentationMismatchError()
    return retag(x, product, product.leg_offsets[leg - 1])


def grading_flip(pres):
    """The same presentation with every degree negated.

    Flipping a tensor product returns the tensor product of the flipped
    factors with the same twist: the cross-leg coefficient depends on the
    product of two degrees, which a global sign flip leaves unchanged.
    """
    if pres._flip is not None:
        return pres._flip
    if pres.factors is not None:
        flipped = twisted_tensor(
            [grading_flip(f) for f in pres.factors], pres.params["zeta"]
        )
    else:
        key = ("flip", pres._token)
        flipped = _PRESENTATION_CACHE.get(key)
        if flipped is None:
            gens = [
                Generator(g.name, -g.degree, g.adjoint, g.leg)
                for g in pres.generators
            ]
            flipped = Presentation(
                pres.label + "-flip",
                gens,
                list(pres.rules.values()),
                params=pres.params,
            )
            _PRESENTATION_CACHE[key] = flipped
    pres._flip = flipped
    flipped._flip = pres
    return flipped


def tensor_morphism(morphisms, target):
    """The morphism between tensor products acting leg-wise.

    ``morphisms`` is one generator morphism per source leg; ``target`` must be
    the flat tensor product whose leg list is the concatenation of the target
    leg lists of the given morphisms.  Each morphism must be verified and
    degree-preserving, otherwise the cross-leg commutation rule would not be
    respected by the combined map.
    """
    from .morphisms import GenMorphism

    morphisms = list(morphisms)
    if target.factors is None:
        raise ValueError("target must be a tensor-product presentation")
    source_factors = tuple(m.source for m in morphisms)
    source = twisted_tensor(source_factors, target.params["zeta"])
    expected = []
    for m in morphisms:
        expected.extend(m.target.factors or (m.target,))
    if tuple(expected) != target.factors:
        raise PresentationMismatchError(
            "presentation-mismatch: target legs do not match morphism targets"
        )
    for m in morphisms:
        if not m.is_equivariant():
            raise ValueError(
                "tensor_morphism needs degree-preserving (equivariant) morphisms"
            )

    images = {}
    offset = 0
    for leg, m in enumerate(morphisms, start=1):
        src_base = source.leg_offsets[leg - 1]
        for i, g in enumerate(m.source.generators):
            if i > g.adjoint:
                continue  # starred images are forced
            images[src_base + i] = retag(m.letter_image(i), target, offset)
        offset += m.target.n_gens

    name = " x ".join(m.name for m in morphisms)
    return GenMorphism(source, target, images, name=f"({name})")
