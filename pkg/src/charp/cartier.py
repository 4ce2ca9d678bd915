"""Maps inverse to Frobenius on polynomial rings.

A level-e map is represented by a multiplier polynomial g and acts as
f -> top-component of g*f, where the top component is the pushforward
coefficient at the reduced monomial (p^e - 1, ..., p^e - 1).  For a
polynomial ring this representation is complete: the pushforward is free,
its Hom into the ring is generated by the top projection, and distinct
multipliers give distinct maps.

Composition follows the convention compose(outer, inner)(f) =
outer(inner(f)); the composite has level e_outer + e_inner and multiplier
frobenius_image(g_outer, e_inner) * g_inner.  That formula is not taken on
faith: the test suite checks it against directly chained applications.
"""

from __future__ import annotations

from .errors import ContextMismatch
from .ffield import pth_root
from .frobenius import free_basis, frobenius_image
from .poly import (MonomialIdeal, MultiPoly, format_poly, random_poly)


def trace_project(f: MultiPoly, e: int) -> MultiPoly:
    """Pushforward component of f at the top reduced monomial.

    Only the one component is materialized: a term contributes exactly when
    every exponent is congruent to p^e - 1 modulo p^e.
    """
    if e < 1:
        raise ValueError("level must be >= 1")
    pe = f.ctx.p ** e
    top = pe - 1
    terms = {}
    for exp, coeff in f.terms.items():
        if all(a % pe == top for a in exp):
            beta = tuple((a - top) // pe for a in exp)
            terms[beta] = pth_root(coeff, e)
    return MultiPoly(f.ctx, f.nvars, terms)


class CartierMap:
    """Additive map with apply(r^(p^e) * s) = r * apply(s), via a multiplier."""

    __slots__ = ("e", "g")

    def __init__(self, e: int, g: MultiPoly):
        if e < 1:
            raise ValueError("map level must be >= 1")
        self.e = e
        self.g = g

    @property
    def ctx(self):
        return self.g.ctx

    @property
    def nvars(self):
        return self.g.nvars

    def apply(self, f: MultiPoly) -> MultiPoly:
        if f.ctx is not self.ctx or f.nvars != self.nvars:
            raise ContextMismatch("polynomial does not match the map's ring")
        return trace_project(self.g * f, self.e)

    def is_splitting(self) -> bool:
        one = MultiPoly.const(self.ctx, self.nvars, 1)
        return self.apply(one) == one

    def __eq__(self, other):
        if not isinstance(other, CartierMap):
            return NotImplemented
        return self.e == other.e and self.g == other.g

    def __hash__(self):
        return hash((self.e, self.g))

    def __repr__(self):
        return f"CartierMap(e={self.e}, g={format_poly(self.g)})"


def apply_map(phi: CartierMap, f: MultiPoly) -> MultiPoly:
    return phi.apply(f)


def canonical_splitting(ctx, nvars: int, e: int) -> CartierMap:
    """The splitting with multiplier (x_1 ... x_n)^(p^e - 1); sends 1 to 1."""
    top = ctx.p ** e - 1
    g = MultiPoly.monomial(ctx, nvars, (top,) * nvars)
    return CartierMap(e, g)


def is_splitting(phi: CartierMap) -> bool:
    return phi.is_splitting()


def compose(outer: CartierMap, inner: CartierMap) -> CartierMap:
    """The map f -> outer(inner(f)), of level outer.e + inner.e."""
    if outer.ctx is not inner.ctx or outer.nvars != inner.nvars:
        raise ContextMismatch("maps live on different rings")
    g = frobenius_image(outer.g, inner.e) * inner.g
    return CartierMap(outer.e + inner.e, g)


def check_linearity(phi: CartierMap, trials: int, rng) -> bool:
    """Sample the defining law apply(r^(p^e) * s) = r * apply(s)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ctx, n = phi.ctx, phi.nvars
    for _ in range(trials):
        r = random_poly(ctx, n, rng, max_terms=3, max_degree=3)
        s = random_poly(ctx, n, rng, max_terms=4, max_degree=5)
        lhs = phi.apply(frobenius_image(r, phi.e) * s)
        rhs = r * phi.apply(s)
        if lhs != rhs:
            return False
    return True


def check_compatible(phi: CartierMap, ideal: MonomialIdeal,
                     basis_bound=None) -> bool:
    """Whether phi maps the pushforward of the ideal back into the ideal.

    The pushforward of a monomial ideal is generated over the base ring by
    the products u*b with u a minimal generator and b a reduced basis
    monomial, so checking those finitely many images suffices.
    """
    ctx, n = phi.ctx, phi.nvars
    if ideal.nvars != n:
        raise ContextMismatch("ideal and map variable counts differ")
    kwargs = {} if basis_bound is None else {"bound": basis_bound}
    basis = free_basis(n, ctx.p, phi.e, **kwargs)
    for gen in ideal.generators:
        u = MultiPoly.monomial(ctx, n, gen)
        for b in basis:
            image = phi.apply(u * MultiPoly.monomial(ctx, n, b))
            if not ideal.member(image):
                return False
    return True
