"""Frobenius images and pushforward decomposition on polynomial rings.

Viewing the polynomial ring through the e-th Frobenius makes it a free
module on the reduced monomials, the monomials whose exponents all lie in
[0, p^e).  Every f then has a unique expression

    f = sum over reduced monomials rho of (f_rho)^(p^e) * rho,

and because the coefficient field is finite (hence perfect) each component
f_rho is computed directly: split each exponent vector as p^e*beta + rho
and take the p^e-th root of the coefficient.  No linear algebra is needed.
"""

from __future__ import annotations

from itertools import product

from .errors import ExponentOverflow, SizeBound
from .ffield import frobenius_pow, pth_root
from .poly import EXPONENT_LIMIT, MultiPoly, format_monomial, graded_key

DEFAULT_BASIS_BOUND = 1 << 16


def frobenius_image(f: MultiPoly, e: int) -> MultiPoly:
    """f^(p^e): exponents scale by p^e, coefficients run through Frobenius."""
    if e < 0:
        raise ValueError("e must be nonnegative")
    if e == 0:
        return f
    pe = f.ctx.p ** e
    terms = {}
    for exp, coeff in f.terms.items():
        scaled = tuple(a * pe for a in exp)
        for a in scaled:
            if a > EXPONENT_LIMIT:
                raise ExponentOverflow(f"exponent {a} exceeds 32-bit bound")
        terms[scaled] = frobenius_pow(coeff, e)
    return MultiPoly(f.ctx, f.nvars, terms)


class FrobDecomposition:
    """Components of f over the level-e reduced-monomial basis."""

    __slots__ = ("ctx", "nvars", "e", "components")

    def __init__(self, ctx, nvars, e, components):
        self.ctx = ctx
        self.nvars = nvars
        self.e = e
        self.components = components  # reduced exponent tuple -> MultiPoly

    def component(self, rho) -> MultiPoly:
        return self.components.get(
            tuple(rho), MultiPoly.zero(self.ctx, self.nvars))

    def sorted_components(self) -> list:
        return [(rho, self.components[rho])
                for rho in sorted(self.components, key=graded_key)]

    def recompose(self) -> MultiPoly:
        total = MultiPoly.zero(self.ctx, self.nvars)
        for rho, part in self.components.items():
            total = total + frobenius_image(part, self.e) * MultiPoly.monomial(
                self.ctx, self.nvars, rho)
        return total

    def __repr__(self):
        body = ", ".join(
            f"{format_monomial(rho, self.nvars)}: {part}"
            for rho, part in self.sorted_components())
        return f"FrobDecomposition(e={self.e}, {{{body}}})"


def decompose(f: MultiPoly, e: int) -> FrobDecomposition:
    """Unique pushforward decomposition of f at level e >= 1."""
    if e < 1:
        raise ValueError("decomposition level must be >= 1")
    pe = f.ctx.p ** e
    buckets: dict = {}
    for exp, coeff in f.terms.items():
        beta = tuple(a // pe for a in exp)
        rho = tuple(a % pe for a in exp)
        buckets.setdefault(rho, {})[beta] = pth_root(coeff, e)
    components = {
        rho: MultiPoly(f.ctx, f.nvars, terms)
        for rho, terms in buckets.items()
    }
    return FrobDecomposition(f.ctx, f.nvars, e, components)


def recompose(d: FrobDecomposition) -> MultiPoly:
    return d.recompose()


def is_pe_power(f: MultiPoly, e: int) -> bool:
    """True iff f lies in the subring of p^e-th powers."""
    if e < 1:
        raise ValueError("level must be >= 1")
    zero_exp = (0,) * f.nvars
    return all(rho == zero_exp for rho in decompose(f, e).components)


def free_basis(nvars: int, p: int, e: int, bound: int = DEFAULT_BASIS_BOUND):
    """All level-e reduced monomials, degree-ascending; rank p^(e*nvars)."""
    if e < 1:
        raise ValueError("level must be >= 1")
    count = p ** (e * nvars)
    if count > bound:
        raise SizeBound(
            f"free basis has {count} elements, above the bound {bound}")
    pe = p ** e
    exps = [tuple(reversed(t)) for t in product(range(pe), repeat=nvars)]
    exps.sort(key=graded_key)
    return exps
