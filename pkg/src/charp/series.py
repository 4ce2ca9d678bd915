"""Truncated power series over F_{p^m} and polynomial-to-series substitution.

A TruncatedSeries knows its coefficients a_0..a_{N-1} exactly; nothing is
assumed about coefficients at or beyond the precision N.  Arithmetic between
series of different precision truncates to the shorter one.
"""

from __future__ import annotations

import numpy as np

from ._kernels import series_mul
from .errors import ContextMismatch, PrecisionMismatch
from .ffield import FieldContext, FieldElement
from .poly import MultiPoly


class TruncatedSeries:
    """Dense exact series prefix; coefficients are an immutable (N, m) array."""

    __slots__ = ("ctx", "precision", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: np.ndarray):
        self.ctx = ctx
        arr = np.ascontiguousarray(coeffs, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != ctx.m:
            raise ValueError("coefficient array must have shape (N, m)")
        arr.setflags(write=False)
        self.coeffs = arr
        self.precision = arr.shape[0]

    @classmethod
    def from_elements(cls, ctx, elements) -> "TruncatedSeries":
        arr = np.zeros((len(elements), ctx.m), dtype=np.int64)
        for i, el in enumerate(elements):
            arr[i, :] = ctx.elem(el).coeffs
        return cls(ctx, arr)

    @classmethod
    def zeros(cls, ctx, precision) -> "TruncatedSeries":
        return cls(ctx, np.zeros((precision, ctx.m), dtype=np.int64))

    @classmethod
    def one(cls, ctx, precision) -> "TruncatedSeries":
        arr = np.zeros((precision, ctx.m), dtype=np.int64)
        arr[0, 0] = 1
        return cls(ctx, arr)

    def element_at(self, i: int) -> FieldElement:
        if not 0 <= i < self.precision:
            raise IndexError("coefficient index beyond known precision")
        return FieldElement(self.ctx, tuple(int(v) for v in self.coeffs[i]))

    def order(self):
        """Index of the first nonzero coefficient, or None if all N vanish."""
        nz = np.nonzero(self.coeffs.any(axis=1))[0]
        if nz.size == 0:
            return None
        return int(nz[0])

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision > self.precision:
            raise PrecisionMismatch(
                f"cannot extend precision {self.precision} to {precision}")
        if precision == self.precision:
            return self
        return TruncatedSeries(self.ctx, self.coeffs[:precision])

    def _compat(self, other: "TruncatedSeries"):
        if self.ctx is not other.ctx:
            raise ContextMismatch("series over different field contexts")

    def __add__(self, other):
        self._compat(other)
        n = min(self.precision, other.precision)
        return TruncatedSeries(
            self.ctx, (self.coeffs[:n] + other.coeffs[:n]) % self.ctx.p)

    def __sub__(self, other):
        self._compat(other)
        n = min(self.precision, other.precision)
        return TruncatedSeries(
            self.ctx, (self.coeffs[:n] - other.coeffs[:n]) % self.ctx.p)

    def __neg__(self):
        return TruncatedSeries(self.ctx, (-self.coeffs) % self.ctx.p)

    def __mul__(self, other):
        self._compat(other)
        n = min(self.precision, other.precision)
        out = series_mul(self.coeffs, other.coeffs,
                         self.ctx.reduction_array, self.ctx.p, n)
        return TruncatedSeries(self.ctx, out)

    def scale(self, coeff: FieldElement) -> "TruncatedSeries":
        coeff = self.ctx.elem(coeff)
        b = np.array([coeff.coeffs], dtype=np.int64)
        out = series_mul(self.coeffs, b, self.ctx.reduction_array,
                         self.ctx.p, self.precision)
        return TruncatedSeries(self.ctx, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative series power")
        result = TruncatedSeries.one(self.ctx, self.precision)
        base = self
        while k:
            if k & 1:
                result = result * base
            if k > 1:
                base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.ctx is other.ctx
                and self.precision == other.precision
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.ctx), self.precision, self.coeffs.tobytes()))

    def __repr__(self):
        pieces = []
        shown = 0
        for i in range(self.precision):
            if not self.coeffs[i].any():
                continue
            el = self.element_at(i)
            cstr = str(el)
            if i == 0:
                pieces.append(cstr)
            else:
                tpart = "t" if i == 1 else f"t^{i}"
                if cstr == "1":
                    pieces.append(tpart)
                elif "+" in cstr:
                    pieces.append(f"({cstr})*{tpart}")
                else:
                    pieces.append(f"{cstr}*{tpart}")
            shown += 1
            if shown >= 8:
                pieces.append("...")
                break
        body = " + ".join(pieces) if pieces else "0"
        return f"<series {body} + O(t^{self.precision})>"


def _power_cached(base_arr, k, cache, red, p, nout):
    """base^k as a raw array, by binary powering with memoization."""
    hit = cache.get(k)
    if hit is not None:
        return hit
    if k == 1:
        cache[1] = base_arr
        return base_arr
    half = _power_cached(base_arr, k // 2, cache, red, p, nout)
    out = series_mul(half, half, red, p, nout)
    if k & 1:
        out = series_mul(out, base_arr, red, p, nout)
    cache[k] = out
    return out


def substitute_series(f: MultiPoly, images, precision: int) -> TruncatedSeries:
    """Image of f under x_i -> images[i], exact modulo t^precision.

    Every image must carry at least the requested precision; the result is
    a ring-homomorphic image truncated at t^precision.
    """
    if len(images) != f.nvars:
        raise ValueError(
            f"need {f.nvars} series images, got {len(images)}")
    ctx = f.ctx
    for s in images:
        if s.ctx is not ctx:
            raise ContextMismatch("series image over a different field")
        if s.precision < precision:
            raise PrecisionMismatch(
                f"image precision {s.precision} below requested {precision}")
    p = ctx.p
    red = ctx.reduction_array
    image_arrs = [np.ascontiguousarray(s.coeffs[:precision]) for s in images]
    caches: list = [{} for _ in range(f.nvars)]
    acc = np.zeros((precision, ctx.m), dtype=np.int64)
    const_row = np.zeros((1, ctx.m), dtype=np.int64)
    for exp, coeff in f.terms.items():
        cur = None
        for j, e in enumerate(exp):
            if e == 0:
                continue
            pw = _power_cached(image_arrs[j], e, caches[j], red, p, precision)
            cur = pw if cur is None else series_mul(cur, pw, red, p, precision)
        if cur is None:
            acc[0] = (acc[0] + np.asarray(coeff.coeffs)) % p
        else:
            const_row[0, :] = coeff.coeffs
            term = series_mul(cur, const_row, red, p, precision)
            acc = (acc + term) % p
    return TruncatedSeries(ctx, acc)
