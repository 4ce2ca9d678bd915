"""Coefficient streams: total, deterministic oracles for series coefficients.

A stream answers "what is the t^n coefficient" for any n, which lets the
valuation engine realize arbitrary prefixes on demand.  The builtin streams
have rapidly growing gap exponents (factorials, shifted factorials, powers)
or seeded pseudorandom coefficients; all are non-units (zero constant term)
and are flagged transcendental-by-assumption over the rational function
field in t.  Nothing here proves transcendence; the valuation engine's
precision-exhaustion error is the runtime signal that a relation might
exist.
"""

from __future__ import annotations

import hashlib

from .errors import PolySyntaxError
from .ffield import FieldContext, FieldElement


class SeriesStream:
    """Deterministic coefficient oracle with a descriptive label."""

    __slots__ = ("ctx", "label", "oracle", "nonunit", "transcendental_assumed")

    def __init__(self, ctx: FieldContext, label: str, oracle,
                 nonunit: bool = True, transcendental_assumed: bool = False):
        self.ctx = ctx
        self.label = label
        self.oracle = oracle
        self.nonunit = nonunit
        self.transcendental_assumed = transcendental_assumed
        if nonunit and self.coefficient(0):
            raise ValueError(
                f"stream {label!r} flagged non-unit but a_0 != 0")

    def coefficient(self, n: int) -> FieldElement:
        if n < 0:
            raise ValueError("coefficient index must be nonnegative")
        return self.oracle(n)

    def realize(self, precision: int) -> list:
        return [self.coefficient(n) for n in range(precision)]

    def __repr__(self):
        return f"SeriesStream({self.label!r})"


def t_stream(ctx: FieldContext) -> SeriesStream:
    """The identity image: the series t itself."""
    one, zero = ctx.one, ctx.zero

    def oracle(n):
        return one if n == 1 else zero

    return SeriesStream(ctx, "t", oracle, nonunit=True,
                        transcendental_assumed=False)


def _exponent_set_stream(ctx, label, predicate):
    one, zero = ctx.one, ctx.zero

    def oracle(n):
        return one if n >= 1 and predicate(n) else zero

    return SeriesStream(ctx, label, oracle, nonunit=True,
                        transcendental_assumed=True)


def _is_factorial(n: int) -> bool:
    f, j = 1, 1
    while f < n:
        j += 1
        f *= j
    return f == n


def lacunary(ctx: FieldContext) -> SeriesStream:
    """Coefficient 1 exactly at the factorial exponents 1, 2, 6, 24, ..."""
    return _exponent_set_stream(ctx, "lacunary", _is_factorial)


def lacunary_shift(ctx: FieldContext, d: int) -> SeriesStream:
    """Coefficient 1 at the shifted factorial exponents j! + d."""
    if d < 0:
        raise ValueError("shift must be nonnegative")
    return _exponent_set_stream(
        ctx, f"lacunary-shift({d})", lambda n: n > d and _is_factorial(n - d))


def geometric_gap(ctx: FieldContext, b: int) -> SeriesStream:
    """Coefficient 1 at the exponents b, b^2, b^3, ..."""
    if b < 2:
        raise ValueError("gap base must be >= 2")

    def is_power(n):
        v = b
        while v < n:
            v *= b
        return v == n

    return _exponent_set_stream(ctx, f"geometric-gap({b})", is_power)


def from_seed(ctx: FieldContext, seed: int) -> SeriesStream:
    """Pseudorandom coefficients derived per-index from a recorded seed.

    Each coefficient hashes (seed, n), so access is random-access and
    reproducible across processes; the constant coefficient is forced to 0.
    """
    p, m = ctx.p, ctx.m

    def oracle(n):
        if n == 0:
            return ctx.zero
        digest = hashlib.sha256(f"charp-stream:{seed}:{n}".encode()).digest()
        value = int.from_bytes(digest, "big")
        residues = []
        for _ in range(m):
            residues.append(value % p)
            value //= p
        return FieldElement(ctx, tuple(residues))

    return SeriesStream(ctx, f"from-seed({seed})", oracle, nonunit=True,
                        transcendental_assumed=True)


def perturb(stream: SeriesStream, k: int, delta: FieldElement) -> SeriesStream:
    """Stream with delta added to the t^k coefficient."""
    if k < 1:
        raise ValueError("perturbation index must be >= 1 (non-unit streams)")
    delta = stream.ctx.elem(delta)
    base = stream.oracle

    def oracle(n):
        c = base(n)
        return c + delta if n == k else c

    sign = "+" if str(delta) == "1" else f"+{delta}*"
    label = f"{stream.label}{sign}t^{k}" if k != 1 else \
        f"{stream.label}{sign}t"
    return SeriesStream(stream.ctx, label, oracle, nonunit=True,
                        transcendental_assumed=stream.transcendental_assumed)


def builtin_streams(ctx: FieldContext) -> dict:
    """The named default catalog used by tests and documentation."""
    return {
        "lacunary": lacunary(ctx),
        "lacunary-shift(1)": lacunary_shift(ctx, 1),
        "geometric-gap(2)": geometric_gap(ctx, 2),
        "from-seed(7)": from_seed(ctx, 7),
        "from-seed(11)": from_seed(ctx, 11),
    }


_FACTORIES = {
    "lacunary": (lacunary, 0),
    "lacunary-shift": (lacunary_shift, 1),
    "geometric-gap": (geometric_gap, 1),
    "from-seed": (from_seed, 1),
    "t": (t_stream, 0),
}


def parse_stream_spec(text: str, ctx: FieldContext) -> SeriesStream:
    """Build a stream from a spec like `lacunary`, `from-seed(7)`,
    or `lacunary+t^3` (monomial perturbations, optional coefficient)."""
    spec = text.strip()
    # split off +t^k / -t^k / +c*t^k perturbation suffixes
    perturbations = []
    while True:
        cut = max(spec.rfind("+"), spec.rfind("-"))
        if cut <= 0:
            break
        tail = spec[cut + 1:].strip()
        sign = spec[cut]
        core = tail.replace(" ", "")
        if "t" not in core:
            break
        coeff_str, _, tpart = core.rpartition("t")
        coeff_str = coeff_str.rstrip("*")
        if tpart == "":
            k = 1
        elif tpart.startswith("^"):
            try:
                k = int(tpart[1:])
            except ValueError:
                raise PolySyntaxError(
                    f"bad perturbation exponent in {text!r}", cut)
        else:
            break
        coeff = 1 if coeff_str == "" else int(coeff_str)
        perturbations.append((k, coeff if sign == "+" else -coeff))
        spec = spec[:cut].strip()
    name, args = spec, []
    if "(" in spec:
        if not spec.endswith(")"):
            raise PolySyntaxError(f"unbalanced '(' in stream spec {text!r}", 0)
        name, argtext = spec[:-1].split("(", 1)
        args = [int(a) for a in argtext.split(",")] if argtext else []
    factory = _FACTORIES.get(name.strip())
    if factory is None:
        known = ", ".join(sorted(_FACTORIES))
        raise PolySyntaxError(
            f"unknown stream {name.strip()!r} (known: {known})", 0)
    fn, arity = factory
    if len(args) != arity:
        raise PolySyntaxError(
            f"stream {name.strip()!r} takes {arity} argument(s)", 0)
    stream = fn(ctx, *args) if args else fn(ctx)
    for k, coeff in reversed(perturbations):
        stream = perturb(stream, k, ctx.elem(coeff))
    return stream
