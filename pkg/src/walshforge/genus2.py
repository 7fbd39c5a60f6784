"""Supersingular genus-2 machinery for curves y^2 + y = a x^5 + b x^3 + c x + d.

The quadratic form Q(x) = Tr(x R(x)) with R = a x^4 + b x^2 + c^2 x has a
radical W equal to the kernel in the field of the linearized polynomial

    E_{a,b}(x) = a^4 x^16 + b^4 x^8 + b^2 x^2 + a x = x P(x) (1 + x^5 P(x)),
    P(x) = a^2 x^5 + b^2 x + a.

With w = dim W, the point count over GF(2^m) is 1 + q when Q does not vanish
on all of W, and 1 + q +- sqrt(2^w q) otherwise; w == m (mod 2).  For curves
in a = b normal form the Maisner-Nart criterion reads w off the trace of
ell = (1 + z^-4)^(1/3) at a root z of P.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx, TABLE_MAX_M


@dataclass(frozen=True)
class QuinticCurve:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("degenerate curve: coefficient a of x^5 must be nonzero")


@dataclass
class SymplecticData:
    w: int
    W_basis: list[int]
    Q_on_basis: list[int]
    V_equals_W: bool
    predicted_counts: set[int] | None = None


def q_form(ctx: FieldCtx, curve: QuinticCurve, x: int) -> int:
    """Tr(x * (a x^4 + b x^2 + c^2 x)); equals Tr(a x^5 + b x^3 + c x)."""
    r = ctx.mul(curve.a, ctx.pow(x, 4)) ^ ctx.mul(curve.b, ctx.pow(x, 2)) \
        ^ ctx.mul(ctx.mul(curve.c, curve.c), x)
    return ctx.trace(ctx.mul(x, r))


def e_poly(ctx: FieldCtx, a: int, b: int, x: int) -> int:
    if a == 0:
        raise ValueError("e_poly requires a != 0")
    return (ctx.mul(ctx.pow(a, 4), ctx.pow(x, 16))
            ^ ctx.mul(ctx.pow(b, 4), ctx.pow(x, 8))
            ^ ctx.mul(ctx.pow(b, 2), ctx.pow(x, 2))
            ^ ctx.mul(a, x))


def p_poly(ctx: FieldCtx, a: int, b: int, x: int) -> int:
    return ctx.mul(ctx.pow(a, 2), ctx.pow(x, 5)) ^ ctx.mul(ctx.pow(b, 2), x) ^ a


def radical(ctx: FieldCtx, curve: QuinticCurve) -> SymplecticData:
    """Kernel of x -> E_{a,b}(x) as GF(2)-linear map, plus Q on a kernel basis."""
    piv: dict[int, tuple[int, int]] = {}
    kernel: list[int] = []
    for j in range(ctx.m):
        v, comb = e_poly(ctx, curve.a, curve.b, 1 << j), 1 << j
        while v:
            h = v.bit_length() - 1
            if h not in piv:
                piv[h] = (v, comb)
                break
            pv, pc = piv[h]
            v ^= pv
            comb ^= pc
        else:
            kernel.append(comb)
    qb = [q_form(ctx, curve, e) for e in kernel]
    return SymplecticData(w=len(kernel), W_basis=kernel, Q_on_basis=qb,
                          V_equals_W=all(v == 0 for v in qb))


def classify(ctx: FieldCtx, curve: QuinticCurve) -> SymplecticData:
    """Radical data plus the set of point counts the classification allows."""
    data = radical(ctx, curve)
    if not data.V_equals_W:
        data.predicted_counts = {1 + ctx.q}
    else:
        r = math.isqrt((1 << data.w) * ctx.q)
        if r * r != (1 << data.w) * ctx.q:
            raise AssertionError(f"2^w*q not a square: w={data.w}, m={ctx.m}")
        data.predicted_counts = {1 + ctx.q - r, 1 + ctx.q + r}
    return data


def count_points_affine(ctx: FieldCtx, curve: QuinticCurve) -> int:
    """2 * #{x : Tr(a x^5 + b x^3 + c x + d) = 0} by direct enumeration."""
    if ctx.m <= TABLE_MAX_M:
        vals = (ctx.monomial_table(curve.a, 5)
                ^ ctx.monomial_table(curve.b, 3)
                ^ ctx.monomial_table(curve.c, 1)
                ^ np.int64(curve.d))
        zeros = int(ctx.q - ctx.trace_bits(vals).sum())
    else:
        zeros = sum(
            1 for x in range(ctx.q)
            if ctx.trace(ctx.mul(curve.a, ctx.pow(x, 5)) ^ ctx.mul(curve.b, ctx.pow(x, 3))
                         ^ ctx.mul(curve.c, x) ^ curve.d) == 0)
    return 2 * zeros


def count_points(ctx: FieldCtx, curve: QuinticCurve) -> int:
    # one point at infinity on the smooth model
    return count_points_affine(ctx, curve) + 1


def normalize_ab(ctx: FieldCtx, curve: QuinticCurve) -> tuple[QuinticCurve, int]:
    """Rescale x -> lam*x with lam = sqrt(b/a), giving an a = b curve.

    Returns (normalized curve, lam).  The substitution is a bijection of the
    field, so affine point counts and w are preserved.  Requires b != 0.
    """
    if curve.b == 0:
        raise ValueError("normalize_ab needs b != 0 (b = 0 is already the degenerate branch)")
    lam = ctx.sqrt(ctx.mul(curve.b, ctx.inv(curve.a)))
    nc = QuinticCurve(
        a=ctx.mul(curve.a, ctx.pow(lam, 5)),
        b=ctx.mul(curve.b, ctx.pow(lam, 3)),
        c=ctx.mul(curve.c, lam),
        d=curve.d,
    )
    if nc.a != nc.b:
        raise AssertionError("normalization failed to reach a = b form")
    return nc, lam


def maisner_nart_w(ctx: FieldCtx, curve: QuinticCurve, z: int) -> dict:
    """w from a P-root z: w = 3 iff Tr(ell) = 0 with ell^3 = 1 + z^-4.

    Two accepted shapes: a = b != 0 (normal form), or b = 0 where
    P = a^2 x^5 + a has the single root z = (1/a)^(1/5) and w = 1, ell = 1.
    """
    if ctx.m % 2 == 0:
        raise ValueError("maisner_nart_w requires odd m")
    if p_poly(ctx, curve.a, curve.b, z) != 0:
        raise ValueError(f"z={z:#x} is not a root of P for this curve")
    if curve.b == 0:
        return {"w": 1, "ell": 1}
    if curve.a != curve.b:
        raise ValueError("curve must be in a = b normal form (see normalize_ab) or have b = 0")
    ell = ctx.kth_root(1 ^ ctx.inv(ctx.pow(z, 4)), 3)
    return {"w": 3 if ctx.trace(ell) == 0 else 1, "ell": ell}


# ---------------------------------------------------------------------------
# JSON round-trip: {"a":"0x..","b":"0x..","c":"0x..","d":"0x.."}

def curve_to_json(curve: QuinticCurve) -> str:
    return json.dumps({k: hex(getattr(curve, k)) for k in ("a", "b", "c", "d")})


def curve_from_json(text: str) -> QuinticCurve:
    try:
        obj = json.loads(text)
        return QuinticCurve(*(int(obj[k], 16) for k in ("a", "b", "c", "d")))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"malformed curve JSON: {exc}") from exc
