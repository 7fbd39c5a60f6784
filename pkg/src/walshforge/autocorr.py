"""Directional autocorrelation sums X_alpha — the second route to sigma4.

X_alpha = (sum_x (-1)^(Tr(G(x) + G(x+alpha))))^2.  The sums here are computed
by direct gather over the truth table, never through the Walsh transform, so
that q^2 + sum_alpha X_alpha = l4_fourth(fwht(table)) stays a genuine
cross-check between two independent computation paths.
"""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .boolfn import TracePoly, truth_table
from .field import FieldCtx

_VEC_MAX_M = 16


@dataclass
class XAlphaTable:
    q: int
    x: np.ndarray       # x[alpha] = X_alpha; x[0] unused (0)
    signed: np.ndarray  # the signed sums before squaring, kept for debugging

    def entries(self):
        """(alpha, X_alpha) pairs for alpha != 0, in alpha order."""
        return ((a, int(self.x[a])) for a in range(1, self.q))


def x_alpha_from_bits(bits: np.ndarray, alpha: int) -> int:
    q = len(bits)
    if not 0 < alpha < q:
        raise ValueError(f"alpha={alpha} outside 1..q-1")
    mism = int((bits ^ bits[np.arange(q) ^ alpha]).sum())
    s = q - 2 * mism
    if s % 2:
        raise AssertionError("signed autocorrelation sum must be even")
    return s * s


def x_alpha(ctx: FieldCtx, g: TracePoly, alpha: int) -> int:
    return x_alpha_from_bits(truth_table(ctx, g), alpha)


def x_alpha_all(ctx: FieldCtx, g: TracePoly, threads: int = 1) -> XAlphaTable:
    """Full table over alpha != 0; O(q^2) gathers, shardable over alpha."""
    if ctx.m > _VEC_MAX_M:
        raise ValueError(f"full X_alpha table infeasible beyond m={_VEC_MAX_M}")
    bits = truth_table(ctx, g)
    q = ctx.q
    idx = np.arange(q)
    signed = np.zeros(q, dtype=np.int64)

    def fill(lo: int, hi: int) -> None:
        for a in range(lo, hi):
            signed[a] = q - 2 * int((bits ^ bits[idx ^ a]).sum())

    if threads > 1:
        step = -(-(q - 1) // threads)
        ranges = [(lo, min(lo + step, q)) for lo in range(1, q, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda r: fill(*r), ranges))
    else:
        fill(1, q)
    if (signed[1:] % 2).any():
        raise AssertionError("signed autocorrelation sum must be even")
    return XAlphaTable(q=q, x=signed * signed, signed=signed)


def sigma_autocorr(table: XAlphaTable) -> int:
    """q^2 + sum of X_alpha — must equal the spectral sigma4 exactly."""
    return table.q * table.q + int(table.x[1:].sum())


def sigma_decomposition(table: XAlphaTable) -> dict:
    """Counts N0 = #{X=2q}, N = #{X=8q}, Z = #{X=0}.

    Any entry outside {0, 2q, 8q} means an even m, a7 = 0, or a bug, and is
    reported with the offending alpha.
    """
    q = table.q
    n0 = n = z = 0
    for alpha in range(1, q):
        v = int(table.x[alpha])
        if v == 0:
            z += 1
        elif v == 2 * q:
            n0 += 1
        elif v == 8 * q:
            n += 1
        else:
            raise ValueError(
                f"X_alpha={v} at alpha={alpha:#x} outside {{0, {2*q}, {8*q}}}: "
                "trichotomy violated (even m, a7 = 0, or implementation bug)")
    return {"N0": n0, "N": n, "Z": z}


def table_csv(table: XAlphaTable, fileobj) -> None:
    w = csv.writer(fileobj)
    w.writerow(["alpha", "x_alpha"])
    for a, v in table.entries():
        w.writerow([a, v])
