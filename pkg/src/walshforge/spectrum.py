"""Walsh transform of a truth table, spectral norms, and their sanity checks.

The transform pairs points with the coordinate dot product: with
chi(x) = (-1)^bits[x],

    values[v] = sum_x chi(x) * (-1)^parity(v & x).

The trace pairing Tr(v*x) differs from parity(v & x) by a linear change of
basis that only permutes the index v, so every norm is the same under either
convention (asserted by a test, not assumed).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class WalshSpectrum:
    m: int
    values: np.ndarray  # q signed integers

    @property
    def q(self) -> int:
        return 1 << self.m


def fwht(table: np.ndarray) -> WalshSpectrum:
    """Butterfly transform of a 0/1 truth table, O(q log q)."""
    q = len(table)
    m = q.bit_length() - 1
    if q < 1 or (1 << m) != q:
        raise ValueError(f"table length {q} is not a power of two")
    a = (1 - 2 * table.astype(np.int64)).reshape(1, q)
    h = 1
    while h < q:
        a = a.reshape(-1, 2 * h)
        left = a[:, :h].copy()
        right = a[:, h:].copy()
        a[:, :h] = left + right
        a[:, h:] = left - right
        h *= 2
    return WalshSpectrum(m=m, values=a.reshape(q))


def linf(spec: WalshSpectrum) -> int:
    return int(np.abs(spec.values).max())


def l4_fourth(spec: WalshSpectrum) -> int:
    """(1/q) * sum of values^4, exact.

    Parseval caps sum(values^4) at q^4, so int64 is safe through m = 15;
    larger fields fall back to arbitrary precision.
    """
    if spec.m <= 15:
        total = int(np.sum(spec.values ** 4))
    else:
        total = sum(int(v) ** 4 for v in spec.values)
    if total % spec.q:
        raise AssertionError("sum of fourth powers not divisible by q")
    return total // spec.q


def nonlinearity(spec: WalshSpectrum) -> int:
    return (1 << (spec.m - 1)) - linf(spec) // 2


def parseval_ok(spec: WalshSpectrum) -> bool:
    return int(np.sum(spec.values.astype(np.int64) ** 2)) == spec.q * spec.q


def divisibility_check(spec: WalshSpectrum, d: int) -> dict:
    """Whether 2^ceil(m/d) divides the max amplitude.

    Per-value divisibility over the whole spectrum is reported as
    informational only (``all_values_divisible``); the contract is about the
    max amplitude.
    """
    if d < 1:
        raise ValueError("binary degree d must be >= 1")
    divisor = 1 << (-(-spec.m // d))
    lv = linf(spec)
    return {
        "divisor": divisor,
        "linf": lv,
        "divides": lv % divisor == 0,
        "all_values_divisible": bool((spec.values % divisor == 0).all()),
    }


def spectrum_csv(spec: WalshSpectrum, fileobj) -> None:
    w = csv.writer(fileobj)
    w.writerow(["v", "value"])
    for v, val in enumerate(spec.values):
        w.writerow([v, int(val)])


def summary_json(spec: WalshSpectrum, d: int = 3) -> str:
    div = divisibility_check(spec, d)
    return json.dumps({
        "linf": linf(spec),
        "nl": nonlinearity(spec),
        "sigma4": l4_fourth(spec),
        "parseval_ok": parseval_ok(spec),
        "divisibility_ok": div["divides"],
    })
