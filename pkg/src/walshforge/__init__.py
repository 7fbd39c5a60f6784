"""Walsh spectra, shift sums and curve counts for trace forms on GF(2^m).

The package studies Boolean functions f(x) = Tr(G(x)) where

    G(x) = a7*x^7 + sum_i b_i * x^(2^i + 1)

over a binary field of odd extension degree.  Three independent computation
paths for the same quantities are kept deliberately separate so they can
cross-check each other:

* spectral: fast Walsh-Hadamard transform of the truth table;
* combinatorial: shift sums X_alpha evaluated by direct summation;
* geometric: point counts of the quintic Artin-Schreier curves attached to
  each nonzero shift, plus a single auxiliary curve v^4 + v = gamma*x^7.
"""

from .field import FieldCtx, default_modulus
from .rng import SplitRng, derive_seed
from .boolfn import TracePoly, eval_g, reduce_difference, truth_table
from .spectrum import WalshSpectrum, fwht, l4_fourth, linf, nonlinearity
from .autocorr import XAlphaTable, sigma_autocorr, sigma_decomposition, x_alpha, x_alpha_all
from .genus2 import QuinticCurve, classify, count_points, maisner_nart_w, normalize_ab, radical
from .classify7 import classify_alpha, count_n0_n, eta_of_alpha, predict_x_alpha
from .auxcurve import count_n123, enumerate_points, gamma_of, s7_sum
from .corpus import curve_corpus, mixed_corpus, sample_curve, sample_tracepoly, standard_corpus
from .report import Check, Report, compare, slack_bound

__version__ = "0.1.0"

__all__ = [
    "FieldCtx", "default_modulus",
    "SplitRng", "derive_seed",
    "TracePoly", "eval_g", "reduce_difference", "truth_table",
    "WalshSpectrum", "fwht", "l4_fourth", "linf", "nonlinearity",
    "XAlphaTable", "sigma_autocorr", "sigma_decomposition", "x_alpha", "x_alpha_all",
    "QuinticCurve", "classify", "count_points", "maisner_nart_w", "normalize_ab", "radical",
    "classify_alpha", "count_n0_n", "eta_of_alpha", "predict_x_alpha",
    "count_n123", "enumerate_points", "gamma_of", "s7_sum",
    "curve_corpus", "mixed_corpus", "sample_curve", "sample_tracepoly", "standard_corpus",
    "Check", "Report", "compare", "slack_bound",
    "__version__",
]
