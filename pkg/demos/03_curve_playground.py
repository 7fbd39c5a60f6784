"""
Supersingular quintic curves and their point counts
===================================================

Every shift alpha of f turns into a curve y^2 + y = a x^5 + b x^3 + c x + d
whose affine count determines X_alpha.  The classifier never counts points:
it computes the radical of a symplectic form and predicts the tiny set of
counts the curve is allowed to have.  Here we watch the prediction and the
brute count agree on random curves.
"""

from walshforge import (FieldCtx, QuinticCurve, TracePoly, classify, count_points,
                        maisner_nart_w, normalize_ab, reduce_difference)
from walshforge.corpus import curve_corpus
from walshforge.genus2 import p_poly

ctx = FieldCtx(9)
q = ctx.q

print("-- random curves --")
for i, cv in enumerate(curve_corpus(q, 6, seed=7)):
    data = classify(ctx, cv)
    n = count_points(ctx, cv)
    ok = "ok" if n in data.predicted_counts else "MISMATCH"
    print(f"a={cv.a:#5x} b={cv.b:#5x} c={cv.c:#5x}: w={data.w}, "
          f"predicted {sorted(data.predicted_counts)}, counted {n}  [{ok}]")

print()
print("-- curves from shifts of a fixed G --")
g = TracePoly(a7=0x21, b=(0, 0x5))
for alpha in (0x1, 0x2, 0x17):
    cv = reduce_difference(ctx, g, alpha)
    data = classify(ctx, cv)
    n = count_points(ctx, cv)
    x_alpha = (n - q - 1) ** 2
    print(f"alpha={alpha:#4x}: count={n:4d}  ->  X_alpha=(count-q-1)^2={x_alpha}")
    if cv.b:
        # the normalized model has equal x^5 and x^3 coefficients, and
        # z = alpha/lambda is a root of its linearized quintic P
        nc, lam = normalize_ab(ctx, cv)
        z = ctx.mul(ctx.inv(lam), alpha)
        assert p_poly(ctx, nc.a, nc.b, z) == 0
        res = maisner_nart_w(ctx, nc, z)
        print(f"            normalized: a=b={nc.a:#x}, w={res['w']} "
              f"(radical says {data.w})")
