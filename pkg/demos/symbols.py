"""Fourier symbols at large frequency.

-i lam s1(lam) of the weighted log kernel approaches (ln|lam|)^(-beta), and
the two independent evaluators (real axis and rotated contour) agree where
both apply.
"""

from trivolterra.symbols import WEIGHTED, SymbolQuery, symbol_asymptotics, symbol_contour, symbol_direct

for beta in (0.5, 1, 1j):
    rep = symbol_asymptotics(beta, 0.5, WEIGHTED, lambdas=[1e2, 1e4, 1e6, -1e6])
    devs = ", ".join(f"{l:+.0e}: {abs(r - 1):.3f}" for l, r in zip(rep.lam, rep.ratio))
    print(f"beta = {beta}: |ratio - 1| at {devs}")

q = SymbolQuery(0.5, 0.5, 5000.0, WEIGHTED)
d, c = symbol_direct(q), symbol_contour(q)
print(f"lambda = 5000: direct {d:.12f}, contour {c:.12f}, gap {abs(d - c):.1e}")
