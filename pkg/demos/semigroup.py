"""Composing discretized log-kernel operators.

V_a V_b should approximate V_{a+b}. The residual shrinks with the grid, but
slowly: it tracks powers of 1/|ln h| rather than of h. The fractional
integrals J^a, whose kernels are plain powers, converge much faster.
"""

from trivolterra.verify import check_semigroup_J, check_semigroup_V

sweep = (64, 128, 256, 512)
rec = check_semigroup_V(0.5, 0.5, n_sweep=sweep)
print("log-kernel operators, a = b = 0.5")
for row in rec.rows():
    print(f"  n = {row['n']:4d}  residual = {row['residual']:.3e}")
print(f"  ratios per doubling: {', '.join(f'{r:.3f}' for r in rec.ratios)}")
print(f"  fitted order in h: {rec.order:.2f}, against ln ln(1/h): {rec.log_order:.2f}")

op, _ = check_semigroup_J(0.5, 0.5, n_sweep=sweep)
print("fractional integrals, a = b = 0.5")
print(f"  residuals: {[f'{r:.2e}' for r in op.residuals]}")
