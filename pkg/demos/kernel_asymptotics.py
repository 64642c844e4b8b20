"""How the logarithmic kernel behaves near the origin.

The kernel is evaluated at points marching toward zero and compared with
its leading asymptotic form. The ratio creeps toward one, but only at the
rate 1/|ln x|, which is why everything built on it converges slowly.
"""

import math

from trivolterra import KernelParams, asymptotic_E, eval_E

for beta in (0.5, 1.0, 2.0):
    params = KernelParams(beta)
    print(f"beta = {beta}")
    for k in (2, 4, 6, 9, 12):
        x = 10.0**-k
        ratio = eval_E(params, x) / asymptotic_E(params, x)
        print(f"  x = 1e-{k:<2d}  ratio = {ratio.real:.6f}   (ratio - 1) * |ln x| = {(ratio.real - 1) * abs(math.log(x)):+.3f}")
