"""T_beta is Hilbert-Schmidt but not trace class.

Frobenius norms settle at the continuum value while singular-value sums
keep rising, slowly, like a fractional power of ln n.
"""

from trivolterra.spectral import hs_trace_probe

rep = hs_trace_probe(0.5, 0.5, n_sweep=(64, 128, 256, 512), M_values=(100, 1000, 10000))
print(f"continuum Hilbert-Schmidt norm: {rep.data['hs_norm_continuum']:.5f}")
for n, f, s in zip(rep.n, rep.frobenius, rep.data["trace_sums"]):
    print(f"  n = {n:3d}  Frobenius {f:.5f}  sum of singular values {s:.4f}")
print(f"diagonal sums over M = {rep.data['M_values']}: {[round(v, 3) for v in rep.data['diagonal_sums']]}")
