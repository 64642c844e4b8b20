"""Perturbing multiplication by x with a small Volterra part.

Both models keep the spectrum of the multiplication operator: their
eigenvalues are the diagonal entries x_i, and the kernel-built matrices
approach the ones obtained by explicit similarity as the grid refines.
"""

from trivolterra import Grid
from trivolterra.friedrichs import build_A, build_B, conjugate_A, conjugate_B, relative_frobenius, spectrum_distance

for n in (64, 128, 256):
    g = Grid(0.5, n)
    a, b = build_A(0.5j, g), build_B(0.5j, g)
    print(
        f"n = {n:3d}  A: similarity gap {relative_frobenius(a.matrix, conjugate_A(0.5j, g).matrix):.2e}, "
        f"spectrum {spectrum_distance(a):.2e} | B: similarity gap {relative_frobenius(b.matrix, conjugate_B(0.5j, g).matrix):.2e}, "
        f"spectrum {spectrum_distance(b):.2e}"
    )
