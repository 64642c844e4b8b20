"""Generalized wave operators for the two model operators.

exp(iAt) exp(-iQt) alone does not settle; multiplying by the unimodular
factor (ln t)^alpha (model A) or t^alpha (model B) makes it converge to the
inverse of the similarity. The unrenormalized run is shown for contrast.
Takes about 20 s.
"""

from trivolterra import Grid
from trivolterra.waveops import LOG, MODEL_A, MODEL_B, NONE, POWER, WaveConfig, wave_limit_run

grid = Grid(0.5, 1024)
ts = (10.0, 100.0, 1000.0)
for label, cfg in (
    ("model A, (ln t)^alpha", WaveConfig(MODEL_A, 0.5j, grid, ts, LOG, tests=("bump",))),
    ("model B, t^alpha", WaveConfig(MODEL_B, 0.5j, grid, ts, POWER, tests=("bump",))),
    ("model A, no factor", WaveConfig(MODEL_A, 0.5j, grid, ts, NONE, tests=("bump",))),
):
    res = wave_limit_run(cfg).residuals["bump"]
    print(f"{label:24s} residual at t = 10, 100, 1000: {', '.join(f'{r:.3f}' for r in res)}")
