"""Godunov de primeira ordem para Burgers clássica, independente do pacote godunov."""

import numpy as np


def plain_burgers_step(v: np.ndarray, dr: float, dt: float) -> np.ndarray:
    """
    Um passo de Godunov para v_t + (v²/2)_r = 0 com contorno transmissivo.

    Usa a forma max-min do fluxo para fluxo convexo com mínimo em 0:

        f(v1, v2) = max(f(max(v1, 0)), f(min(v2, 0)))
    """
    padded = np.pad(np.asarray(v, dtype=float), 1, mode="edge")
    left = np.maximum(padded[:-1], 0.0)
    right = np.minimum(padded[1:], 0.0)
    fluxes = np.maximum(0.5 * left * left, 0.5 * right * right)
    # Mesma expressão do esquema: v - (dt/dr)·(F_{j+1/2} - F_{j-1/2}), sem reassociar
    ratio = dt / dr
    return padded[1:-1] - ratio * (fluxes[1:] - fluxes[:-1])
