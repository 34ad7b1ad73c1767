"""Test-support oracles: known-answer instance generation, root matching
and a finite-difference Newton step on the Viete system.

The Newton step is deliberately independent of the main iteration code
path: the Jacobian comes from central differences on the Viete function
and the linear system is solved by hand-rolled partial-pivot elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import SingularJacobian
from .polynomials import Polynomial, coeff_vector, from_roots, viete


@dataclass(frozen=True)
class MatchedRoots:
    permutation: tuple
    max_abs_error: float


def known_instance(roots, perturbation: float, seed: int):
    """Monic polynomial with the given roots plus a perturbed start vector.

    Each start point is the root plus a uniform draw from the disk of the
    given radius; deterministic in the seed, re-drawn on (exact) collision.
    """
    roots = np.asarray(roots, dtype=np.complex128)
    f = from_roots(roots, 1.0)
    rng = np.random.default_rng(seed)
    while True:
        radii = perturbation * np.sqrt(rng.uniform(size=roots.size))
        angles = rng.uniform(0.0, 2.0 * np.pi, size=roots.size)
        x0 = roots + radii * np.exp(1j * angles)
        diff = np.abs(x0[:, None] - x0[None, :])
        np.fill_diagonal(diff, np.inf)
        if diff.min() > 0.0:
            return f, x0


def _solve_linear(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Partial-pivot Gaussian elimination on a complex n x n system."""
    a = a.astype(np.complex128, copy=True)
    b = b.astype(np.complex128, copy=True)
    n = b.size
    scale = max(1.0, float(np.max(np.abs(a))))
    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if np.abs(a[piv, col]) < 1e-12 * scale:
            raise SingularJacobian(f"pivot below threshold in column {col}")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            b[[col, piv]] = b[[piv, col]]
        for row in range(col + 1, n):
            m = a[row, col] / a[col, col]
            a[row, col:] -= m * a[col, col:]
            b[row] -= m * b[col]
    x = np.zeros(n, dtype=np.complex128)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1:] @ x[row + 1:]) / a[row, row]
    return x


def newton_viete_step(f: Polynomial, x, h: float = 1e-6) -> np.ndarray:
    """One Newton step on F(x) = viete(x) - coeff_vector(f).

    The Jacobian is built columnwise by central differences with step h,
    averaging the real and imaginary directional derivatives.
    """
    x = np.asarray(x, dtype=np.complex128)
    n = x.size
    target = coeff_vector(f)

    def F(y):
        return viete(y) - target

    jac = np.empty((n, n), dtype=np.complex128)
    for j in range(n):
        e = np.zeros(n, dtype=np.complex128)
        e[j] = h
        d_re = (F(x + e) - F(x - e)) / (2.0 * h)
        d_im = (F(x + 1j * e) - F(x - 1j * e)) / (2.0j * h)
        jac[:, j] = 0.5 * (d_re + d_im)
    return x - _solve_linear(jac, F(x))


def match_roots(found, truth) -> MatchedRoots:
    """Best alignment of found approximations to true roots.

    Exhaustive min-max matching for n <= 8; greedy nearest-neighbor above.
    matched[i] = found[permutation[i]] corresponds to truth[i].
    """
    found = np.asarray(found, dtype=np.complex128)
    truth = np.asarray(truth, dtype=np.complex128)
    if found.size != truth.size:
        raise ValueError("length mismatch")
    n = found.size
    dist = np.abs(truth[:, None] - found[None, :])
    if n <= 8:
        best_perm = None
        best_err = np.inf
        for perm in itertools.permutations(range(n)):
            err = max(dist[i, perm[i]] for i in range(n))
            if err < best_err:
                best_err = err
                best_perm = perm
        return MatchedRoots(tuple(best_perm), float(best_err))
    taken = set()
    perm = []
    for i in range(n):
        j = min((j for j in range(n) if j not in taken), key=lambda j: dist[i, j])
        taken.add(j)
        perm.append(j)
    err = max(dist[i, perm[i]] for i in range(n))
    return MatchedRoots(tuple(perm), float(err))
