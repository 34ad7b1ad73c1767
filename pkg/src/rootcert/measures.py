"""Measurement layer: separations, Weierstrass corrections and the
initial-condition measure E_f together with its p-norm machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadExponent,
    DegreeMismatch,
    EvaluationPointCollision,
    NonDistinctComponents,
)
from .polynomials import Polynomial, evaluate


@dataclass(frozen=True)
class NormContext:
    """The (n, p) pair with its conjugate exponent and the derived constants.

    a = (n-1)**(1/q) and b = 2**(1/q) where 1/p + 1/q = 1.  The endpoint
    conventions are hard-coded: p = 1 gives q = inf hence a = b = 1, and
    p = inf gives q = 1 hence a = n - 1, b = 2.
    """

    n: int
    p: float
    q: float
    a: float
    b: float


def norm_context(n: int, p: float) -> NormContext:
    """Build a NormContext for an n-point configuration and exponent p."""
    if n < 2:
        raise ValueError("n must be >= 2")
    p = float(p)
    if math.isnan(p) or p < 1:
        raise BadExponent(f"p must satisfy 1 <= p <= inf, got {p}")
    if p == 1:
        q, a, b = math.inf, 1.0, 1.0
    elif math.isinf(p):
        q, a, b = 1.0, float(n - 1), 2.0
    else:
        q = p / (p - 1)
        a = (n - 1) ** (1.0 / q)
        b = 2.0 ** (1.0 / q)
    return NormContext(n=n, p=p, q=q, a=a, b=b)


def p_norm(v, p: float) -> float:
    """p-norm of a nonnegative real vector, rescaled by the maximum to
    avoid overflow for large p."""
    v = np.asarray(v, dtype=float)
    if v.size == 0:
        return 0.0
    m = float(np.max(v))
    if m == 0.0 or math.isinf(p):
        return m
    if p == 1:
        return float(np.sum(v))
    return m * float(np.sum((v / m) ** p)) ** (1.0 / p)


def cone_norm(v) -> np.ndarray:
    """Componentwise modulus |v_i| of a complex vector."""
    return np.abs(np.asarray(v, dtype=np.complex128))


def separation(x) -> np.ndarray:
    """d_i(x) = min over j != i of |x_i - x_j|; zero entries signal
    coinciding components and are left for the caller to reject."""
    x = np.asarray(x, dtype=np.complex128)
    if x.size < 2:
        raise ValueError("need at least 2 components")
    diff = np.abs(x[:, None] - x[None, :])
    np.fill_diagonal(diff, np.inf)
    return diff.min(axis=1)


def _require_distinct(x) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    d = separation(x)
    if np.any(d == 0.0):
        i = int(np.argmin(d))
        raise NonDistinctComponents(f"components coincide (index {i})")
    return x


def weierstrass_correction(f: Polynomial, x) -> np.ndarray:
    """W_i(x) = f(x_i) / (C_0 * prod over j != i of (x_i - x_j))."""
    x = _require_distinct(x)
    if x.size != f.degree:
        raise DegreeMismatch(f"{x.size} points for degree {f.degree}")
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    denom = f.coeffs[0] * np.prod(diff, axis=1)
    return evaluate(f, x) / denom


def e_measure(f: Polynomial, x, ctx: NormContext) -> float:
    """E_f(x): the p-norm of the vector |W_i(x)| / d_i(x)."""
    w = weierstrass_correction(f, x)
    d = separation(x)
    return p_norm(np.abs(w) / d, ctx.p)


def sigma_sum(w, x, i: int, at: complex) -> complex:
    """Sum over j != i of W_j / (at - x_j).

    With at = x_i this is sigma_i(x); with at set to the i-th component of
    the method image it is the hatted variant.
    """
    w = np.asarray(w, dtype=np.complex128)
    x = np.asarray(x, dtype=np.complex128)
    at = complex(at)
    total = 0.0 + 0.0j
    for j in range(x.size):
        if j == i:
            continue
        dz = at - x[j]
        if dz == 0:
            raise EvaluationPointCollision(f"evaluation point equals x[{j}]")
        total += w[j] / dz
    return total
