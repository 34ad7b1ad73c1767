import numpy as np

from rootcert import Polynomial, from_roots


def random_monic(n, rng):
    """Random monic polynomial with non-leading coefficients in the unit disk."""
    coeffs = np.concatenate([
        [1.0 + 0.0j],
        rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n),
    ])
    return Polynomial(coeffs)


def random_distinct_points(n, rng, radius=2.0, min_sep=0.05):
    """n points in the disk of the given radius with pairwise separation >= min_sep."""
    while True:
        x = radius * (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))
        diff = np.abs(x[:, None] - x[None, :])
        np.fill_diagonal(diff, np.inf)
        if diff.min() >= min_sep:
            return x


def well_separated_roots(n, rng, radius=2.0, min_sep=0.6):
    """Root sets used for constructed known-answer instances."""
    return random_distinct_points(n, rng, radius=radius, min_sep=min_sep)
