"""Verification engine for Legendre-polynomial and binomial-sum congruences.

The heavy lifting lives in the C++ extension; this package re-exports it and
adds a small convenience wrapper returning parsed reports.
"""

import json as _json

from ._core import (  # noqa: F401
    __version__,
    char_sum_cubic,
    d_sequence,
    eichler_c,
    eta_coeffs,
    franel,
    is_prime,
    jacobi_symbol,
    legendre_eval,
    legendre_symbol,
    lemma31_sides,
    point_count,
    point_count_11a,
    primes_in,
    quartic_image_count,
    represent,
    run,
    sqrt_mod,
    t_sequence,
    trunc_sum_864,
)


def run_report(lo, hi, suites=(), samples=50, seed=0, workers=1, thm31_bound=499):
    """Run the selected suites and return the report as a dict."""
    return _json.loads(run(lo, hi, list(suites), samples, seed, workers, thm31_bound))
