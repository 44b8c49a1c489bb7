"""Shared samplers for randomized algebra parameters."""

import numpy as np

from cycosc import derived_constants, new_params, validate_fock


def fock_valid_params(rng, lam, lo=-0.8, hi=1.5, margin=0.05):
    """Random parameters whose Fock condition holds with a safety margin.

    Rejection sampling keeps every F(mu) above the margin so residual scales
    stay representative rather than dominated by near-singular ladders.
    """
    while True:
        params = new_params(lam, rng.uniform(lo, hi, size=lam - 1))
        if not validate_fock(params).ok:
            continue
        beta = derived_constants(params).beta
        if all(mu + beta[mu] > margin for mu in range(1, lam)):
            return params


def window_valid_params(rng, lam, margin=0.05):
    """Random parameters inside the shape-invariance window.

    The window is nested (each upper bound depends on the earlier entries), so
    the head is sampled sequentially and resampled whenever an interval closes.
    """
    while True:
        head = []
        total = 0.0
        feasible = True
        for mu in range(lam - 1):
            upper = lam - mu - 1 - total
            if upper - margin <= -1 + margin:
                feasible = False
                break
            value = rng.uniform(-1 + margin, upper - margin)
            head.append(value)
            total += value
        if feasible:
            return new_params(lam, head)
