"""Saturated LLR arithmetic: clamping, saturating addition, box-plus.

All soft values live in [-SAT, +SAT]. +SAT stands in for infinity (a bit
known to be 0 with certainty), -SAT for a certain 1. The conventions here
are load-bearing for the rest of the package:

* saturating addition is absorbing at +-SAT (finite + SAT == SAT), and
  +SAT + -SAT == 0 (conflicting certainties cancel to an erasure);
* box-plus treats +-SAT as an exact identity: boxplus(a, +SAT) == a,
  boxplus(a, -SAT) == -a;
* sign(0) == +1 everywhere.

Without the absorbing rule, an all-frozen subtree would feed back
SAT - epsilon instead of exactly SAT and the closed-form node kernels could
not be bit-identical to the message-passing recursion.
"""

import numpy as np

DEFAULT_SAT = 1.0e6


def clamp(x, sat=DEFAULT_SAT):
    """Clip values into [-sat, +sat]."""
    return np.clip(x, -sat, sat)


def hard_sign(x):
    """Sign with sign(0) = +1, returned as +-1.0 floats."""
    x = np.asarray(x)
    return np.where(x < 0, -1.0, 1.0)


def sat_add(a, b, sat=DEFAULT_SAT):
    """Saturating addition with absorbing +-sat.

    finite + sat -> sat, finite + -sat -> -sat, sat + -sat -> 0.
    Plain sums are clipped into [-sat, sat].
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.clip(a + b, -sat, sat)
    a_top, a_bot = a == sat, a == -sat
    b_top, b_bot = b == sat, b == -sat
    out = np.where(a_top | b_top, sat, out)
    out = np.where(a_bot | b_bot, -sat, out)
    out = np.where((a_top & b_bot) | (a_bot & b_top), 0.0, out)
    return out


def boxplus_minsum(a, b):
    """Min-sum check-node combination: sign(a)*sign(b)*min(|a|,|b|).

    Needs no saturation special case: min(|x|, sat) = |x| already treats
    +-sat as an identity.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return hard_sign(a) * hard_sign(b) * np.minimum(np.abs(a), np.abs(b))


def boxplus(a, b, sat=DEFAULT_SAT):
    """Exact check-node combination log((1 + e^(a+b)) / (e^a + e^b)).

    Evaluated in the numerically stable form
        sign(a)*sign(b)*min(|a|,|b|) + log1p(e^-|a+b|) - log1p(e^-|a-b|)
    and clamped. Saturated operands short-circuit to the exact identity
    boxplus(a, +-sat) = +-a so that certainty propagates without rounding.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    with np.errstate(over="ignore"):
        core = boxplus_minsum(a, b) + np.log1p(np.exp(-np.abs(a + b))) - np.log1p(np.exp(-np.abs(a - b)))
    out = np.clip(core, -sat, sat)
    a_sat = np.abs(a) == sat
    b_sat = np.abs(b) == sat
    out = np.where(b_sat, hard_sign(b) * a, out)
    out = np.where(a_sat, hard_sign(a) * b, out)
    out = np.where(a_sat & b_sat, hard_sign(a) * hard_sign(b) * sat, out)
    return out


def combiner(arithmetic):
    """Return the check-node function for an arithmetic mode name."""
    if arithmetic == "minsum":
        return lambda a, b, sat=DEFAULT_SAT: boxplus_minsum(a, b)
    if arithmetic == "exact":
        return boxplus
    raise ValueError(f"unknown arithmetic mode {arithmetic!r} (want 'exact' or 'minsum')")
