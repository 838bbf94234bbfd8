"""Closed-form feedback kernels for special decoding-tree nodes.

Each kernel maps a node's demand vector lam (shape (..., size)) straight to
its feedback beta, skipping the subtree traversal. The implementations are
written so that in min-sum mode the result is bit-identical to running the
message-passing recursion over the subtree:

* Rep/TypeI/TypeII fold lam with the same pairwise saturating adds the
  recursion would perform for the right-child demand (left children are all
  frozen, and demands into all-frozen subtrees never influence feedback),
  then unfold with the same add order as the feedback equations.
* Spc in min-sum copies input magnitudes (min is exact), so the direct
  two-smallest-magnitudes form matches any association order. The exact
  mode uses prefix/suffix box-plus arrays, which fixes one association and
  agrees with the subtree to floating-point accuracy.
* TypeIII is two interleaved Spc streams; TypeIV folds with box-plus
  (right children are all information, so their feedback is exactly 0 and
  the left-demand box-plus collapses to f(lo, hi)).

Every kernel accepts a batch axis and is stateless.
"""

import numpy as np

from .arithmetic import DEFAULT_SAT, boxplus, boxplus_minsum, hard_sign, sat_add


def _split(lam):
    h = lam.shape[-1] // 2
    return lam[..., :h], lam[..., h:]


def rate0_update(shape, sat=DEFAULT_SAT) -> np.ndarray:
    """All-frozen node: feedback is certainty, all +sat."""
    return np.full(shape, sat, dtype=float)


def rate1_update(shape, sat=DEFAULT_SAT) -> np.ndarray:
    """All-information node: no parity to exploit, feedback all zero."""
    return np.zeros(shape, dtype=float)


def _spc_minsum(lam):
    """Two-smallest-magnitudes form; k0/k1 pick the lowest index on ties."""
    absl = np.abs(lam)
    k0 = np.argmin(absl, axis=-1)
    m0 = np.take_along_axis(absl, k0[..., None], axis=-1)
    masked = absl.copy()
    np.put_along_axis(masked, k0[..., None], np.inf, axis=-1)
    k1 = np.argmin(masked, axis=-1)
    m1 = np.take_along_axis(absl, k1[..., None], axis=-1)
    neg = lam < 0
    parity = np.logical_xor.reduce(neg, axis=-1, keepdims=True)
    signs = np.where(np.logical_xor(parity, neg), -1.0, 1.0)
    beta = signs * m0
    np.put_along_axis(beta, k0[..., None], np.take_along_axis(signs, k0[..., None], axis=-1) * m1, axis=-1)
    return beta


def _spc_exact(lam, sat):
    """beta[k] = box-plus of all entries except k, via prefix/suffix arrays."""
    size = lam.shape[-1]
    prefix = np.full(lam.shape[:-1] + (size + 1,), sat)   # +sat is the box-plus identity
    suffix = np.full(lam.shape[:-1] + (size + 1,), sat)
    for j in range(size):
        prefix[..., j + 1] = boxplus(prefix[..., j], lam[..., j], sat)
    for j in range(size - 1, -1, -1):
        suffix[..., j] = boxplus(suffix[..., j + 1], lam[..., j], sat)
    return boxplus(prefix[..., :size], suffix[..., 1:], sat)


def spc_update(lam, arithmetic="minsum", sat=DEFAULT_SAT) -> np.ndarray:
    """Single-parity-check node: extrinsic box-plus of all other entries."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape[-1] < 2 or (lam.shape[-1] & (lam.shape[-1] - 1)) != 0:
        raise ValueError(f"spc size {lam.shape[-1]} must be a power of two >= 2")
    if arithmetic == "minsum":
        return _spc_minsum(lam)
    return _spc_exact(lam, sat)


def spc_update_forced(lam, arithmetic="minsum", sat=DEFAULT_SAT) -> np.ndarray:
    """Parity-forcing variant: weakest position as in spc_update, every other
    output takes its own input's sign. The a-posteriori hard decisions then
    always satisfy the parity check, but the output is no longer extrinsic,
    so this kernel is opt-in and excluded from equivalence guarantees."""
    lam = np.asarray(lam, dtype=float)
    base = spc_update(lam, arithmetic, sat)
    absl = np.abs(lam)
    k0 = np.argmin(absl, axis=-1)[..., None]
    m0 = np.take_along_axis(absl, k0, axis=-1)
    beta = hard_sign(lam) * m0
    np.put_along_axis(beta, k0, np.take_along_axis(base, k0, axis=-1), axis=-1)
    return beta


def rep_update(lam, sat=DEFAULT_SAT) -> np.ndarray:
    """Repetition node: beta[k] = sum of all entries except k.

    Folded pairwise (lo+hi, recurse, unfold) so the add order matches the
    subtree recursion exactly.
    """
    lam = np.asarray(lam, dtype=float)
    if lam.shape[-1] == 1:
        return np.zeros_like(lam)
    if lam.shape[-1] == 2:
        return lam[..., ::-1].copy()
    lo, hi = _split(lam)
    inner = rep_update(sat_add(lo, hi, sat), sat)
    return np.concatenate([sat_add(hi, inner, sat), sat_add(inner, lo, sat)], axis=-1)


def type1_update(lam, sat=DEFAULT_SAT) -> np.ndarray:
    """Two trailing info bits: the even and odd interleaves each form a
    repetition code; beta interleaves the two rep sums."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape[-1] < 4:
        raise ValueError("type1 needs size >= 4")
    if lam.shape[-1] == 4:
        return lam[..., [2, 3, 0, 1]]
    lo, hi = _split(lam)
    inner = type1_update(sat_add(lo, hi, sat), sat)
    return np.concatenate([sat_add(hi, inner, sat), sat_add(inner, lo, sat)], axis=-1)


def type3_update(lam, arithmetic="minsum", sat=DEFAULT_SAT) -> np.ndarray:
    """Two leading frozen bits: even and odd interleaves each form an SPC."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape[-1] < 4:
        raise ValueError("type3 needs size >= 4")
    beta = np.empty_like(lam)
    beta[..., 0::2] = spc_update(lam[..., 0::2], arithmetic, sat)
    beta[..., 1::2] = spc_update(lam[..., 1::2], arithmetic, sat)
    return beta


def type2_update(lam, arithmetic="minsum", sat=DEFAULT_SAT) -> np.ndarray:
    """Three trailing info bits: columns (mod 4) fold by addition onto a
    size-4 SPC, then unfold like a repetition code."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape[-1] < 4:
        raise ValueError("type2 needs size >= 4")
    if lam.shape[-1] == 4:
        return spc_update(lam, arithmetic, sat)
    lo, hi = _split(lam)
    inner = type2_update(sat_add(lo, hi, sat), arithmetic, sat)
    return np.concatenate([sat_add(hi, inner, sat), sat_add(inner, lo, sat)], axis=-1)


def type4_update(lam, arithmetic="minsum", sat=DEFAULT_SAT) -> np.ndarray:
    """Three leading frozen bits: columns (mod 4) fold by box-plus onto a
    size-4 repetition node, then unfold with box-plus."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape[-1] < 8:
        raise ValueError("type4 needs size >= 8")
    f = boxplus_minsum if arithmetic == "minsum" else lambda a, b: boxplus(a, b, sat)
    lo, hi = _split(lam)
    folded = f(lo, hi)
    inner = rep_update(folded, sat) if folded.shape[-1] == 4 else type4_update(folded, arithmetic, sat)
    return np.concatenate([f(inner, hi), f(lo, inner)], axis=-1)
