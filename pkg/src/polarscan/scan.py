"""Soft cancellation (SCAN) decoding over the full polarization tree.

SCAN runs the successive-cancellation traversal but passes soft messages in
both directions and keeps them between iterations. Messages live in two
(n+1, batch, N) arrays:

    lam[t][:, i*2^t : (i+1)*2^t]   demands into node i of stage t
    beta[t][...]                   feedback out of node i of stage t

lam[n] is the (clamped) channel LLR vector and is never modified; beta[0]
is +SAT at frozen leaf positions and 0 elsewhere and is never modified.
All other entries start at 0 and persist across iterations.

Per node of half-size h, with a = lam_t[:h], b = lam_t[h:], bl/br the
children's beta:

    left demand   f(a, b + br)        (br still holds last iteration's value)
    right demand  f(a, bl) + b        (bl freshly updated by the left child)
    feedback      [f(bl, b + br), br + f(a, bl)]

where f is box-plus (exact or min-sum) and + saturates. The decoder is
batched: a leading frame axis is broadcast through every update.
"""

from dataclasses import dataclass

import numpy as np

from .arithmetic import DEFAULT_SAT, clamp, combiner, sat_add
from .codes import PolarCode, butterfly_transform


@dataclass
class ScanConfig:
    iterations: int = 1
    arithmetic: str = "minsum"   # 'exact' or 'minsum'
    sat: float = DEFAULT_SAT

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        combiner(self.arithmetic)  # validates the mode name


@dataclass
class MessageMemory:
    """Persistent lam/beta arrays, shape (n+1, batch, N) each."""

    lam: np.ndarray
    beta: np.ndarray


@dataclass
class ScanOutput:
    leaf_extrinsic: np.ndarray   # lam at stage 0 after the final iteration
    root_extrinsic: np.ndarray   # beta at stage n
    u_hat: np.ndarray
    x_hat: np.ndarray


def init_messages(code: PolarCode, channel_llrs: np.ndarray, sat: float = DEFAULT_SAT) -> MessageMemory:
    """Fresh memory: channel LLRs at stage n, frozen +SAT at stage 0, zeros elsewhere."""
    llrs = np.atleast_2d(np.asarray(channel_llrs, dtype=float))
    if llrs.shape[-1] != code.N:
        raise ValueError(f"LLR length {llrs.shape[-1]} != N={code.N}")
    B = llrs.shape[0]
    lam = np.zeros((code.n + 1, B, code.N))
    beta = np.zeros((code.n + 1, B, code.N))
    lam[code.n] = clamp(llrs, sat)
    beta[0][:, code.frozen_mask] = sat
    return MessageMemory(lam=lam, beta=beta)


def _node_update(lam, beta, t, i, f, sat, recurse):
    """One SCAN visit of node (t, i): demands down, feedback up."""
    h = 1 << (t - 1)
    off = i * (h << 1)
    a = lam[t][:, off:off + h]
    b = lam[t][:, off + h:off + 2 * h]
    bl = beta[t - 1][:, off:off + h]
    br = beta[t - 1][:, off + h:off + 2 * h]

    lam[t - 1][:, off:off + h] = f(a, sat_add(b, br, sat), sat)
    recurse(t - 1, 2 * i)
    lam[t - 1][:, off + h:off + 2 * h] = sat_add(f(a, bl, sat), b, sat)
    recurse(t - 1, 2 * i + 1)
    beta[t][:, off:off + h] = f(bl, sat_add(b, br, sat), sat)
    beta[t][:, off + h:off + 2 * h] = sat_add(br, f(a, bl, sat), sat)


def _traverse(mem: MessageMemory, n: int, f, sat) -> None:
    lam, beta = mem.lam, mem.beta

    def rec(t, i):
        if t == 0:
            return
        _node_update(lam, beta, t, i, f, sat, rec)

    rec(n, 0)


def finalize(code: PolarCode, mem: MessageMemory, sat: float, squeeze: bool) -> ScanOutput:
    """Hard decisions from channel + root feedback; ties decide 0."""
    ap = sat_add(mem.lam[code.n], mem.beta[code.n], sat)
    x_hat = (ap < 0).astype(np.uint8)
    u_hat = butterfly_transform(x_hat)
    leaf = mem.lam[0].copy()
    root = mem.beta[code.n].copy()
    if squeeze:
        leaf, root, u_hat, x_hat = leaf[0], root[0], u_hat[0], x_hat[0]
    return ScanOutput(leaf_extrinsic=leaf, root_extrinsic=root, u_hat=u_hat, x_hat=x_hat)


class ScanDecoder:
    """Full-tree SCAN decoder; keeps its MessageMemory for inspection."""

    def __init__(self, code: PolarCode, cfg: ScanConfig | None = None):
        self.code = code
        self.cfg = cfg or ScanConfig()
        self.memory: MessageMemory | None = None

    def decode(self, channel_llrs: np.ndarray) -> ScanOutput:
        squeeze = np.asarray(channel_llrs).ndim == 1
        cfg = self.cfg
        mem = init_messages(self.code, channel_llrs, cfg.sat)
        f = combiner(cfg.arithmetic)
        for _ in range(cfg.iterations):
            _traverse(mem, self.code.n, f, cfg.sat)
        self.memory = mem
        return finalize(self.code, mem, cfg.sat, squeeze)


def scan_decode(code: PolarCode, channel_llrs: np.ndarray, cfg: ScanConfig | None = None) -> ScanOutput:
    """Functional wrapper around ScanDecoder."""
    return ScanDecoder(code, cfg).decode(channel_llrs)
