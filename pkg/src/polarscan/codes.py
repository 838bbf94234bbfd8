"""Polar code construction and encoding.

A code is (N=2^n, K) with a frozen mask over bit-channel indices. The
N-K least reliable indices are frozen; reliability comes either from the
shipped 5G sequence or from a Bhattacharyya-parameter recursion. Encoding
is the n-stage XOR butterfly x = u * G2^(kron n), which is its own inverse
over GF(2).
"""

import json
from dataclasses import dataclass

import numpy as np

from .sequences import ReliabilitySequence, default_sequence, subcode_order


@dataclass(frozen=True)
class PolarCode:
    n: int
    N: int
    K: int
    frozen_mask: np.ndarray          # bool, True = frozen
    reliability_order: np.ndarray    # ascending reliability, most reliable last

    def __post_init__(self):
        self.frozen_mask.flags.writeable = False
        self.reliability_order.flags.writeable = False

    @property
    def info_positions(self) -> np.ndarray:
        """Non-frozen indices in natural order."""
        return np.flatnonzero(~self.frozen_mask)

    @property
    def rate(self) -> float:
        return self.K / self.N

    def to_json(self) -> str:
        return json.dumps(
            {"N": self.N, "K": self.K, "frozen": np.flatnonzero(self.frozen_mask).tolist()}
        )


def _check_dims(N: int, K: int) -> int:
    if N < 2 or (N & (N - 1)) != 0:
        raise ValueError(f"N={N} must be a power of two >= 2")
    if not 0 <= K <= N:
        raise ValueError(f"K={K} out of range for N={N}")
    return N.bit_length() - 1


def bhattacharyya_order(N: int, design_snr_db: float = 0.0) -> np.ndarray:
    """Reliability order from the Bhattacharyya parameter recursion.

    z starts at exp(-Es/N0); each polarization level maps z to 2z - z^2
    (worse) and z^2 (better). Smaller final z = more reliable. Ties break
    toward the lower index being less reliable.
    """
    n = _check_dims(N, 0)
    z = np.full(1, np.exp(-(10.0 ** (design_snr_db / 10.0))), dtype=np.longdouble)
    for _ in range(n):
        nxt = np.empty(2 * z.size, dtype=np.longdouble)
        nxt[0::2] = 2.0 * z - z * z
        nxt[1::2] = z * z
        z = nxt
    # descending z = ascending reliability; stable sort keeps lower indices first
    return np.argsort(-z, kind="stable").astype(np.int64)


def build_code(N: int, K: int, method: str = "5g",
               seq: ReliabilitySequence | None = None,
               design_snr_db: float = 0.0) -> PolarCode:
    """Construct a PolarCode with the N-K least reliable indices frozen."""
    n = _check_dims(N, K)
    if method == "5g":
        order = subcode_order(seq if seq is not None else default_sequence(), N)
    elif method == "bhattacharyya":
        order = bhattacharyya_order(N, design_snr_db)
    else:
        raise ValueError(f"unknown construction method {method!r}")
    mask = np.zeros(N, dtype=bool)
    mask[order[: N - K]] = True
    return PolarCode(n=n, N=N, K=K, frozen_mask=mask, reliability_order=order)


def butterfly_transform(u: np.ndarray) -> np.ndarray:
    """x = u * G2^(kron n) over GF(2), along the last axis. Self-inverse."""
    u = np.asarray(u)
    N = u.shape[-1]
    _check_dims(N, 0)
    x = (u % 2).astype(np.uint8)
    h = 1
    while h < N:
        shaped = x.reshape(x.shape[:-1] + (N // (2 * h), 2, h))
        shaped[..., 0, :] ^= shaped[..., 1, :]
        h *= 2
    return x


def encode(code: PolarCode, u: np.ndarray) -> np.ndarray:
    """Encode a full length-N input vector; frozen positions must be 0."""
    u = np.asarray(u)
    if u.shape[-1] != code.N:
        raise ValueError(f"u has length {u.shape[-1]}, expected {code.N}")
    if np.any(u[..., code.frozen_mask] != 0):
        raise ValueError("nonzero value in a frozen position")
    return butterfly_transform(u)


def insert_info(code: PolarCode, info_bits: np.ndarray) -> np.ndarray:
    """Place K info bits into the non-frozen positions (natural index order)."""
    info_bits = np.asarray(info_bits)
    if info_bits.shape[-1] != code.K:
        raise ValueError(f"info has length {info_bits.shape[-1]}, expected {code.K}")
    u = np.zeros(info_bits.shape[:-1] + (code.N,), dtype=np.uint8)
    u[..., code.info_positions] = info_bits % 2
    return u


def extract_info(code: PolarCode, u: np.ndarray) -> np.ndarray:
    """Read the K info bits back out of a length-N vector."""
    u = np.asarray(u)
    if u.shape[-1] != code.N:
        raise ValueError(f"u has length {u.shape[-1]}, expected {code.N}")
    return (u[..., code.info_positions] % 2).astype(np.uint8)
