"""Product polar codes: encoding and turbo-style iterative soft decoding.

A codeword is an N_c x N_r bit matrix whose every row belongs to the row
code and every column to the column code. Decoding alternates row and
column half-iterations; each half runs the component soft decoder on
channel LLRs plus the scaled extrinsic from the other dimension and stores
the decoder's root feedback as the new extrinsic. Decoding stops early
when the combined hard decision re-encodes cleanly in both dimensions.
"""

from dataclasses import dataclass

import numpy as np

from .arithmetic import DEFAULT_SAT, combiner
from .codes import PolarCode, butterfly_transform
from .fastscan import FastScanDecoder
from .scan import ScanConfig, ScanDecoder
from .schedule import DEFAULT_TYPES


@dataclass(frozen=True)
class ProductPolarCode:
    row_code: PolarCode
    col_code: PolarCode

    @property
    def shape(self):
        """(N_c, N_r) codeword matrix shape."""
        return (self.col_code.N, self.row_code.N)

    @property
    def info_shape(self):
        return (self.col_code.K, self.row_code.K)

    @property
    def N(self) -> int:
        return self.row_code.N * self.col_code.N

    @property
    def K(self) -> int:
        return self.row_code.K * self.col_code.K

    @property
    def rate(self) -> float:
        return self.K / self.N


@dataclass
class PpcConfig:
    half_iteration_pairs: int = 8
    inner_scan_iterations: int = 1
    extrinsic_scale: float = 1.0
    arithmetic: str = "minsum"
    sat: float = DEFAULT_SAT

    def __post_init__(self):
        if self.half_iteration_pairs < 1:
            raise ValueError("half_iteration_pairs must be >= 1")
        if self.inner_scan_iterations < 1:
            raise ValueError("inner_scan_iterations must be >= 1")
        if not 0.0 < self.extrinsic_scale <= 1.0:
            raise ValueError("extrinsic_scale must be in (0, 1]")
        combiner(self.arithmetic)


@dataclass
class PpcOutput:
    x_hat: np.ndarray            # (..., N_c, N_r) hard codeword matrix
    info_hat: np.ndarray         # (..., K_c, K_r) recovered info bits
    iterations_used: np.ndarray  # per-frame half-iteration pairs executed


def ppc_encode(ppc: ProductPolarCode, info_matrix: np.ndarray) -> np.ndarray:
    """Embed info on the (col-info x row-info) grid, then encode rows, then columns."""
    info = np.asarray(info_matrix, dtype=np.uint8)
    single = info.ndim == 2
    info = info[None] if single else info
    if info.shape[-2:] != ppc.info_shape:
        raise ValueError(f"info shape {info.shape[-2:]} != {ppc.info_shape}")
    B = info.shape[0]
    u = np.zeros((B,) + ppc.shape, dtype=np.uint8)
    u[np.ix_(np.arange(B), ppc.col_code.info_positions, ppc.row_code.info_positions)] = info
    x = butterfly_transform(u)                    # each row through the row code
    x = _transform_columns(x)                     # each column through the column code
    return x[0] if single else x


def _transform_columns(mat: np.ndarray) -> np.ndarray:
    return np.swapaxes(butterfly_transform(np.swapaxes(mat, -1, -2)), -1, -2)


def _matrix_info(ppc: ProductPolarCode, x_hat: np.ndarray) -> np.ndarray:
    """Invert both transforms (self-inverse) and read the info grid."""
    u = _transform_columns(butterfly_transform(x_hat))
    B = u.shape[0]
    return u[np.ix_(np.arange(B), ppc.col_code.info_positions, ppc.row_code.info_positions)]


def _valid_frames(ppc: ProductPolarCode, x_hat: np.ndarray) -> np.ndarray:
    """Per-frame check that every row and column re-encodes cleanly."""
    u_rows = butterfly_transform(x_hat)
    u_cols = np.swapaxes(butterfly_transform(np.swapaxes(x_hat, -1, -2)), -1, -2)
    rows_ok = ~np.any(u_rows[:, :, ppc.row_code.frozen_mask], axis=(1, 2))
    cols_ok = ~np.any(u_cols[:, ppc.col_code.frozen_mask, :], axis=(1, 2))
    return rows_ok & cols_ok


def _component_decoder(code: PolarCode, cfg: PpcConfig, decoder: str):
    scan_cfg = ScanConfig(iterations=cfg.inner_scan_iterations, arithmetic=cfg.arithmetic, sat=cfg.sat)
    if decoder == "scan":
        return ScanDecoder(code, scan_cfg)
    if decoder == "fast_scan":
        # only root extrinsics are exchanged; skip the lam[0] reconstruction
        return FastScanDecoder(code, scan_cfg, enabled_types=DEFAULT_TYPES, leaf_extrinsic=False)
    raise ValueError(f"unknown component decoder {decoder!r}")


def ppc_decode(ppc: ProductPolarCode, channel_llr_matrix: np.ndarray,
               cfg: PpcConfig | None = None, decoder: str = "scan") -> PpcOutput:
    """Iterative row/column soft decoding with extrinsic exchange."""
    cfg = cfg or PpcConfig()
    llrs = np.asarray(channel_llr_matrix, dtype=float)
    single = llrs.ndim == 2
    llrs = llrs[None] if single else llrs
    if llrs.shape[-2:] != ppc.shape:
        raise ValueError(f"LLR matrix shape {llrs.shape[-2:]} != {ppc.shape}")
    B, N_c, N_r = llrs.shape

    row_dec = _component_decoder(ppc.row_code, cfg, decoder)
    col_dec = _component_decoder(ppc.col_code, cfg, decoder)

    e_row = np.zeros_like(llrs)
    e_col = np.zeros_like(llrs)
    x_hat = np.zeros((B, N_c, N_r), dtype=np.uint8)
    iters = np.full(B, cfg.half_iteration_pairs, dtype=int)
    active = np.ones(B, dtype=bool)

    for pair in range(1, cfg.half_iteration_pairs + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        rows_in = (llrs[idx] + cfg.extrinsic_scale * e_col[idx]).reshape(-1, N_r)
        e_row[idx] = row_dec.decode(rows_in).root_extrinsic.reshape(-1, N_c, N_r)
        cols_in = np.swapaxes(llrs[idx] + cfg.extrinsic_scale * e_row[idx], -1, -2).reshape(-1, N_c)
        e_col[idx] = np.swapaxes(
            col_dec.decode(cols_in).root_extrinsic.reshape(-1, N_r, N_c), -1, -2)

        combined = llrs[idx] + e_row[idx] + e_col[idx]
        hard = (combined < 0).astype(np.uint8)
        x_hat[idx] = hard
        ok = _valid_frames(ppc, hard)
        iters[idx[ok]] = pair
        active[idx[ok]] = False

    info_hat = _matrix_info(ppc, x_hat)
    if single:
        return PpcOutput(x_hat=x_hat[0], info_hat=info_hat[0], iterations_used=iters[0])
    return PpcOutput(x_hat=x_hat, info_hat=info_hat, iterations_used=iters)
