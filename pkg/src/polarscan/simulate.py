"""Monte-Carlo BLER/BER estimation with deterministic parallelism.

Frames are generated and decoded in fixed-size chunks. Chunk c of SNR
point p draws its randomness from np.random.default_rng([seed, p, c]), so
any worker count produces the same frames. Stopping (enough block errors
or the frame budget) is decided by scanning chunk results in index order;
chunks past the stopping index are discarded even if a worker already
computed them. The resulting CSV is byte-identical for 1 or many workers.
"""

import csv
import io
import time
from dataclasses import dataclass, field

import numpy as np

from .channel import channel_llrs, modulate, noise_sigma
from .codes import PolarCode, encode, extract_info, insert_info
from .fastscan import FastScanDecoder
from .product import PpcConfig, ProductPolarCode, ppc_decode, ppc_encode
from .scan import ScanConfig, ScanDecoder
from .sc import sc_decode
from .schedule import DEFAULT_TYPES

CHUNK_FRAMES = 256


@dataclass(frozen=True)
class DecoderSpec:
    """Picklable decoder description; workers build the decoder lazily."""

    kind: str = "scan"               # 'sc' | 'scan' | 'fast_scan'
    iterations: int = 1
    arithmetic: str = "minsum"
    node_types: frozenset = DEFAULT_TYPES
    spc_forced: bool = False

    def __post_init__(self):
        if self.kind not in ("sc", "scan", "fast_scan"):
            raise ValueError(f"unknown decoder kind {self.kind!r}")


@dataclass(frozen=True)
class ChannelConfig:
    ebn0_db: tuple
    seed: int = 0


@dataclass
class SimPoint:
    ebn0_db: float
    frames: int = 0
    block_errors: int = 0
    bit_errors: int = 0

    @property
    def bler(self) -> float:
        return self.block_errors / self.frames if self.frames else 0.0

    def bler_ber(self, K: int):
        if self.frames == 0:
            return 0.0, 0.0
        return self.block_errors / self.frames, self.bit_errors / (self.frames * K)


@dataclass
class SimResult:
    code_label: str
    K: int
    points: list = field(default_factory=list)
    wall_seconds: float = 0.0

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["ebn0_db", "frames", "block_errors", "bit_errors", "bler", "ber"])
        for p in self.points:
            bler, ber = p.bler_ber(self.K)
            writer.writerow(
                [f"{p.ebn0_db:g}", p.frames, p.block_errors, p.bit_errors, f"{bler:.8e}", f"{ber:.8e}"]
            )
        return buf.getvalue()


def build_decoder(code: PolarCode, spec: DecoderSpec):
    """Turn a DecoderSpec into a callable (B, N) LLRs -> u_hat bits."""
    if spec.kind == "sc":
        return lambda llrs: sc_decode(code, llrs)["u_hat"]
    cfg = ScanConfig(iterations=spec.iterations, arithmetic=spec.arithmetic)
    if spec.kind == "scan":
        dec = ScanDecoder(code, cfg)
    else:
        dec = FastScanDecoder(code, cfg, enabled_types=spec.node_types, spc_forced=spec.spc_forced)
    return lambda llrs: dec.decode(llrs).u_hat


def _polar_runner(code: PolarCode, spec: DecoderSpec):
    decoder = build_decoder(code, spec)

    def run(point_idx, chunk_idx, ebn0_db, seed, frames):
        rng = np.random.default_rng([seed, point_idx, chunk_idx])
        info = rng.integers(0, 2, size=(frames, code.K), dtype=np.uint8)
        x = encode(code, insert_info(code, info))
        sigma = noise_sigma(ebn0_db, code.rate)
        y = modulate(x) + sigma * rng.standard_normal((frames, code.N))
        u_hat = decoder(channel_llrs(y, sigma))
        bit_err = extract_info(code, u_hat) != info
        return frames, int(np.any(bit_err, axis=1).sum()), int(bit_err.sum())

    return run


def _ppc_runner(ppc: ProductPolarCode, cfg: PpcConfig, decoder: str):
    def run(point_idx, chunk_idx, ebn0_db, seed, frames):
        rng = np.random.default_rng([seed, point_idx, chunk_idx])
        info = rng.integers(0, 2, size=(frames,) + ppc.info_shape, dtype=np.uint8)
        x = ppc_encode(ppc, info)
        sigma = noise_sigma(ebn0_db, ppc.rate)
        y = modulate(x) + sigma * rng.standard_normal(x.shape)
        out = ppc_decode(ppc, channel_llrs(y, sigma), cfg, decoder=decoder)
        bit_err = out.info_hat != info
        return frames, int(np.any(bit_err, axis=(1, 2)).sum()), int(bit_err.sum())

    return run


# per-process runner installed by the pool initializer
_worker_state: dict = {}

_RUNNER_BUILDERS = {"polar": _polar_runner, "ppc": _ppc_runner}


def _init_worker(kind, args):
    _worker_state["run"] = _RUNNER_BUILDERS[kind](*args)


def _worker_chunk(task):
    point_idx, chunk_idx = task[0], task[1]
    return (point_idx, chunk_idx) + _worker_state["run"](*task)


def _estimate(runner_kind, runner_args, result: SimResult, ebn0_points, seed: int,
              max_frames: int, min_block_errors: int, workers: int, chunk_frames: int) -> SimResult:
    """Shared chunk-wave loop; identical chunk schedule for any worker count."""
    if not ebn0_points:
        raise ValueError("empty SNR list")
    if max_frames <= 0:
        raise ValueError("max_frames must be positive")
    start = time.time()

    pool = None
    if workers > 1:
        import multiprocessing as mp

        pool = mp.get_context().Pool(workers, initializer=_init_worker,
                                     initargs=(runner_kind, runner_args))
    try:
        run = _RUNNER_BUILDERS[runner_kind](*runner_args) if pool is None else None
        for point_idx, ebn0 in enumerate(ebn0_points):
            point = SimPoint(ebn0_db=float(ebn0))
            next_chunk = 0
            done = False
            while not done:
                # one wave of chunks, sized to keep all workers busy
                wave = []
                budget_left = max_frames - point.frames
                for w in range(max(workers, 1)):
                    frames = min(chunk_frames, budget_left - w * chunk_frames)
                    if frames <= 0:
                        break
                    wave.append((next_chunk + w, frames))
                if not wave:
                    break
                if pool is None:
                    outs = [
                        (point_idx, c) + run(point_idx, c, float(ebn0), seed, fr)
                        for c, fr in wave
                    ]
                else:
                    tasks = [(point_idx, c, float(ebn0), seed, fr) for c, fr in wave]
                    outs = pool.map(_worker_chunk, tasks)
                # fold results in chunk order; truncate at the stopping chunk
                outs.sort(key=lambda o: o[1])
                for _, _, frames, blk, bits in outs:
                    point.frames += frames
                    point.block_errors += blk
                    point.bit_errors += bits
                    if point.block_errors >= min_block_errors or point.frames >= max_frames:
                        done = True
                        break
                next_chunk += len(wave)
            result.points.append(point)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    result.wall_seconds = time.time() - start
    return result


def run_sim(code: PolarCode, spec: DecoderSpec, channel: ChannelConfig,
            max_frames: int = 1_000_000, min_block_errors: int = 100,
            workers: int = 1, chunk_frames: int = CHUNK_FRAMES) -> SimResult:
    """Estimate BLER/BER per SNR point for a single polar code."""
    result = SimResult(code_label=f"({code.N},{code.K})", K=code.K)
    return _estimate("polar", (code, spec), result, channel.ebn0_db, channel.seed,
                     max_frames, min_block_errors, workers, chunk_frames)


def run_ppc_sim(ppc: ProductPolarCode, cfg: PpcConfig, channel: ChannelConfig,
                decoder: str = "fast_scan", max_frames: int = 1_000_000,
                min_block_errors: int = 100, workers: int = 1,
                chunk_frames: int = CHUNK_FRAMES) -> SimResult:
    """Estimate BLER/BER per SNR point for a product polar code."""
    label = f"({ppc.row_code.N},{ppc.row_code.K})x({ppc.col_code.N},{ppc.col_code.K})"
    result = SimResult(code_label=label, K=ppc.K)
    return _estimate("ppc", (ppc, cfg, decoder), result, channel.ebn0_db, channel.seed,
                     max_frames, min_block_errors, workers, chunk_frames)


def parse_ebn0_range(text: str) -> tuple:
    """'a:b:step' inclusive range, or a comma list, or a single value."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("SNR range must be a:b:step")
        a, b, step = (float(p) for p in parts)
        if step <= 0:
            raise ValueError("SNR step must be positive")
        if b < a:
            raise ValueError("SNR range end must not be below its start")
        n = int(round((b - a) / step))
        return tuple(round(a + i * step, 10) for i in range(n + 1) if a + i * step <= b + 1e-9)
    return tuple(float(p) for p in text.split(","))
