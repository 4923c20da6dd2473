"""Benchmark grid over (n, r) for the Frobenius characteristic polynomial."""

import csv
import logging
from collections import defaultdict
from typing import Optional, Sequence, TextIO

import numpy as np

from .charpoly import charpoly_endomorphism
from .config import BENCH_CSV_HEADER, BENCH_REPEATS
from .instance_io import InstanceError, generate_instance
from .instrumentation import count_operations
from .logger import get_logger, log_duration
from .schemas import BenchRow

logger = get_logger(__name__)


def parse_grid(grid: str) -> tuple[list[int], list[int]]:
    """
    Parse "N1,N2,.../R1,R2,...".

    Raises:
        InstanceError: On malformed grids
    """
    try:
        ns_text, rs_text = grid.split("/")
        ns = [int(v) for v in ns_text.split(",") if v.strip()]
        rs = [int(v) for v in rs_text.split(",") if v.strip()]
    except ValueError:
        raise InstanceError("grid", f"expected 'N1,N2,.../R1,R2,...', got {grid!r}")
    if not ns or not rs or min(ns) < 1 or min(rs) < 1:
        raise InstanceError("grid", "n and r values must be positive and non-empty")
    return ns, rs


def _cell_seed(seed: int, n: int, r: int) -> int:
    return seed * 1_000_003 + n * 1009 + r


def run_bench(grid_n: Sequence[int], grid_r: Sequence[int], q: int, m: Optional[int] = None,
              algorithm: str = "auto", seed: int = 0, repeats: int = BENCH_REPEATS) -> list[BenchRow]:
    """
    Time CharPoly(τ^n) on one generated instance per grid cell.

    Args:
        grid_n: Degrees n of L over F_q
        grid_r: Ranks
        q: Field order
        m: Degree of γ_x over F_q (default: n, the prime field case)
        algorithm: Algorithm passed to charpoly_endomorphism
        seed: Base seed, mixed with n and r per cell
        repeats: Timed runs per cell; the minimum is reported

    Returns:
        One BenchRow per cell with n divisible by m
    """
    rows = []
    for n in grid_n:
        if m is not None and n % m:
            logger.warning(f"Skipping n={n}: not a multiple of m={m}")
            continue
        for r in grid_r:
            tower, module, endo = generate_instance(_cell_seed(seed, n, r), q, n, r, m)
            timings = []
            label = f"n={n}, r={r}"
            with count_operations() as counter, log_duration(logger, f"{label} run 1", logging.DEBUG) as timing:
                result = charpoly_endomorphism(module, endo, algorithm)
            timings.append(timing["seconds"])
            for attempt in range(2, repeats + 1):
                with log_duration(logger, f"{label} run {attempt}", logging.DEBUG) as timing:
                    charpoly_endomorphism(module, endo, algorithm)
                timings.append(timing["seconds"])
            row = BenchRow(
                n=n,
                r=r,
                algorithm=result.algorithm,
                wall_seconds=min(timings),
                frobenius_ops=counter.frobenius_ops,
                l_muls=counter.l_muls,
            )
            logger.info(f"Bench cell n={n}, r={r}: {row.wall_seconds:.4f}s, {row.l_muls} L-muls")
            rows.append(row)

    _log_exponents(rows)
    return rows


def fit_exponent(ns: Sequence[int], counts: Sequence[int]) -> float:
    """Least-squares slope of log(count) against log(n)."""
    if len(set(ns)) < 2:
        raise ValueError("need at least two distinct n values to fit an exponent")
    slope, _ = np.polyfit(np.log(np.asarray(ns, dtype=float)), np.log(np.asarray(counts, dtype=float)), 1)
    return float(slope)


def _log_exponents(rows: Sequence[BenchRow]) -> None:
    by_rank = defaultdict(list)
    for row in rows:
        by_rank[row.r].append(row)
    for r, cells in sorted(by_rank.items()):
        if len({c.n for c in cells}) < 2:
            continue
        exponent = fit_exponent([c.n for c in cells], [c.l_muls for c in cells])
        logger.info(f"Scaling exponent of L-multiplications for r={r}: {exponent:.2f}")


def write_csv(rows: Sequence[BenchRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BENCH_CSV_HEADER)
    for row in rows:
        writer.writerow([row.n, row.r, row.algorithm, f"{row.wall_seconds:.6f}", row.frobenius_ops, row.l_muls])
