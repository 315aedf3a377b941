#!/usr/bin/env python3
"""Run every verification sweep and write JSON reports plus summary CSVs.

    python3 scripts/run_sweeps.py --out results --jobs 4
"""

from __future__ import annotations

import argparse
import logging
import time
from dataclasses import dataclass
from pathlib import Path

from ceitrees.verification import (
    verify_all_degree_sequences,
    verify_branching_bounds,
    verify_global_ordering,
    verify_majorization_monotonicity,
    verify_transformations,
    write_summary_csv,
)

log = logging.getLogger("sweeps")


@dataclass
class SweepConfig:
    out: Path = Path("results")
    n_max: int = 9
    jobs: int = 1
    trials: int = 10_000
    seed: int = 0
    timing: bool = False


def _save(reports, folder: Path, timing: bool) -> int:
    folder.mkdir(parents=True, exist_ok=True)
    for i, rep in enumerate(reports):
        (folder / f"{i:03d}.json").write_text(rep.to_json(timing) + "\n")
    write_summary_csv(reports, folder / "summary.csv")
    bad = [r for r in reports if not r.ok]
    for r in bad:
        log.warning("failed: %s %s", r.subject_label(), r.failures())
    return len(bad)


def run(cfg: SweepConfig) -> int:
    sweeps = {
        "degrees": lambda: verify_all_degree_sequences(cfg.n_max, jobs=cfg.jobs),
        "majorization": lambda: [
            verify_majorization_monotonicity(n) for n in range(2, cfg.n_max + 1)
        ],
        "branching": lambda: [
            verify_branching_bounds(n, r, jobs=cfg.jobs)
            for n in range(6, cfg.n_max + 1)
            for r in range(1, n // 2)
        ],
        "ordering": lambda: [
            verify_global_ordering(n, jobs=cfg.jobs) for n in range(6, cfg.n_max + 1)
        ],
        "transforms": lambda: [verify_transformations(cfg.trials, cfg.seed)],
    }
    failed = 0
    print(f"{'sweep':<14}{'reports':>8}{'failed':>8}{'seconds':>10}")
    for name, fn in sweeps.items():
        start = time.perf_counter()
        reports = fn()
        bad = _save(reports, cfg.out / name, cfg.timing)
        print(f"{name:<14}{len(reports):>8}{bad:>8}{time.perf_counter() - start:>10.2f}")
        failed += bad
    return 1 if failed else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=SweepConfig.out)
    p.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    p.add_argument("--jobs", type=int, default=SweepConfig.jobs)
    p.add_argument("--trials", type=int, default=SweepConfig.trials)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    p.add_argument("--timing", action="store_true")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    return run(SweepConfig(**vars(args)))


if __name__ == "__main__":
    raise SystemExit(main())
