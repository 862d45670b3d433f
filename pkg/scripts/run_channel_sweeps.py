#!/usr/bin/env python3
"""Generate the channel-bound sweep CSVs at q = 0.4 and q = 0.9.

Writes channel_sweep_q04.csv and channel_sweep_q09.csv (columns
theta,sum,ob1,ob2,ob3,lb1,lb2,lb3) into the output directory; these are
the data behind the two-panel comparison of all six bounds against the
exact sum. Plotting is left to external tools.
"""

import argparse
import math
from pathlib import Path

from chanskew.repro import (
    CHANNEL_BLOCH_RADIUS,
    DEFAULT_PARAMS,
    DEFAULT_SWEEP_STEPS,
    SweepConfig,
    channel_rows_to_csv,
    channel_sweep,
)


def run(outdir: Path, steps: int) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for q in (0.4, 0.9):
        cfg = SweepConfig(
            theta_start=0.0,
            theta_end=math.pi,
            steps=steps,
            q=q,
            params=DEFAULT_PARAMS,
            bloch_radius=CHANNEL_BLOCH_RADIUS,
        )
        path = outdir / f"channel_sweep_q{int(q * 10):02d}.csv"
        path.write_text(channel_rows_to_csv(channel_sweep(cfg)))
        print(f"wrote {path}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path("out"))
    parser.add_argument("--steps", type=int, default=DEFAULT_SWEEP_STEPS)
    args = parser.parse_args()
    run(args.outdir, args.steps)
