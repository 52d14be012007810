#!/usr/bin/env python3
"""Export the per-cursor DOT pairs for one of the bundled sample machines.

Run from the repository root, e.g.:

    python3 scripts/export_steps.py a_runs --out out/a_runs_steps
"""

from __future__ import annotations

import argparse

from subsetviz.cli import main as cli_main
from subsetviz.samples import ALL


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("machine", choices=sorted(ALL),
                        help="bundled machine name")
    parser.add_argument("--out", default=None,
                        help="output directory (default: out/<machine>_steps)")
    args = parser.parse_args()
    out_dir = args.out or f"out/{args.machine}_steps"
    return cli_main(["steps", f"machines/{args.machine}.mf", "--out", out_dir])


if __name__ == "__main__":
    raise SystemExit(main())
