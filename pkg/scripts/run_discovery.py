"""Sweep every convention profile over the certification instances and print the pass table.

Example:
    python scripts/run_discovery.py --max-d-a 4 --max-d-b 2 --json report.json
"""
from __future__ import annotations

import argparse
import time
from pathlib import Path

from klspecht import cob, shapes


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-d-a", type=int, default=4)
    parser.add_argument("--max-d-b", type=int, default=2)
    parser.add_argument("--plain-only", action="store_true", help="restrict to the four row-reading variants")
    parser.add_argument("--json", type=Path, help="write the full report (with violations) here")
    args = parser.parse_args()

    variants = shapes.READING_VARIANTS if args.plain_only else shapes.MAP_VARIANTS
    instances = cob.certification_instances(args.max_d_a, args.max_d_b)
    start = time.perf_counter()
    report = cob.discover_conventions(instances, cob.all_profiles(variants))
    elapsed = time.perf_counter() - start

    print(report.summary())
    print(f"Specht support orientation per map variant: {report.support_orientations()}")
    print(f"preferred: {report.preferred}")
    print(f"elapsed: {elapsed:.1f}s")
    if args.json:
        args.json.write_text(report.dumps(full=True) + "\n")


if __name__ == "__main__":
    main()
