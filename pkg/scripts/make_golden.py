"""Regenerate the golden files under tests/golden.

Run after an intentional behavior change; the tests compare fresh
computations against these files byte for byte (after JSON parsing).
"""
from __future__ import annotations

import argparse
import json
from pathlib import Path

from klspecht import cob, shapes, specht, verify
from klspecht.shapes import Composition, Tableau

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def b3_table() -> dict:
    return verify.suite_table().details


def discovery(max_d_a: int = 4, max_d_b: int = 2) -> dict:
    report = cob.discover_conventions(cob.certification_instances(max_d_a, max_d_b))
    plain = cob.discover_conventions(
        cob.certification_instances(max_d_a, max_d_b), cob.all_profiles(shapes.READING_VARIANTS)
    )
    return {
        "instances": report.instances,
        "surviving": report.surviving,
        "surviving_strict": report.surviving_strict,
        "support_orientations": report.support_orientations(),
        "surviving_plain_variants": plain.surviving,
        "best_plain_variants": _best(plain),
    }


def discovery_type_b(max_d: int = 2) -> dict:
    report = cob.discover_conventions(cob.certification_instances(0, max_d))
    return {"instances": report.instances, "surviving": report.surviving}


def _best(report: cob.DiscoveryReport) -> dict:
    top = max(len(report.passing(label)) for label in report.results)
    labels = [label for label in report.results if len(report.passing(label)) == top]
    failing = {label: sorted(set(report.instances) - set(report.passing(label))) for label in labels}
    return {"passing": top, "of": len(report.instances), "profiles": failing}


def support_orientation() -> dict:
    instances = [s for d in range(1, 6) for s in shapes.partitions("A", d)] + shapes.partitions("B", 3)
    return verify.orientation_certificate(instances)


def specht_type_b() -> dict:
    ranks = {
        str(s): {"rank": specht.specht_rank(s), "standard": len(shapes.enumerate_standard(s))}
        for d in (1, 2, 3)
        for s in shapes.all_compositions("B", d)
    }
    T = Tableau.from_half(Composition("B", (3, 1, 3)), [], [[1, 2, 3]])
    return {"ranks": ranks, "column_group_order_313": len(specht.column_group(T))}


FILES = {
    "b3_table.json": b3_table,
    "discovery.json": discovery,
    "discovery_type_b.json": discovery_type_b,
    "support_orientation.json": support_orientation,
    "specht_type_b.json": specht_type_b,
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--only", choices=sorted(FILES), action="append")
    args = parser.parse_args()
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name in args.only or FILES:
        data = FILES[name]()
        (GOLDEN / name).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
        print(f"wrote {GOLDEN / name}")


if __name__ == "__main__":
    main()
