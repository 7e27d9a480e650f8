#!/usr/bin/env python3
"""Run the full structural verification suite over the fixture family and
print a human-readable report.

For every fixture this checks, in exact rational arithmetic:
  * the defining identity (exhaustive triple check),
  * layout consistency (components are the stated subalgebras, ideal = squares),
  * classification (solvable / semisimple / Lie-simple / simple),
  * the four component-ideal clauses,
  * decomposability, with the intersection witness when indecomposable.

Usage: python3 scripts/run_verification_suite.py [--max-weight N]
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time

from leibnizalg import (
    build_example2,
    build_example3,
    build_lie_simple,
    build_simple_leibniz,
    component_ideals,
    decompose_semisimple,
    derived_series,
    is_leibniz,
    is_lie_simple,
    is_semisimple_leibniz,
    is_simple_leibniz,
    verify_layout,
)
from leibnizalg.errors import UndecidableIrreducibility


def classify_line(table) -> str:
    parts = []
    parts.append("solvable" if derived_series(table).solvable else "not solvable")
    parts.append(
        "semisimple" if is_semisimple_leibniz(table) else "not semisimple"
    )
    parts.append("lie-simple" if is_lie_simple(table) else "not lie-simple")
    try:
        parts.append("simple" if is_simple_leibniz(table) else "not simple")
    except UndecidableIrreducibility:
        parts.append("simple: undecidable")
    return ", ".join(parts)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-weight", type=int, default=4)
    args = parser.parse_args()

    start = time.perf_counter()
    failures = 0
    fixtures = []
    for m in range(1, args.max_weight + 1):
        fixtures.append((f"simple(m={m})", build_simple_leibniz(m)))
    for ts in itertools.combinations(range(1, args.max_weight + 1), 2):
        fixtures.append((f"lie-simple(t={list(ts)})", build_lie_simple(list(ts))))
    for ts in itertools.product((1, 2), repeat=4):
        fixtures.append((f"example2(t={list(ts)})", build_example2(*ts)))
    fixtures.append(("example3", build_example3()))

    for name, ba in fixtures:
        line = [f"{name}: dim {ba.table.dim}"]
        ok = True
        if not is_leibniz(ba.table):
            line.append("IDENTITY FAILS")
            ok = False
        try:
            verify_layout(ba.table, ba.layout)
        except Exception as exc:  # report, keep going
            line.append(f"LAYOUT FAILS ({exc})")
            ok = False
        if ok:
            line.append(classify_line(ba.table))
            ci = component_ideals(ba.table, ba.layout)
            if not ci.all_clauses_hold():
                line.append("COMPONENT-IDEAL CLAUSES FAIL")
                ok = False
            rep = decompose_semisimple(ba.table, ba.layout)
            if rep.status == "decomposed":
                kinds = ",".join(s.classification for s in rep.summands)
                line.append(f"decomposed [{kinds}]")
            else:
                p, q, inter = rep.witness
                line.append(
                    f"not decomposable (dim {inter.dim} intersection of "
                    f"I[{p}] and I[{q}])"
                )
        if not ok:
            failures += 1
        print("  ".join(line))

    elapsed = time.perf_counter() - start
    print(f"\n{len(fixtures)} fixtures, {failures} failures, {elapsed:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
