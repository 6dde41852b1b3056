"""Exhaustive sweep over connected graphs, per-n outcome table.

    python3 scripts/sweep.py --max-n 8 --workers 1 --out sweep.jsonl
"""

import argparse
import sys
from collections import Counter

from covpack.harness import build_universe, run_suite
from covpack.theorems import THEOREMS


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--theorems", default=",".join(THEOREMS))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--raw", action="store_true")
    p.add_argument("--out", default=None, help="JSONL report path")
    args = p.parse_args(argv)

    tids = args.theorems.split(",")
    rows = []
    for n in range(1, args.max_n + 1):
        rep = run_suite(build_universe(n, min_n=n, raw=args.raw), tids, workers=args.workers)
        per = Counter((v.theorem_id, v.outcome.value) for v in rep.records)
        rows.append((n, rep.graphs, per))
        print(f"n={n} graphs={rep.graphs} "
              + " ".join(f"{t}:fails={per[(t, 'fails')]}" for t in tids), file=sys.stderr)

    print(f"{'n':>3} {'graphs':>7} " + " ".join(f"{t:>12}" for t in tids))
    for n, count, per in rows:
        cells = [f"{per[(t, 'holds')]}/{per[(t, 'fails')]}" for t in tids]
        print(f"{n:>3} {count:>7} " + " ".join(f"{c:>12}" for c in cells))
    print("(cells are holds/fails)")

    if args.out:
        full = run_suite(build_universe(args.max_n, raw=args.raw), tids, workers=args.workers)
        with open(args.out, "w") as f:
            f.write(full.render())


if __name__ == "__main__":
    main()
