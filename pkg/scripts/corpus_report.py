"""Run engine and oracle over the seeded corpus and print per-cell statistics.

    python scripts/corpus_report.py [--seeds 10] [--no-oracle]
"""

import argparse
import statistics
import time
from collections import defaultdict

from spath import Mode, enumerate_from, run, run_heap
from spath.corpus import CorpusConfig, corpus


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=10, help="graphs per (n, p, mode) cell")
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args()

    rows = defaultdict(lambda: defaultdict(list))
    mismatches = 0
    for it in corpus(CorpusConfig(seeds_per_cell=args.seeds)):
        g = it.graph
        row = rows[it.n, it.edge_probability, it.mode]
        row["edges"].append(len(g.edge_list()))
        for s in range(g.n):
            t0 = time.perf_counter()
            result, _ = run(g, s, mode=Mode.EXHAUSTIVE)
            t1 = time.perf_counter()
            heap = run_heap(g, s, mode=Mode.EXHAUSTIVE)
            t2 = time.perf_counter()
            row["linear_us"].append((t1 - t0) * 1e6)
            row["heap_us"].append((t2 - t1) * 1e6)
            row["reach"].append((len(result.settled) - 1) / max(g.n - 1, 1))
            mismatches += heap.labels != result.labels
            if not args.no_oracle:
                t3 = time.perf_counter()
                answers = enumerate_from(g, s)
                row["oracle_ms"].append((time.perf_counter() - t3) * 1e3)
                row["paths"].append(sum(a.path_count for a in answers))
                mismatches += any(
                    result.labels[v].cost.cost != answers[v].min_weight for v in range(g.n) if v != s
                )

    header = f"{'n':>3} {'p':>4} {'mode':>10} {'edges':>6} {'reach':>6} {'lin us':>7} {'heap us':>8}"
    if not args.no_oracle:
        header += f" {'paths':>9} {'oracle ms':>9}"
    print(header)
    for (n, p, mode), row in sorted(rows.items()):
        line = (
            f"{n:>3} {p:>4} {mode:>10} {statistics.mean(row['edges']):>6.1f} {statistics.mean(row['reach']):>6.2f}"
            f" {statistics.mean(row['linear_us']):>7.1f} {statistics.mean(row['heap_us']):>8.1f}"
        )
        if not args.no_oracle:
            line += f" {statistics.mean(row['paths']):>9.0f} {statistics.mean(row['oracle_ms']):>9.2f}"
        print(line)
    print(f"mismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
