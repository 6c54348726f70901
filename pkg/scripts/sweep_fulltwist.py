"""Run fulltwist_presentation over every spec in a box and summarize.

    python scripts/sweep_fulltwist.py --max-r 6 --max-pairs 3 --max-s 5 [--jsonl out.jsonl]
"""

import argparse
import collections
import json
import time

from tlinks.rewrite import fulltwist_presentation
from tlinks.tlink import enumerate_specs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-r", type=int, default=6)
    ap.add_argument("--max-pairs", type=int, default=3)
    ap.add_argument("--max-s", type=int, default=5)
    ap.add_argument("--jsonl", help="write one certificate per line")
    args = ap.parse_args()

    t0 = time.perf_counter()
    by_route = collections.Counter()
    strands = collections.Counter()
    out = open(args.jsonl, "w") if args.jsonl else None
    n = 0
    for spec in enumerate_specs(args.max_r, args.max_pairs, args.max_s):
        cert = fulltwist_presentation(spec)
        n += 1
        names = [s.name for s in cert.steps]
        route = "standard" if "standard" in names else "duality" if "duality" in names and "isopote" not in names \
            else "iterated" if "isopote" in names else "unknot"
        by_route[route] += 1
        strands[(spec.strands, cert.output_word.strands)] += 1
        if out:
            out.write(cert.to_json() + "\n")
    if out:
        out.close()
    print(f"{n} specs certified in {time.perf_counter() - t0:.1f}s")
    print("routes:", json.dumps(dict(by_route), sort_keys=True))
    print("strand drop (input -> output): count")
    for (a, b), c in sorted(strands.items()):
        print(f"  {a} -> {b}: {c}")


if __name__ == "__main__":
    main()
