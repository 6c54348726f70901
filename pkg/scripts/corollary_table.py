"""Table of the satellite family: constructed crossings against the full-twist bound.

    python scripts/corollary_table.py --max-a 8 --max-b 8 --k 1
"""

import argparse

from tlinks.obstruction import not_tknot_certificate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-a", type=int, default=8)
    ap.add_argument("--max-b", type=int, default=8)
    ap.add_argument("--k", type=int, default=1)
    args = ap.parse_args()

    print(f"{'a':>3} {'b':>3} {'k':>3} {'pattern':>14} {'crossings':>10} {'bound':>7}  verdict")
    for a in range(2, args.max_a + 1):
        for b in range(2, args.max_b + 1):
            c = not_tknot_certificate((), a, b, args.k)
            print(f"{a:>3} {b:>3} {args.k:>3} {c.pattern:>14} {c.minimal_crossings:>10} {c.bound:>7}  {c.verdict.value}")


if __name__ == "__main__":
    main()
