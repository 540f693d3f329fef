#!/usr/bin/env python3
"""Write the Gram matrices (36 x 36, 306 x 306 and the 240 cusp classes) as CSV files."""

import argparse
from pathlib import Path

from crossratio import gram


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="gram_out")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    r, m = gram.rank_b2_matrix()
    gram.dump_matrix(m, out / "b2_36.csv")
    print("b2_36.csv      rank", r)
    gram.dump_matrix(gram.gram_306(), out / "full_306.csv")
    print("full_306.csv   ranks", gram.rank_306())
    r, g = gram.rank_cusp_classes()
    gram.dump_matrix(g, out / "cusp_240.csv")
    print("cusp_240.csv   rank", r)


if __name__ == "__main__":
    main()
