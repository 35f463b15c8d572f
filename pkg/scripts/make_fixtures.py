"""Regenerate the offline isogeny-class fixtures shipped with the package.

The records mimic the LMFDB av_fq_isog JSON layout. Only ordinary squarefree
classes are written, since those are always realized by an abelian variety.
Genus 3 lists are thinned to a deterministic subset to keep the files small.

    python3 scripts/make_fixtures.py [--g3-stride 12]
"""

import argparse
import json
from pathlib import Path

from avpoints.weil import enumerate_weil

OUT = Path(__file__).resolve().parents[1] / "src" / "avpoints" / "data" / "fixtures"


def record(W):
    return {"label": W.label(), "g": W.g, "q": W.q, "poly": list(W.h), "p_rank": W.g}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--g3-stride", type=int, default=12)
    ap.add_argument("--qs", default="2,3,4,5")
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    for q in [int(s) for s in args.qs.split(",")]:
        for g in (2, 3):
            Ws = enumerate_weil(g, q, squarefree=True, ordinary=True)
            if g == 3:
                Ws = Ws[:: args.g3_stride]
            rows = [record(W) for W in Ws]
            path = OUT / f"av_fq_isog_g{g}_q{q}.json"
            path.write_text(json.dumps({"data": rows, "source": "local enumeration"}, indent=1) + "\n")
            print(path.name, len(rows))


if __name__ == "__main__":
    main()
