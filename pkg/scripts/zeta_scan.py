#!/usr/bin/env python3
"""Scan the weighted spectral zeta function across an exponent window.

Produces a CSV (stdout or --output) with one row per exponent and one
column block per weight, straddling the expected abscissa 2l so the
divergence on one side and fast convergence on the other are visible.

Example:
    python scripts/zeta_scan.py --ell 2 --q 0.5 --from-s 4.05 --to-s 8 --steps 12
"""

import argparse
import sys

from qspec.spectrum import default_model, zeta


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ell", type=int, default=2)
    parser.add_argument("--q", type=float, default=0.5)
    parser.add_argument("--from-s", type=float, default=None, dest="from_s")
    parser.add_argument("--to-s", type=float, default=None, dest="to_s")
    parser.add_argument("--steps", type=int, default=10)
    parser.add_argument("--kernel", choices=("shifted", "pure"), default="shifted")
    parser.add_argument(
        "--weights", default="qdim,classical",
        help="comma-separated subset of qdim,qdim-inverse,classical,count",
    )
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument("--output", default=None)
    args = parser.parse_args()

    model = default_model(args.ell, 0, args.q)
    lo = args.from_s if args.from_s is not None else 2 * args.ell + 0.05
    hi = args.to_s if args.to_s is not None else 2 * args.ell + 4.0
    if args.steps < 2 or hi <= lo:
        parser.error("need --steps >= 2 and --to-s > --from-s")
    weights = [w.strip() for w in args.weights.split(",") if w.strip()]

    rows = ["s," + ",".join(f"{w}_value,{w}_terms,{w}_converged" for w in weights)]
    for i in range(args.steps):
        s = lo + (hi - lo) * i / (args.steps - 1)
        cells = [format(s, ".17g")]
        for w in weights:
            res = zeta(model, s, weight=w, kernel=args.kernel, tol=args.tol)
            cells += [format(res.value, ".17g"), str(res.terms_used), str(res.converged)]
        rows.append(",".join(cells))

    text = "\n".join(rows) + "\n"
    if args.output:
        with open(args.output, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
