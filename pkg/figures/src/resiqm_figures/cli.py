"""Command line front end.

    resiqm-plot <run_dir> --steps 0,250,500 --out figs/ [--show psi,phi,phase_space,potential] [--raw]
"""

import argparse
import sys

from .frames import DEFAULT_SHOW, FrameSpec, render


def build_parser():
    parser = argparse.ArgumentParser(prog="resiqm-plot", description=__doc__.splitlines()[0])
    parser.add_argument("run_dir", help="directory produced by 'resiqm run'")
    parser.add_argument("--steps", default="", help="comma-separated snapshot steps")
    parser.add_argument("--out", default="figs", help="output directory for PNG files")
    parser.add_argument(
        "--show", default=",".join(DEFAULT_SHOW),
        help="comma-separated subset of psi,phi,phase_space,potential",
    )
    parser.add_argument("--raw", action="store_true", help="plot Re/Im instead of moduli")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        steps = tuple(int(s) for s in args.steps.split(",") if s.strip() != "")
        spec = FrameSpec(
            run_dir=args.run_dir,
            steps=steps,
            show=tuple(s for s in args.show.split(",") if s),
            raw_parts=args.raw,
        )
        written = render(spec, args.out)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
