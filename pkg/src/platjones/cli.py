"""Command-line front end: a thin client over the service handlers.

Braid input is the JSON schema of the braid module, read from --in FILE or
stdin.  Results are JSON on stdout (floats serialize via round-trip repr);
volscan can additionally emit a CSV table.  Exit codes: 0 success, 1 input
error, 2 resource cap.

Global options (--k, --conjugate-q, --rt-shift, --tolerance, --threads) may
also come from a JSON config file via --config; explicit flags win.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import service
from .errors import InputError, ParseError, PlatJonesError, ResourceError
from .qalgebra import TOL

CONFIG_KEYS = ("k", "conjugate_q", "rt_shift", "tolerance", "threads")
DEFAULTS = {"k": None, "conjugate_q": False, "rt_shift": False, "tolerance": TOL, "threads": 1}


def _settings(args) -> dict:
    """Merge defaults < config file < explicit flags."""
    merged = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read config {args.config}: {exc}") from None
        for key in CONFIG_KEYS:
            if key in cfg:
                merged[key] = cfg[key]
    for key in CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    if merged["k"] is None and getattr(args, "needs_k", True):
        raise InputError("level k is required (flag --k or config file)")
    return merged


def _read_braid(args) -> service.BraidIn | None:
    if getattr(args, "knot", None):
        return None
    if getattr(args, "in_path", None):
        with open(args.in_path) as fh:
            payload = json.load(fh)
    else:
        if sys.stdin.isatty():
            raise InputError("no braid input: pass --knot NAME, --in FILE, or pipe JSON to stdin")
        payload = json.load(sys.stdin)
    return service.BraidIn(**payload)


def _emit(model, args) -> None:
    out = json.dumps(model.model_dump(), indent=2 if args.pretty else None)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _add_common(p: argparse.ArgumentParser, needs_k: bool = True) -> None:
    if needs_k:
        p.add_argument("--k", type=int, help="level k (q = exp(2*pi*i/(k+2)))")
        p.add_argument("--conjugate-q", dest="conjugate_q",
                       action=argparse.BooleanOptionalAction, default=None,
                       help="use the conjugate root exp(-2*pi*i/(k+2))")
    p.add_argument("--config", metavar="FILE", help="JSON config with the global keys")
    p.add_argument("--in", dest="in_path", metavar="FILE", help="braid JSON file (default stdin)")
    p.add_argument("--knot", help="library link name instead of explicit braid JSON")
    p.add_argument("--out", metavar="FILE", help="write JSON here instead of stdout")
    p.add_argument("--pretty", action="store_true", help="indent JSON output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="platjones", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact colored Jones values V and J")
    _add_common(p)
    p.add_argument("--color", type=int, metavar="TWICE",
                   help="recolor all strands with this twice-spin")

    p = sub.add_parser("sample", help="Hadamard-test sampling of the plat amplitude")
    _add_common(p)
    p.add_argument("--color", type=int, metavar="TWICE")
    p.add_argument("--delta", type=float, default=0.1)
    p.add_argument("--confidence", type=float, default=0.75)
    p.add_argument("--variance-bound", type=float, default=1.0)
    p.add_argument("--shots", type=int, help="override the Chernoff-bound shot count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--component", choices=("re", "im", "both"), default="re")

    p = sub.add_parser("rt", help="Reshetikhin-Turaev invariant of the surgered manifold")
    _add_common(p)
    p.add_argument("--framings", type=int, nargs="*", help="surgery framings per component")
    p.add_argument("--rt-shift", dest="rt_shift", action=argparse.BooleanOptionalAction,
                   default=None, help="replace k by k+2 in the b, c constants")
    p.add_argument("--threads", type=int, help="thread pool size for the coloring sum")
    p.add_argument("--empty-link", action="store_true", help="tau of S^3 (no surgery link)")

    p = sub.add_parser("volscan", help="volume-conjecture asymptotic scan")
    p.add_argument("--knot", default="fig8")
    p.add_argument("--nmax", type=int, default=30)
    p.add_argument("--csv", metavar="FILE", help="also write a CSV table (N, |J_N|, ratio)")
    p.add_argument("--config", metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("verify", help="run the oracle cross-check suite")
    p.add_argument("--tolerance", type=float, help="comparison tolerance (default 1e-9)")
    p.add_argument("--config", metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("basis", help="enumerate the conformal-block basis")
    p.add_argument("--k", type=int)
    p.add_argument("--config", metavar="FILE")
    p.add_argument("--colors", type=int, nargs="+", required=True, metavar="TWICE",
                   help="puncture colors as twice-values")
    p.add_argument("--orient", type=str, help="orientations, e.g. '+-+-'")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8077)
    return ap


def _run(args) -> None:
    if args.command == "compute":
        cfg = _settings(args)
        req = service.ComputeRequest(
            braid=_read_braid(args), knot=args.knot, color_twice=args.color,
            k=cfg["k"], conjugate_q=cfg["conjugate_q"],
        )
        _emit(service.compute(req), args)
    elif args.command == "sample":
        cfg = _settings(args)
        req = service.SampleRequest(
            braid=_read_braid(args), knot=args.knot, color_twice=args.color,
            k=cfg["k"], conjugate_q=cfg["conjugate_q"], delta=args.delta,
            confidence=args.confidence, variance_bound=args.variance_bound,
            shots=args.shots, seed=args.seed, component=args.component,
        )
        _emit(service.sample(req), args)
    elif args.command == "rt":
        cfg = _settings(args)
        braid = None if args.empty_link else _read_braid(args)
        req = service.RTRequest(
            braid=braid, knot=None if args.empty_link else args.knot,
            empty_link=args.empty_link,
            framings=list(args.framings) if args.framings is not None else None,
            k=cfg["k"], conjugate_q=cfg["conjugate_q"], rt_shift=cfg["rt_shift"],
            threads=cfg["threads"],
        )
        _emit(service.rt(req), args)
    elif args.command == "volscan":
        resp = service.volscan(service.VolScanRequest(knot=args.knot, nmax=args.nmax))
        if args.csv:
            with open(args.csv, "w") as fh:
                fh.write(service.volscan_csv(resp))
        _emit(resp, args)
    elif args.command == "verify":
        args.needs_k = False
        cfg = _settings(args)
        resp = service.verify(tolerance=cfg["tolerance"])
        _emit(resp, args)
        for row in resp.checks:
            status = "pass" if row.passed else "FAIL"
            print(f"  [{status}] {row.name}: {row.detail}", file=sys.stderr)
        if not resp.passed:
            raise InputError("oracle cross-check suite failed")
    elif args.command == "basis":
        cfg = _settings(args)
        orient = list(args.orient) if args.orient else None
        req = service.BasisRequest(colors_twice=args.colors, orient=orient, k=cfg["k"])
        _emit(service.basis(req), args)
    elif args.command == "serve":
        import uvicorn

        from .api import app
        uvicorn.run(app, host=args.host, port=args.port)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _run(args)
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 2
    except (InputError, PlatJonesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
