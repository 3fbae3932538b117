"""Command-line client.

Every subcommand builds the same request models the HTTP API consumes and
either calls the service handlers in-process (default) or forwards the
request to a running server via --url.  Identical flags and seed always
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import service
from .families import FAMILIES, FamilyError
from .invariants import InconsistentInvariants
from .verify import GROUPS


def _default_seed() -> int:
    return int(os.environ.get("OCTOSPIN_SEED", "0"))


def _dump(payload, args) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _remote(url: str, method: str, path: str, payload=None, params=None) -> dict:
    import httpx

    with httpx.Client(base_url=url, timeout=600.0) as client:
        resp = client.request(method, path, json=payload, params=params)
        if resp.status_code >= 400:
            raise SystemExit("server error %d: %s" % (resp.status_code, resp.text))
        return resp.json()


def _read_spinor(path: str) -> service.SpinorIn:
    with open(path) as fh:
        return service.SpinorIn(**json.load(fh))


def cmd_verify(args) -> int:
    req = service.VerifyRequest(
        family=args.family, trials=args.trials, seed=args.seed, mode=args.mode
    )
    if args.url:
        data = _remote(args.url, "POST", "/verify", payload=req.model_dump())
    else:
        data = service.do_verify(req).model_dump()
    _dump(data, args)
    for suite in data["suites"]:
        status = "pass" if suite["passed"] else "FAIL"
        sys.stderr.write(
            "%-28s %-5s residual=%s  %s\n"
            % (suite["name"], status, suite["max_residual"], suite["detail"])
        )
    return 0 if data["passed"] else 1


def cmd_dims(args) -> int:
    data = (
        _remote(args.url, "GET", "/dims")
        if args.url
        else service.do_dims().model_dump()
    )
    _dump(data, args)
    return 0


def cmd_multable(args) -> int:
    data = (
        _remote(args.url, "GET", "/multable")
        if args.url
        else service.do_multable().model_dump()
    )
    _dump(data, args)
    return 0


def cmd_basis(args) -> int:
    if args.url:
        data = _remote(
            args.url,
            "GET",
            "/basis/%s" % args.family,
            params={"structure": args.structure},
        )
    else:
        data = service.do_basis(args.family, include_structure=args.structure).model_dump(
            exclude_none=True
        )
    _dump(data, args)
    return 0


def cmd_classify(args) -> int:
    req = service.ClassifyRequest(family=args.family, spinor=_read_spinor(args.input))
    if args.url:
        data = _remote(args.url, "POST", "/classify", payload=req.model_dump())
    else:
        data = service.do_classify(req)
    _dump(data, args)
    return 0


def cmd_stabilizer(args) -> int:
    req = service.StabilizerRequest(family=args.family, spinor=_read_spinor(args.input))
    if args.url:
        data = _remote(args.url, "POST", "/stabilizer", payload=req.model_dump())
    else:
        data = service.do_stabilizer(req).model_dump()
    _dump(data, args)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octospin",
        description="Octonions, spin representations, and orbit invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family_choices=None, with_input=False):
        p.add_argument("--url", default=None, help="base URL of a running server")
        p.add_argument("--output", default=None, help="write JSON here instead of stdout")
        p.add_argument(
            "--format", default="json", choices=["json"], help="output format"
        )
        if family_choices is not None:
            p.add_argument("--family", default=family_choices[0], choices=family_choices)
        if with_input:
            p.add_argument("--input", required=True, help="spinor JSON file")

    p = sub.add_parser("verify", help="run verification suites")
    common(p, family_choices=["all"] + list(GROUPS))
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--mode", default="exact", choices=["exact", "float"])
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("dims", help="print the dimension table")
    common(p)
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("multable", help="emit the octonion structure constants")
    common(p)
    p.set_defaults(fn=cmd_multable)

    p = sub.add_parser("basis", help="emit a family basis as JSON")
    common(p, family_choices=list(FAMILIES))
    p.add_argument("--structure", action="store_true", help="include structure constants")
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("classify", help="orbit label of a spinor")
    common(p, family_choices=["spin8", "spin9", "spin10", "spin101"], with_input=True)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("stabilizer", help="stabilizer subalgebra of a spinor")
    common(p, family_choices=list(FAMILIES), with_input=True)
    p.set_defaults(fn=cmd_stabilizer)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (FamilyError, InconsistentInvariants, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
