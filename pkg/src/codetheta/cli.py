"""Command-line front end.

The CLI is a thin client over the service handlers: it builds the same
pydantic request the HTTP API takes and either dispatches in-process
(default) or POSTs it to a running service (--server URL).  Output is
machine-readable; the resolved configuration is echoed in the JSON payload
(`config` key) or as a leading comment line for CSV.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import service
from .arith import AdmissibilityError
from .codes import GuardExceeded
from .examples import UnknownExample
from .kernel import BudgetExceeded

_ROUTES = {
    "coset-theta": ("/coset-theta", service.CosetThetaRequest,
                    service.handle_coset_theta),
    "code-theta": ("/code-theta", service.CodeThetaRequest,
                   service.handle_code_theta),
    "swe": ("/swe", service.SweRequest, service.handle_swe),
    "nullity": ("/nullity", service.NullityRequest, service.handle_nullity),
    "nullity-table": ("/nullity-table", service.NullityTableRequest,
                      service.handle_nullity_table),
    "collide": ("/collide", service.CollideRequest, service.handle_collide),
    "count-table": ("/count-table", service.CountTableRequest,
                    service.handle_count_table),
    "verify": ("/verify", service.VerifyRequest, service.handle_verify),
}


def _dispatch(command: str, payload: dict, server: str | None):
    path, req_model, handler = _ROUTES[command]
    if server:
        import httpx
        resp = httpx.post(server.rstrip("/") + path, json=payload,
                          timeout=None)
        if resp.status_code != 200:
            raise RuntimeError(f"server error {resp.status_code}: {resp.text}")
        return resp.json()
    result = handler(req_model(**payload))
    return result.model_dump()


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", default=None,
                        help="base URL of a running codetheta service; "
                             "default is in-process execution")
    common.add_argument("--threads", type=int,
                        default=int(os.environ.get("CODETHETA_THREADS",
                                                   os.cpu_count() or 1)),
                        help="worker budget (results are identical for any "
                             "value; current build computes serially)")
    common.add_argument("--format", choices=("json", "csv", "pretty"),
                        default=None, help="output format override")
    ap = argparse.ArgumentParser(
        prog="codetheta",
        description="Exact theta series of Construction-A lattices and "
                    "the search for non-equivalent codes sharing one.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    sp = add_parser("coset-theta", help="theta series of a coset of pO_K")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--method", choices=("direct", "factored"),
                    default="direct")
    sp.add_argument("--prec", type=int, default=service.DEFAULT_PRECISION)

    sp = add_parser("code-theta", help="theta series of a code lattice")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--code", required=True,
                    help="inline 'a1;a2;v1,v2,...' generators or a JSON "
                         "word list")
    sp.add_argument("--span", choices=("module", "fp"), default="module")
    sp.add_argument("--oracle", action="store_true",
                    help="also run the slow lattice-point oracle and compare")
    sp.add_argument("--prec", type=int, default=service.DEFAULT_PRECISION)

    sp = add_parser("swe", help="weight enumerators of a code")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--code", required=True)
    sp.add_argument("--span", choices=("module", "fp"), default="module")

    sp = add_parser("nullity", help="rank/nullity of the monomial-theta matrix")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--trunc", type=int, default=None)
    group.add_argument("--auto", action="store_true",
                       help="stabilized truncation (default)")
    sp.add_argument("--ceiling", type=int, default=2048)

    sp = add_parser("nullity-table", help="nullity table as CSV")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ells", type=_int_list, required=True)
    sp.add_argument("--ns", type=_int_list, required=True)
    sp.add_argument("--ceiling", type=int, default=2048)

    sp = add_parser("collide", help="group the code family by theta series")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--span", choices=("module", "fp"), default="module")
    sp.add_argument("--vectors", choices=("all", "fp"), default="all")
    sp.add_argument("--prec", type=int, default=service.DEFAULT_PRECISION)

    sp = add_parser("count-table",
                        help="(#swe, #theta) counts over an (n, ell) grid")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ells", type=_int_list, required=True)
    sp.add_argument("--ns", type=_int_list, required=True)
    sp.add_argument("--span", choices=("module", "fp"), default="module")
    sp.add_argument("--vectors", choices=("all", "fp"), default="all")
    sp.add_argument("--prec", type=int, default=service.DEFAULT_PRECISION)

    sp = add_parser("verify", help="re-check the published examples")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--example", default=None)
    group.add_argument("--all", action="store_true")
    return ap


def _payload(args) -> dict:
    cmd = args.command
    if cmd == "coset-theta":
        return {"p": args.p, "ell": args.ell, "a": args.a, "b": args.b,
                "method": args.method, "precision": args.prec}
    if cmd == "code-theta":
        return {"p": args.p, "ell": args.ell,
                "code": _code_spec(args), "precision": args.prec,
                "oracle": args.oracle}
    if cmd == "swe":
        return {"p": args.p, "ell": args.ell, "code": _code_spec(args)}
    if cmd == "nullity":
        return {"p": args.p, "ell": args.ell, "n": args.n,
                "truncation": args.trunc, "ceiling": args.ceiling}
    if cmd == "nullity-table":
        return {"p": args.p, "ells": args.ells, "ns": args.ns,
                "ceiling": args.ceiling}
    if cmd == "collide":
        return {"p": args.p, "ell": args.ell, "n": args.n,
                "span": args.span, "vectors": args.vectors,
                "precision": args.prec}
    if cmd == "count-table":
        return {"p": args.p, "ells": args.ells, "ns": args.ns,
                "span": args.span, "vectors": args.vectors,
                "precision": args.prec}
    if cmd == "verify":
        return {"example": args.example}
    raise AssertionError(cmd)


def _code_spec(args) -> dict:
    text = args.code.strip()
    if text.startswith("{") or text.startswith("["):
        data = json.loads(text)
        if isinstance(data, dict):
            return {"words": data.get("words"),
                    "generators": None, "span": args.span}
        return {"words": data, "generators": None, "span": args.span}
    return {"generators": text, "words": None, "span": args.span}


def _emit(args, result: dict) -> int:
    fmt = args.format
    if "csv" in result and fmt in (None, "csv"):
        header = "# " + json.dumps(result.get("config", {}),
                                   sort_keys=True, separators=(",", ":"))
        sys.stdout.write(header + "\n" + result["csv"])
        return 0
    if args.command == "verify":
        for r in result["results"]:
            line = "PASS" if r["passed"] else "FAIL"
            print(f"{line}  {r['name']}")
            for f in r.get("failures", []):
                print(f"      {f}")
        return 0 if result["passed"] else 1
    if fmt == "pretty" and "pretty" in result:
        print(json.dumps(result.get("config", {}), sort_keys=True))
        print(result["pretty"])
        return 0
    print(json.dumps(result, indent=2, sort_keys=True))
    return 0


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads < 1:
        ap.error("--threads must be >= 1")
    try:
        result = _dispatch(args.command, _payload(args), args.server)
    except (AdmissibilityError, GuardExceeded, BudgetExceeded,
            UnknownExample, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return _emit(args, result)


if __name__ == "__main__":
    sys.exit(main())
