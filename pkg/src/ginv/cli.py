"""Command-line front end.

Exit codes: 0 on success or a valid certificate, 2 when the requested
inverse does not exist or a certificate is invalid, 1 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus, engine, oracle
from .engine import Form, InverseKind
from .errors import GinvError, NotInvertible, PreconditionViolated
from .rings import Ring, make_ring

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2

KIND_ALIASES = {
    "inner": InverseKind.INNER,
    "group": InverseKind.GROUP,
    "one-three": InverseKind.ONE_THREE,
    "13": InverseKind.ONE_THREE,
    "one-four": InverseKind.ONE_FOUR,
    "14": InverseKind.ONE_FOUR,
    "core": InverseKind.CORE,
    "dual-core": InverseKind.DUAL_CORE,
    "dual": InverseKind.DUAL_CORE,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_ERROR)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _element(ring: Ring, inline: str | None, path: str | None, name: str):
    if (inline is None) == (path is None):
        raise UsageError(f"give exactly one of --{name} and --{name}-file")
    if path is not None:
        try:
            with open(path) as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
    else:
        try:
            raw = json.loads(inline)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--{name} is not valid JSON: {exc}") from exc
    return ring.decode(raw)


def _default_form(ring: Ring, kind: InverseKind) -> Form:
    if kind in (InverseKind.CORE, InverseKind.DUAL_CORE) and not ring.is_finite:
        return Form.FIVE_EQ
    return Form.DEFINITIONAL


def _failure(exc: NotInvertible) -> dict:
    out = {"error": type(exc).__name__}
    out["because"] = getattr(exc, "because", None) or str(exc)
    if getattr(exc, "failed", None):
        out["failed"] = list(exc.failed)
    return out


def cmd_compute(args) -> int:
    ring = make_ring(args.ring)
    kind = KIND_ALIASES[args.kind]
    a = _element(ring, args.element, args.element_file, "element")
    form = Form(args.form) if args.form else _default_form(ring, kind)
    try:
        x = engine.compute(kind, a)
    except NotInvertible as exc:
        _emit({"ring": str(ring.descriptor), "kind": kind.value, "subject": a.to_json(),
               **_failure(exc)})
        return EXIT_NEGATIVE
    cert = engine.verify(kind, a, x, form)
    _emit({"ring": str(ring.descriptor), "kind": kind.value, "subject": a.to_json(),
           "result": x.to_json(), "certificate": cert.to_json()})
    return EXIT_OK if cert.valid else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    ring = make_ring(args.ring)
    if args.certificate:
        try:
            with open(args.certificate) as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.certificate}: {exc}") from exc
        obj = obj.get("certificate", obj)
        try:
            cert = engine.InverseCertificate.from_json(ring, obj)
        except (KeyError, ValueError) as exc:
            raise UsageError(f"not a certificate: {exc}") from exc
    else:
        if not args.kind:
            raise UsageError("--kind is required unless --certificate is given")
        kind = KIND_ALIASES[args.kind]
        a = _element(ring, args.a, args.a_file, "a")
        x = _element(ring, args.x, args.x_file, "x")
        form = Form(args.form) if args.form else _default_form(ring, kind)
        cert = engine.verify(kind, a, x, form)
    _emit(cert.to_json())
    return EXIT_OK if cert.valid else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    report = oracle.classify(make_ring(args.ring), jobs=args.jobs)
    if args.format == "table":
        sys.stdout.write(report.to_table())
    else:
        _emit(report.to_json())
    return EXIT_OK


def cmd_search(args) -> int:
    ring = make_ring(args.ring)
    kind = KIND_ALIASES[args.kind]
    a = _element(ring, args.element, args.element_file, "element")
    found = oracle.find_all(kind, a)
    _emit({"ring": str(ring.descriptor), "kind": kind.value, "subject": a.to_json(),
           "solutions": [x.to_json() for x in found]})
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_demo(args) -> int:
    report = corpus.run_scenario(args.scenario)
    if args.format == "json":
        _emit(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_NEGATIVE


SUMS = {
    "core": (engine.core_sum, "(1 - b^core b) a^core + b^core"),
    "dual": (engine.dual_core_sum, "a_core + b_core (1 - a a_core)"),
    "group": (engine.group_sum, "(1 - b b^#) a^# + b^# (1 - a a^#)"),
}


def cmd_sum(args) -> int:
    ring = make_ring(args.ring)
    a = _element(ring, args.a, args.a_file, "a")
    b = _element(ring, args.b, args.b_file, "b")
    fn, formula = SUMS[args.mode]
    head = {"ring": str(ring.descriptor), "mode": args.mode, "a": a.to_json(), "b": b.to_json()}
    try:
        result = fn(a, b)
    except PreconditionViolated as exc:
        _emit({**head, "error": "PreconditionViolated", "failed": list(exc.failed)})
        return EXIT_NEGATIVE
    _emit({**head, "formula": formula, "result": result.to_json()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ginv", description="Core, dual core, group, {1,3} and {1,4} inverses "
                                         "in rings with involution.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    kinds = sorted(KIND_ALIASES)
    forms = [f.value for f in Form]

    c = sub.add_parser("compute", help="compute an inverse and its certificate")
    c.add_argument("--ring", required=True)
    c.add_argument("--kind", required=True, choices=kinds)
    c.add_argument("--element")
    c.add_argument("--element-file")
    c.add_argument("--form", choices=forms)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="verify a candidate inverse")
    v.add_argument("--ring", required=True)
    v.add_argument("--kind", choices=kinds)
    v.add_argument("--form", choices=forms)
    v.add_argument("--a")
    v.add_argument("--a-file")
    v.add_argument("--x")
    v.add_argument("--x-file")
    v.add_argument("--certificate", help="certificate JSON or compute output to re-verify")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="classify every element of a finite ring")
    k.add_argument("--ring", required=True)
    k.add_argument("--format", choices=["json", "table"], default="json")
    k.add_argument("--jobs", type=int, default=1)
    k.set_defaults(func=cmd_classify)

    s = sub.add_parser("search", help="brute-force every inverse of an element")
    s.add_argument("--ring", required=True)
    s.add_argument("--kind", required=True, choices=kinds)
    s.add_argument("--element")
    s.add_argument("--element-file")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_search)

    d = sub.add_parser("demo", help="replay a scenario from the corpus")
    d.add_argument("scenario")
    d.add_argument("--format", choices=["text", "json"], default="text")
    d.set_defaults(func=cmd_demo)

    m = sub.add_parser("sum", help="inverse of a + b from the additive formulas")
    m.add_argument("--ring", required=True)
    m.add_argument("--mode", required=True, choices=sorted(SUMS))
    m.add_argument("--a")
    m.add_argument("--a-file")
    m.add_argument("--b")
    m.add_argument("--b-file")
    m.set_defaults(func=cmd_sum)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GinvError) as exc:
        print(f"ginv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
