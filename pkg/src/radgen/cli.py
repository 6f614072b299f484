"""``radgen`` command-line front end.

Exit status: 0 when every requested verdict holds, 1 when a verification
fails, 2 for usage or parse errors, 3 when a resource limit is hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .constructions import (
    ConditionError,
    LiftError,
    PartitionError,
    Prop1Input,
    laplace_sums,
    prop1_construct,
    square_identity,
    sv_combine,
    theorem1_construct,
)
from .field import parse_field
from .formats import (
    FormatError,
    parse_ideal_text,
    parse_matrix_json,
    parse_partition_text,
    parse_ring_text,
    read_source,
)
from .ideal import (
    ImproperIdealError,
    Limits,
    RadicalEquality,
    ResourceLimitError,
    dimension,
    groebner,
    ideal_member,
    intersect,
    radical_equal,
    radical_member,
)
from .paper_suite import FAMILY_CAP, UnknownCaseError, case_ids, certify_case
from .poly import ContextMismatch, ParseError, format_poly

log = logging.getLogger("radgen")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _field(args):
    return parse_field(args.field) if args.field else None


def _ideal(args, source: Optional[str]):
    if source is None:
        raise UsageError("an ideal is required (--ring FILE or inline text)")
    return parse_ideal_text(read_source(source), _field(args), args.order)


def _limits(args) -> Limits:
    return Limits(max_pairs=args.limit_pairs) if args.limit_pairs else Limits()


def _radeq_dict(eq: RadicalEquality) -> dict:
    return {
        "radical_equality": eq.equal,
        "forward": [c.to_dict() for c in eq.forward],
        "backward": [c.to_dict() for c in eq.backward],
        "counters": eq.counters().as_dict(),
    }


def _emit(args, payload: dict, lines: List[str]) -> None:
    if args.json:
        print(_dump(payload))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_parse(args) -> int:
    ctx = parse_ring_text(read_source(args.ring), _field(args), args.order)
    out = [format_poly(ctx.parse(e)) for e in args.expr]
    _emit(args, {"polynomials": out}, out)
    return EXIT_OK


def cmd_gb(args) -> int:
    ideal = _ideal(args, args.ring)
    gb = groebner(ideal, limits=_limits(args))
    payload = {
        "field": ideal.ctx.field.name,
        "order": gb.order,
        "variables": list(ideal.ctx.variables),
        "basis": gb.as_strings(),
        "counters": gb.counters.as_dict(),
    }
    _emit(args, payload, gb.as_strings())
    return EXIT_OK


def _membership(args, radical: bool) -> int:
    ideal = _ideal(args, args.ring)
    f = ideal.ctx.parse(args.poly)
    if radical:
        cert = radical_member(f, ideal, limits=_limits(args))
    else:
        cert = ideal_member(f, ideal, limits=_limits(args))
    _emit(args, cert.to_dict(), [cert.verdict])
    return EXIT_OK if cert.holds else EXIT_FAILED


def cmd_member(args) -> int:
    return _membership(args, radical=False)


def cmd_radmember(args) -> int:
    return _membership(args, radical=True)


def cmd_radequal(args) -> int:
    I = _ideal(args, args.ring)
    J = _ideal(args, args.other)
    eq = radical_equal(I, J, _limits(args))
    _emit(args, _radeq_dict(eq), ["equal" if eq.equal else "not equal"])
    return EXIT_OK if eq.equal else EXIT_FAILED


def cmd_intersect(args) -> int:
    I = _ideal(args, args.ring)
    J = _ideal(args, args.other)
    X = intersect(I, J, _limits(args))
    gens = [format_poly(g) for g in X]
    _emit(args, {"generators": gens}, gens)
    return EXIT_OK


def cmd_dim(args) -> int:
    ideal = _ideal(args, args.ring)
    d = dimension(ideal, limits=_limits(args))
    _emit(args, {"dimension": d, "nvars": ideal.ctx.nvars}, [str(d)])
    if args.expect is not None and d != args.expect:
        return EXIT_FAILED
    return EXIT_OK


def cmd_sv(args) -> int:
    if args.partition is None:
        raise UsageError("--partition is required")
    partition = parse_partition_text(read_source(args.partition), _field(args), args.order)
    if args.variant:
        partition.variant = args.variant
    result = sv_combine(partition, force=args.force, limits=_limits(args))
    gens = [format_poly(q) for q in result.generators]
    payload = {"generators": gens, "certified": result.certified, "forced": args.force}
    if result.certificate is not None:
        payload.update(_radeq_dict(result.certificate))
    lines = list(gens)
    lines.append("uncertified (forced)" if args.force else
                 ("certified" if result.certified else "certification FAILED"))
    _emit(args, payload, lines)
    return EXIT_OK if (args.force or result.certified) else EXIT_FAILED


def cmd_matrix(args) -> int:
    if args.input is None:
        raise UsageError("--input is required")
    ctx = parse_ring_text(read_source(args.ring), _field(args), args.order) if args.ring else None
    inp = parse_matrix_json(read_source(args.input), ctx, _field(args), args.order)
    mc = theorem1_construct(inp, certify=not args.force, limits=_limits(args))
    identity = square_identity(inp, mc).is_zero and all(s.is_zero for s in laplace_sums(inp, mc))
    payload = {
        "minors": [format_poly(d) for d in mc.minors],
        "p0": format_poly(mc.p0),
        "q": [format_poly(q) for q in mc.q],
        "square_identity": identity,
        "certified": mc.certified,
    }
    if mc.certificate is not None:
        payload.update(_radeq_dict(mc.certificate))
    lines = [f"Delta_{k} = {format_poly(d)}" for k, d in enumerate(mc.minors, 1)]
    lines.append(f"p0 = {format_poly(mc.p0)}")
    lines += [f"q{k} = {format_poly(q)}" for k, q in enumerate(mc.q, 1)]
    if not args.force:
        lines.append("certified" if mc.certified else "certification FAILED")
    _emit(args, payload, lines)
    ok = identity and (args.force or mc.certified)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_prop1(args) -> int:
    ctx = parse_ring_text(read_source(args.ring), _field(args), args.order)
    if not args.gamma:
        raise UsageError("at least one --gamma is required")
    p = ctx.parse
    inp = Prop1Input(p(args.alpha1), p(args.alpha2), p(args.beta1), p(args.beta2),
                     [p(g) for g in args.gamma])
    result = prop1_construct(inp, certify=not args.force, limits=_limits(args))
    gens = [format_poly(q) for q in result.generators]
    payload = {"generators": gens, "certified": result.certified}
    if result.certificate is not None:
        payload.update(_radeq_dict(result.certificate))
    lines = list(gens)
    if not args.force:
        lines.append("certified" if result.certified else "certification FAILED")
    _emit(args, payload, lines)
    return EXIT_OK if (args.force or result.certified) else EXIT_FAILED


def cmd_paper(args) -> int:
    if args.all:
        max_n = args.max_n or FAMILY_CAP
        ids = case_ids(max_n)
    elif args.case:
        ids = [args.case]
    else:
        raise UsageError("give --case ID or --all")
    field = _field(args)
    kwargs = {"order": args.order, "limits": _limits(args), "golden_dir": args.golden_dir}
    if field is not None:
        kwargs["field"] = field
    certs = []
    for cid in ids:
        if cid.startswith("in:") and not args.all:
            try:
                n = int(cid[3:])
            except ValueError:
                n = 0
            if n > FAMILY_CAP and not args.allow_large:
                raise UsageError(f"{cid} exceeds the default cap n <= {FAMILY_CAP}; pass --allow-large")
        log.info("certifying %s", cid)
        certs.append(certify_case(cid, **kwargs))
    if args.json:
        payload = certs[0].to_dict() if len(certs) == 1 and not args.all else \
            {"cases": [c.to_dict() for c in certs]}
        print(_dump(payload))
    else:
        for c in certs:
            status = "OK" if c.ok else "FAILED"
            print(f"[{status}] {c.case_id} ({c.field}, {c.order})")
            for g in c.generators:
                print(f"    {format_poly(g)}")
            for name, verdict in c.verdicts.items():
                extra = f" ({c.errors[name]})" if name in c.errors else ""
                print(f"    {name}: {verdict}{extra}")
    return EXIT_OK if all(c.ok for c in certs) else EXIT_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", help="Q or Fp:<prime>; overrides the ring header")
    common.add_argument("--order", default="grevlex", choices=["lex", "grevlex"])
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--force", action="store_true", help="emit constructions without certifying")
    common.add_argument("--limit-pairs", type=int, default=None, metavar="N",
                        help="abort Groebner runs after N S-pairs")
    common.add_argument("--golden-dir", default=None, metavar="DIR")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _Parser(prog="radgen", description="Generators up to radical, with certificates.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("parse", cmd_parse, "print polynomials canonically")
    p.add_argument("--ring", required=True)
    p.add_argument("expr", nargs="+")

    p = add("gb", cmd_gb, "reduced Groebner basis")
    p.add_argument("--ring")

    for name, fn in (("member", cmd_member), ("radmember", cmd_radmember)):
        p = add(name, fn, f"{name} test")
        p.add_argument("--ring")
        p.add_argument("--poly", required=True)

    for name, fn in (("radequal", cmd_radequal), ("intersect", cmd_intersect)):
        p = add(name, fn, name)
        p.add_argument("--ring")
        p.add_argument("--other", required=True)

    p = add("dim", cmd_dim, "Krull dimension of the quotient")
    p.add_argument("--ring")
    p.add_argument("--expect", type=int, default=None)

    p = add("sv", cmd_sv, "Schmitt-Vogel combination of a partition")
    p.add_argument("--partition")
    p.add_argument("--variant", choices=["lemma1", "lemma2"])

    p = add("matrix", cmd_matrix, "matrix criterion from JSON input")
    p.add_argument("--input")
    p.add_argument("--ring")

    p = add("prop1", cmd_prop1, "recursive construction for (a1*b1 + a2*b2) + (b1, b2)(gammas)")
    p.add_argument("--ring", required=True)
    for name in ("alpha1", "alpha2", "beta1", "beta2"):
        p.add_argument(f"--{name}", required=True)
    p.add_argument("--gamma", action="append", default=[])

    p = add("paper", cmd_paper, "certify the worked examples")
    p.add_argument("--case")
    p.add_argument("--all", action="store_true")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--allow-large", action="store_true")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a command is required")
        logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                            format="%(name)s: %(message)s")
        if args.golden_dir and not Path(args.golden_dir).is_dir():
            raise UsageError(f"golden dir {args.golden_dir!r} does not exist")
        return args.func(args)
    except UsageError as exc:
        return _fail("usage error", exc, EXIT_USAGE)
    except (ConditionError, LiftError) as exc:
        return _fail("verification failed", exc, EXIT_FAILED)
    except ResourceLimitError as exc:
        return _fail("resource limit", exc, EXIT_RESOURCE)
    except KeyError as exc:
        return _fail("error", exc.args[0] if exc.args else exc, EXIT_USAGE)
    except (ParseError, FormatError, UnknownCaseError, PartitionError, ContextMismatch,
            ImproperIdealError, ValueError) as exc:
        return _fail("error", exc, EXIT_USAGE)


def _fail(kind: str, exc, code: int) -> int:
    msg = " ".join(str(exc).split())
    print(f"radgen: {kind}: {msg}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
