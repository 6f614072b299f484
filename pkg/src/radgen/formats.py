"""Text and JSON input formats.

Ideal file::

    ring Q x1 x2 x3        # or: ring Fp:32003 x y z
    x1*x2 + x3
    x1^2

Partition file: the same header, then ``subset:`` blocks. An element line
may end with ``exp: <int>``; an optional ``variant: lemma1`` line selects
the stricter condition::

    ring Q x1 x2 x3 x4 x5 x6
    subset:
    x1*x6
    subset:
    x3*x6
    subset:
    x1*x2 + x3*x4
    x5*x6   exp: 2

Matrix-criterion input is JSON ``{"p": [...], "rows": [{"c": expr, "i": int}],
"alpha0": [...]}`` with an optional ``"ring"`` header string.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional, Tuple

from .constructions import MatrixCriterionInput, SvPartition
from .field import Field, parse_field
from .ideal import Ideal
from .poly import ParseError, RingContext, parse_poly


class FormatError(ValueError):
    """Malformed input file."""


def _lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def parse_header(line: str, field: Optional[Field] = None, order: str = "grevlex") -> RingContext:
    """Parse ``ring <field> <var1> <var2> ...``; ``field`` overrides the declared one."""
    parts = line.split()
    if len(parts) < 3 or parts[0] != "ring":
        raise FormatError(f"expected 'ring <field> <vars...>', got {line!r}")
    try:
        declared = parse_field(parts[1])
        return RingContext(field or declared, tuple(parts[2:]), order)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def _split_inline(source: str) -> str:
    return "\n".join(part.strip() for part in source.split(";"))


def read_source(source: str) -> str:
    """Contents of ``source`` if it names a file, else ``source`` with ``;`` as line breaks."""
    path = Path(source)
    if "\n" not in source and ";" not in source and path.is_file():
        return path.read_text()
    return _split_inline(source)


def _parse_expr(text: str, ctx: RingContext, no: int):
    try:
        return parse_poly(text, ctx)
    except ParseError as exc:
        raise type(exc)(f"line {no}: {exc}") from None


def parse_ideal_text(text: str, field: Optional[Field] = None, order: str = "grevlex") -> Ideal:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty ideal description")
    ctx = parse_header(lines[0][1], field, order)
    return Ideal(ctx, [_parse_expr(line, ctx, no) for no, line in lines[1:]])


def parse_ring_text(text: str, field: Optional[Field] = None, order: str = "grevlex") -> RingContext:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty ring description")
    return parse_header(lines[0][1], field, order)


def parse_partition_text(text: str, field: Optional[Field] = None,
                         order: str = "grevlex") -> SvPartition:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty partition description")
    ctx = parse_header(lines[0][1], field, order)
    subsets: List[list] = []
    exponents = {}
    variant = "lemma2"
    for no, line in lines[1:]:
        if line == "subset:":
            subsets.append([])
            continue
        if line.startswith("variant:"):
            variant = line[len("variant:"):].strip()
            continue
        if not subsets:
            raise FormatError(f"line {no}: element before the first 'subset:'")
        expr, sep, exp = line.partition("exp:")
        p = _parse_expr(expr.strip(), ctx, no)
        if sep:
            try:
                e = int(exp.strip())
            except ValueError:
                raise FormatError(f"line {no}: bad exponent {exp.strip()!r}") from None
            if p in exponents and exponents[p] != e:
                raise FormatError(f"line {no}: conflicting exponents for {p}")
            exponents[p] = e
        subsets[-1].append(p)
    try:
        return SvPartition(subsets, exponents, variant)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_matrix_json(text: str, ctx: Optional[RingContext] = None,
                      field: Optional[Field] = None, order: str = "grevlex") -> MatrixCriterionInput:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError("matrix input must be a JSON object")
    if "ring" in data:
        ctx = parse_header(data["ring"], field, order)
    if ctx is None:
        raise FormatError("matrix input needs a ring (JSON 'ring' key or --ring)")
    try:
        p = [ctx.parse(s) for s in data["p"]]
        rows = [(ctx.parse(r["c"]), int(r["i"])) for r in data["rows"]]
        alpha0 = [ctx.parse(s) for s in data["alpha0"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"matrix input missing or malformed field: {exc}") from None
    try:
        return MatrixCriterionInput(p, rows, alpha0)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_ideal_text(ideal: Ideal) -> str:
    header = " ".join(["ring", ideal.ctx.field.name, *ideal.ctx.variables])
    return "\n".join([header] + [str(g) for g in ideal]) + "\n"
