"""Registry of the worked ideals and their certification.

Case ids: ``example1``, ``example2``, ``j6`` and ``in:<n>`` for ``n >= 5``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from .constructions import (
    LiftError,
    Prop1Input,
    SvPartition,
    corollary1,
    prop1_construct,
    sv_combine,
)
from .field import QQ, Field
from .ideal import (
    Counters,
    Ideal,
    Limits,
    MembershipCertificate,
    ResourceLimitError,
    dimension,
    groebner,
    intersect,
    radical_equal,
)
from .poly import Polynomial, RingContext, format_poly

FAMILY_CAP = 8

UNCHECKED = "paper, cohomological argument, not machine-checked"


class UnknownCaseError(ValueError):
    pass


@dataclass
class Recipe:
    """Which construction to run and on what."""

    kind: str  # "sv" | "corollary1" | "prop1"
    partition: Optional[SvPartition] = None
    prop1: Optional[Prop1Input] = None


@dataclass
class PaperCase:
    case_id: str
    ctx: RingContext
    ideal: Ideal
    components: List[Ideal]
    claimed_dimension: int
    recipe: Recipe
    expected_count: int
    golden: Optional[List[Polynomial]] = None
    claimed_lower_bound: Optional[dict] = None


def case_ids(max_n: int = FAMILY_CAP) -> List[str]:
    return ["example1", "example2", "j6"] + [f"in:{n}" for n in range(5, max_n + 1)]


def _golden_file(case_id: str) -> str:
    return case_id.replace(":", "_") + ".txt"


def load_golden(case_id: str, ctx: RingContext,
                golden_dir: Optional[Union[str, Path]] = None) -> Optional[List[Polynomial]]:
    """Golden polynomials for a case, or ``None`` if no fixture exists.

    Fixtures hold one polynomial per line; ``#`` starts a comment.
    """
    name = _golden_file(case_id)
    if golden_dir is not None:
        path = Path(golden_dir) / name
        if not path.exists():
            return None
        text = path.read_text()
    else:
        res = resources.files("radgen") / "golden" / name
        if not res.is_file():
            return None
        text = res.read_text()
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    return [ctx.parse(ln) for ln in lines if ln]


def _family(n: int, field: Field, order: str):
    ctx = RingContext.standard(n, field, order)
    x = (None,) + ctx.gens()
    binom = x[1] * x[2] + x[3] * x[4]
    gens = [binom] + [x[1] * x[j] for j in range(5, n + 1)] + [x[3] * x[j] for j in range(5, n + 1)]
    components = [
        Ideal(ctx, [binom] + [x[j] for j in range(5, n + 1)]),
        Ideal(ctx, [x[1], x[3]]),
    ]
    recipe = Recipe("prop1", prop1=Prop1Input(x[2], x[4], x[1], x[3], [x[j] for j in range(5, n + 1)]))
    return ctx, x, Ideal(ctx, gens), components, recipe


def build_case(case_id: str, field: Field = QQ, order: str = "grevlex",
               golden_dir: Optional[Union[str, Path]] = None) -> PaperCase:
    """Assemble the ring, ideal, claimed decomposition and recipe for ``case_id``."""
    if case_id == "example1":
        ctx = RingContext.standard(6, field, order)
        x = (None,) + ctx.gens()
        binom = x[1] * x[2] + x[3] * x[4]
        ideal = Ideal(ctx, [binom, x[1] * x[6], x[3] * x[6], x[5] * x[6]])
        components = [Ideal(ctx, [binom, x[6]]), Ideal(ctx, [x[1], x[3], x[5]])]
        partition = SvPartition([[x[1] * x[6]], [x[3] * x[6]], [binom, x[5] * x[6]]])
        case = PaperCase(case_id, ctx, ideal, components, 4, Recipe("sv", partition=partition), 3,
                         claimed_lower_bound={"ara": 3, "provenance": UNCHECKED})
    elif case_id == "example2":
        ctx, x, ideal, components, recipe = _family(5, field, order)
        recipe = Recipe("corollary1", prop1=recipe.prop1)
        case = PaperCase(case_id, ctx, ideal, components, 3, recipe, 2,
                         claimed_lower_bound={"ara": 2, "provenance": "height, checked via dimension"})
    elif case_id == "j6":
        ctx, x, ideal, components, recipe = _family(6, field, order)
        case = PaperCase(case_id, ctx, ideal, components, 4, recipe, 3)
    elif case_id.startswith("in:"):
        try:
            n = int(case_id[3:])
        except ValueError:
            raise UnknownCaseError(f"bad family index in {case_id!r}") from None
        if n < 5:
            raise UnknownCaseError(f"the family starts at n = 5, got {n}")
        ctx, x, ideal, components, recipe = _family(n, field, order)
        case = PaperCase(case_id, ctx, ideal, components, n - 2, recipe, n - 3,
                         claimed_lower_bound={"ara": n - 3, "provenance": UNCHECKED})
    else:
        raise UnknownCaseError(f"unknown case {case_id!r}")
    case.golden = load_golden(case_id, case.ctx, golden_dir)
    return case


@dataclass
class DecompositionReport:
    ok: bool
    intersection: Ideal
    not_in_ideal: List[Polynomial]
    not_in_intersection: List[Polynomial]

    def __bool__(self):
        return self.ok


def verify_decomposition(ideal: Ideal, components: Sequence[Ideal],
                         limits: Optional[Limits] = None) -> DecompositionReport:
    """Check ``ideal == intersection of components`` exactly (not up to radical)."""
    if not components:
        raise ValueError("need at least one component")
    inter = components[0].in_context(ideal.ctx)
    for comp in components[1:]:
        inter = intersect(inter, comp.in_context(ideal.ctx), limits)
    gb_i = groebner(ideal, limits=limits)
    gb_x = groebner(inter, limits=limits)
    not_in_ideal = [g for g in inter if not gb_i.contains(g)]
    not_in_inter = [g for g in ideal if not gb_x.contains(g)]
    return DecompositionReport(not (not_in_ideal or not_in_inter), inter, not_in_ideal, not_in_inter)


@dataclass
class Certificate:
    case_id: str
    field: str
    order: str
    generators: List[Polynomial]
    verdicts: Dict[str, bool]
    witnesses: List[MembershipCertificate] = field(default_factory=list)
    counters: Counters = field(default_factory=Counters)
    claims: dict = field(default_factory=dict)
    errors: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "field": self.field,
            "order": self.order,
            "generators": [format_poly(g) for g in self.generators],
            "verdicts": dict(self.verdicts),
            "membership_witnesses": [w.to_dict() for w in self.witnesses],
            "counters": self.counters.as_dict(),
            "claims": self.claims,
            "errors": dict(self.errors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def replay(self) -> bool:
        """Recompute every membership witness and confirm its verdict."""
        return all(w.replay() for w in self.witnesses)


def run_recipe(case: PaperCase, limits: Optional[Limits] = None) -> List[Polynomial]:
    r = case.recipe
    if r.kind == "sv":
        return sv_combine(r.partition, certify=False, limits=limits).generators
    if r.kind == "corollary1":
        p = r.prop1
        return list(corollary1(p.a1, p.a2, p.b1, p.b2, p.gammas[0], certify=False))
    if r.kind == "prop1":
        return prop1_construct(r.prop1, certify=False, limits=limits).generators
    raise ValueError(f"unknown recipe {r.kind!r}")


def certify_case(case_id: Union[str, PaperCase], field: Field = QQ, order: str = "grevlex",
                 limits: Optional[Limits] = None,
                 golden_dir: Optional[Union[str, Path]] = None) -> Certificate:
    """Run a case's recipe and check every claim attached to it.

    Failures are recorded per claim in ``verdicts`` and ``errors``; only an
    unknown case id raises.
    """
    case = case_id if isinstance(case_id, PaperCase) else build_case(case_id, field, order, golden_dir)
    ctx = case.ctx
    cert = Certificate(case.case_id, ctx.field.name, ctx.order, [], {})
    if case.claimed_lower_bound:
        cert.claims["claimed_lower_bound"] = case.claimed_lower_bound
    cert.claims["claimed_dimension"] = case.claimed_dimension
    cert.claims["claimed_height"] = ctx.nvars - case.claimed_dimension

    def attempt(name, fn):
        try:
            cert.verdicts[name] = bool(fn())
        except (ResourceLimitError, LiftError, ArithmeticError, ValueError) as exc:
            cert.verdicts[name] = False
            cert.errors[name] = f"{type(exc).__name__}: {exc}"

    def construct():
        cert.generators = run_recipe(case, limits)
        return len(cert.generators) == case.expected_count

    attempt("construction", construct)
    if case.golden is not None:
        attempt("golden", lambda: cert.generators == case.golden)
    if case.recipe.kind in ("prop1", "corollary1"):
        p = case.recipe.prop1

        def in_beta():
            gb = groebner(Ideal(ctx, [p.b1, p.b2]), limits=limits)
            return bool(cert.generators) and all(gb.contains(g) for g in cert.generators)

        attempt("in_beta_ideal", in_beta)

    def radical():
        if not cert.generators:
            return False
        eq = radical_equal(case.ideal, Ideal(ctx, cert.generators), limits)
        cert.witnesses = eq.certificates
        cert.counters.add(eq.counters())
        return eq.equal

    attempt("radical_equality", radical)
    if case.components:
        attempt("decomposition", lambda: verify_decomposition(case.ideal, case.components, limits).ok)
    attempt("dimension", lambda: dimension(case.ideal, limits=limits) == case.claimed_dimension)
    return cert
