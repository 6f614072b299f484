"""Groebner bases and the ideal-theoretic queries built on them.

Everything here is exact. Radical membership goes through the Rabinowitsch
trick: ``f`` lies in the radical of ``I`` iff ``1`` lies in ``I + (1 - t*f)``
with ``t`` a fresh variable.
"""

from __future__ import annotations

import hashlib
import heapq
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .poly import (
    ContextMismatch,
    Monomial,
    Polynomial,
    RingContext,
    divides,
    format_poly,
    guard_mask,
    mono_lcm,
    pack,
    reduce_terms,
)


class ResourceLimitError(RuntimeError):
    """A Groebner computation exceeded its configured pair or basis budget."""


class ImproperIdealError(ValueError):
    """The ideal is the whole ring."""


@dataclass
class Limits:
    max_pairs: int = 200_000
    max_basis: int = 5_000


DEFAULT_LIMITS = Limits()


@dataclass
class Counters:
    """Work counters accumulated across Groebner computations."""

    groebner_runs: int = 0
    pairs: int = 0
    pairs_skipped: int = 0
    zero_reductions: int = 0

    def add(self, other: "Counters") -> None:
        self.groebner_runs += other.groebner_runs
        self.pairs += other.pairs
        self.pairs_skipped += other.pairs_skipped
        self.zero_reductions += other.zero_reductions

    def as_dict(self) -> dict:
        return {
            "groebner_runs": self.groebner_runs,
            "pairs": self.pairs,
            "pairs_skipped": self.pairs_skipped,
            "zero_reductions": self.zero_reductions,
        }


def _same_ring(a: RingContext, b: RingContext) -> None:
    if a.field != b.field or a.variables != b.variables:
        raise ContextMismatch(f"{a} vs {b}")


class Ideal:
    """A finite generator list in one ring. Zero generators are dropped."""

    def __init__(self, ctx: RingContext, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError(f"ideal generators must be polynomials, got {g!r}")
            if g.ctx != ctx:
                _same_ring(g.ctx, ctx)
                g = g.in_context(ctx)
            if not g.is_zero:
                gens.append(g)
        self.ctx = ctx
        self.generators: Tuple[Polynomial, ...] = tuple(gens)

    @classmethod
    def parse(cls, ctx: RingContext, texts: Iterable[str]) -> "Ideal":
        return cls(ctx, [ctx.parse(s) for s in texts])

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def __str__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")"

    def in_context(self, ctx: RingContext) -> "Ideal":
        return Ideal(ctx, [g.in_context(ctx) for g in self.generators])

    def __add__(self, other: "Ideal") -> "Ideal":
        _same_ring(self.ctx, other.ctx)
        return Ideal(self.ctx, self.generators + tuple(g.in_context(self.ctx) for g in other))

    def __mul__(self, other: "Ideal") -> "Ideal":
        _same_ring(self.ctx, other.ctx)
        return Ideal(self.ctx, [g * h.in_context(self.ctx) for g in self for h in other])

    def fingerprint(self) -> str:
        """SHA-256 over the ring and the canonical generator texts."""
        text = "|".join(
            [self.ctx.field.name, ",".join(self.ctx.variables), self.ctx.order]
            + [format_poly(g) for g in self.generators]
        )
        return hashlib.sha256(text.encode()).hexdigest()


class GroebnerBasis:
    """A Groebner basis of monic polynomials for ``ctx.order``."""

    def __init__(self, ctx: RingContext, polys: Sequence[Polynomial], reduced: bool = False,
                 counters: Optional[Counters] = None):
        self.ctx = ctx
        self.polys: Tuple[Polynomial, ...] = tuple(polys)
        self.reduced = reduced
        self.counters = counters or Counters()
        self._entries = None

    @property
    def order(self) -> str:
        return self.ctx.order

    @property
    def is_unit(self) -> bool:
        return any(g.is_constant for g in self.polys)

    def lms(self) -> List[Monomial]:
        return [g.lm for g in self.polys]

    def entries(self):
        if self._entries is None:
            self._entries = [_entry(g._terms) for g in self.polys]
        return self._entries

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ctx == other.ctx and self.polys == other.polys

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.polys))}], order={self.order!r})"

    def as_strings(self) -> List[str]:
        return [format_poly(g) for g in self.polys]

    def ideal(self) -> Ideal:
        return Ideal(self.ctx, self.polys)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def _entry(terms: Dict[Monomial, object]):
    # terms are monic and sorted; divisor entry (lm, 1/lc, tail)
    it = iter(terms.items())
    lm, lc = next(it)
    return lm, 1, list(it)


def _monic_sorted(ctx: RingContext, terms: Dict[Monomial, object]) -> Polynomial:
    p = Polynomial._raw(ctx, terms)
    return p.monic()


class _Buchberger:
    """Working state of one completion run."""

    def __init__(self, ctx: RingContext, limits: Limits, stop_on_unit: bool):
        self.ctx = ctx
        self.key = ctx.key
        self.mod = ctx.field.modulus
        self.limits = limits
        self.stop_on_unit = stop_on_unit
        self.polys: List[Polynomial] = []
        self.entries = []
        self.active: List[int] = []
        self.pairs: Dict[Tuple[int, int], Tuple[Monomial, int]] = {}
        self.guard = guard_mask(ctx.nvars)
        self.heap: list = []
        self.counters = Counters(groebner_runs=1)
        self.unit = False

    def reduce(self, terms: Dict[Monomial, object]) -> Dict[Monomial, object]:
        divisors = [self.entries[i] for i in self.active]
        return reduce_terms(terms, divisors, self.key, self.mod)

    def add(self, g: Polynomial, new_pairs: bool = True) -> None:
        ih = len(self.polys)
        self.polys.append(g)
        self.entries.append(_entry(g._terms))
        if g.is_constant:
            self.unit = True
        if len(self.active) >= self.limits.max_basis:
            raise ResourceLimitError(f"basis size exceeded {self.limits.max_basis}")
        if not new_pairs:
            self.active.append(ih)
            return
        self._update(ih)

    def _lm(self, i: int) -> Monomial:
        return self.entries[i][0]

    def _update(self, ih: int) -> None:
        # Gebauer-Moeller installation of the new element ih
        mh = self._lm(ih)
        G = self.guard
        by_lcm: Dict[Monomial, List[int]] = {}
        for ig in self.active:
            by_lcm.setdefault(mono_lcm(mh, self._lm(ig)), []).append(ig)
        # chain criterion on the new pairs: keep only minimal lcms, one pair each
        minimal: List[int] = []
        new = []
        dh = sum(mh)
        for L in sorted(by_lcm, key=sum):
            pl = pack(L) | G
            if any((pl - M) & G == G for M in minimal):
                continue
            minimal.append(pl ^ G)
            group = by_lcm[L]
            # coprime criterion: a pair with lcm == product needs no reduction
            dl = sum(L)
            if any(dl == dh + sum(self._lm(ig)) for ig in group):
                continue
            new.append((min(group), ih, L))
        self.counters.pairs_skipped += len(self.active) - len(new)

        # drop old pairs whose lcm is strictly divisible by the new leading monomial
        ph = pack(mh)
        dropped = []
        for pair, (L, pl) in self.pairs.items():
            if (pl - ph) & G == G:
                i, j = pair
                if mono_lcm(self._lm(i), mh) != L and mono_lcm(self._lm(j), mh) != L:
                    dropped.append(pair)
        for pair in dropped:
            del self.pairs[pair]
        self.counters.pairs_skipped += len(dropped)

        self.active = [ig for ig in self.active if (pack(self._lm(ig)) | G) - ph & G != G]
        self.active.append(ih)
        for i, j, L in new:
            self.pairs[(i, j)] = (L, pack(L) | G)
            # normal strategy: smallest lcm degree first, then the monomial order
            heapq.heappush(self.heap, (sum(L), self.key(L), (i, j)))

    def spoly(self, i: int, j: int) -> Dict[Monomial, object]:
        lmi, _, ti = self.entries[i]
        lmj, _, tj = self.entries[j]
        L = mono_lcm(lmi, lmj)
        si = tuple(a - b for a, b in zip(L, lmi))
        sj = tuple(a - b for a, b in zip(L, lmj))
        mod = self.mod
        out: Dict[Monomial, object] = {}
        for m, c in ti:
            out[tuple(a + b for a, b in zip(m, si))] = c
        for m, c in tj:
            nm = tuple(a + b for a, b in zip(m, sj))
            v = out.get(nm, 0) - c
            if mod is not None:
                v %= mod
            if v:
                out[nm] = v
            else:
                out.pop(nm, None)
        return out

    def run(self) -> None:
        limits = self.limits
        while self.heap and not (self.unit and self.stop_on_unit):
            _, _, pair = heapq.heappop(self.heap)
            if self.pairs.pop(pair, None) is None:
                continue
            self.counters.pairs += 1
            if self.counters.pairs > limits.max_pairs:
                raise ResourceLimitError(f"S-pair count exceeded {limits.max_pairs}")
            r = self.reduce(self.spoly(*pair))
            if not r:
                self.counters.zero_reductions += 1
                continue
            self.add(_monic_sorted(self.ctx, r))

    def basis(self) -> List[Polynomial]:
        if self.unit:
            return [self.ctx.one()]
        return [self.polys[i] for i in self.active]


def _prepare(ideal: Ideal, order: Optional[str]) -> Tuple[RingContext, List[Polynomial]]:
    ctx = ideal.ctx if order is None else ideal.ctx.with_order(order)
    return ctx, [g.in_context(ctx) for g in ideal.generators]


def buchberger(ideal: Ideal, order: Optional[str] = None, limits: Optional[Limits] = None,
               stop_on_unit: bool = False, base: Optional[GroebnerBasis] = None) -> GroebnerBasis:
    """Complete the generators of ``ideal`` to a Groebner basis.

    Pairs are selected by the normal strategy (smallest lcm first) and
    filtered with the coprime-leading-monomial and chain criteria. If
    ``base`` is given it must already be a Groebner basis in the same ring;
    only pairs involving the new generators are then formed. With
    ``stop_on_unit`` the run ends as soon as a nonzero constant appears and
    the result is ``{1}``.
    """
    ctx, gens = _prepare(ideal, order)
    state = _Buchberger(ctx, limits or DEFAULT_LIMITS, stop_on_unit)
    if base is not None:
        _same_ring(base.ctx, ctx)
        if base.ctx.order != ctx.order:
            raise ValueError("base basis has a different monomial order")
        for g in base.polys:
            state.add(g.monic(), new_pairs=False)
    for g in gens:
        if state.unit and stop_on_unit:
            break
        r = state.reduce(dict(g._terms)) if state.active else dict(g._terms)
        if r:
            state.add(_monic_sorted(ctx, r))
    state.run()
    return GroebnerBasis(ctx, state.basis(), reduced=False, counters=state.counters)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """Autoreduce to monic polynomials with no term divisible by another leading monomial.

    For a Groebner basis input this is the unique reduced basis. Elements
    are fully reduced before they are admitted, so a generating set that is
    not yet a Groebner basis is still inter-reduced rather than truncated.
    """
    ctx = gb.ctx
    key = ctx.key
    mod = ctx.field.modulus
    pending = sorted((g.monic() for g in gb.polys if not g.is_zero), key=lambda g: key(g.lm))
    minimal: List[Polynomial] = []
    while pending:
        g = pending.pop(0)
        if minimal:
            r = reduce_terms(dict(g._terms), [_entry(h._terms) for h in minimal], key, mod)
            if not r:
                continue
            g = Polynomial._raw(ctx, r).monic()
        bumped = [h for h in minimal if divides(g.lm, h.lm)]
        if bumped:
            minimal = [h for h in minimal if not divides(g.lm, h.lm)]
            pending = sorted(pending + bumped, key=lambda h: key(h.lm))
        minimal.append(g)
    if any(g.is_constant for g in minimal):
        return GroebnerBasis(ctx, [ctx.one()], reduced=True, counters=gb.counters)
    current = list(minimal)
    for i in range(len(current)):
        others = [_entry(h._terms) for j, h in enumerate(current) if j != i]
        g = current[i]
        lm, lc = g.lm, g.lc
        tail = dict(g._terms)
        del tail[lm]
        r = reduce_terms(tail, others, key, ctx.field.modulus)
        r[lm] = lc
        current[i] = Polynomial._raw(ctx, r).monic()
    current.sort(key=lambda g: key(g.lm), reverse=True)
    return GroebnerBasis(ctx, current, reduced=True, counters=gb.counters)


def groebner(ideal: Ideal, order: Optional[str] = None, limits: Optional[Limits] = None,
             stop_on_unit: bool = False, base: Optional[GroebnerBasis] = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal``."""
    return reduce_basis(buchberger(ideal, order, limits, stop_on_unit, base))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    _same_ring(f.ctx, gb.ctx)
    f = f.in_context(gb.ctx)
    if not gb.polys:
        return f
    r = reduce_terms(dict(f._terms), gb.entries(), gb.ctx.key, gb.ctx.field.modulus)
    return Polynomial._raw(gb.ctx, r)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two nonzero polynomials."""
    L = mono_lcm(f.lm, g.lm)
    F = f.ctx.field
    a = f.mul_term(tuple(x - y for x, y in zip(L, f.lm)), F.inv(f.lc))
    b = g.mul_term(tuple(x - y for x, y in zip(L, g.lm)), F.inv(g.lc))
    return a - b


def is_groebner(gb: GroebnerBasis) -> bool:
    """Check that every S-polynomial of basis pairs reduces to zero."""
    polys = gb.polys
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not normal_form(spoly(polys[i], polys[j]), gb).is_zero:
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    lms = gb.lms()
    for i, g in enumerate(gb.polys):
        if g.lc != g.ctx.field.one:
            return False
        for m in g.monomials():
            if any(divides(lm, m) for j, lm in enumerate(lms) if j != i):
                return False
    return True


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

MEMBER = "member"
RADICAL_MEMBER = "radical-member"
NON_MEMBER = "non-member"


@dataclass
class MembershipCertificate:
    """Record of one (radical) membership decision.

    For ideal membership ``witness_basis`` is the reduced basis of the target
    ideal and ``normal_form`` the remainder of the query. For radical
    membership ``witness_basis`` is the reduced basis of the augmented ideal
    ``I + (1 - t*f)`` in the ring extended by ``fresh_variable``; it equals
    ``{1}`` exactly when the verdict is positive.
    """

    kind: str
    query: Polynomial
    ideal: Ideal
    verdict: str
    order: str
    witness_basis: Tuple[Polynomial, ...]
    normal_form: Optional[Polynomial] = None
    fresh_variable: Optional[str] = None
    counters: Counters = field(default_factory=Counters)

    @property
    def holds(self) -> bool:
        return self.verdict != NON_MEMBER

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "query": format_poly(self.query),
            "ideal_hash": self.ideal.fingerprint(),
            "verdict": self.verdict,
            "order": self.order,
            "witness_basis": [format_poly(g) for g in self.witness_basis],
        }
        if self.normal_form is not None:
            d["normal_form"] = format_poly(self.normal_form)
        if self.fresh_variable is not None:
            d["fresh_variable"] = self.fresh_variable
        return d

    def replay(self, limits: Optional[Limits] = None) -> bool:
        """Recompute from scratch and confirm the recorded verdict."""
        fn = ideal_member if self.kind == "ideal" else radical_member
        again = fn(self.query, self.ideal, limits=limits)
        return again.verdict == self.verdict and again.witness_basis == self.witness_basis

    def recheck(self) -> bool:
        """Check the stored witness without running Buchberger.

        Confirms the witness basis is a Groebner basis containing every
        generator of the (augmented) ideal and that it decides the query as
        recorded. It does not re-derive that the basis lies in the ideal.
        """
        gb_ctx = self.witness_basis[0].ctx if self.witness_basis else self.ideal.ctx
        gb = GroebnerBasis(gb_ctx, self.witness_basis, reduced=True)
        if not is_groebner(gb):
            return False
        if self.kind == "ideal":
            gens = list(self.ideal.generators)
            if not all(normal_form(g, gb).is_zero for g in gens):
                return False
            nf = normal_form(self.query, gb)
            return nf == self.normal_form and (nf.is_zero == (self.verdict == MEMBER))
        ext = gb_ctx
        t = ext.gen(self.fresh_variable)
        gens = [g.in_context(ext) for g in self.ideal.generators]
        gens.append(1 - t * self.query.in_context(ext))
        if not all(normal_form(g, gb).is_zero for g in gens):
            return False
        return gb.is_unit == (self.verdict == RADICAL_MEMBER)


def _gb_for(ideal: Ideal, gb: Optional[GroebnerBasis], limits: Optional[Limits]) -> GroebnerBasis:
    if gb is not None:
        return gb
    return groebner(ideal, limits=limits)


def ideal_member(f: Polynomial, ideal: Ideal, gb: Optional[GroebnerBasis] = None,
                 limits: Optional[Limits] = None) -> MembershipCertificate:
    """Decide ``f in ideal`` by reducing modulo the reduced Groebner basis."""
    _same_ring(f.ctx, ideal.ctx)
    f = f.in_context(ideal.ctx)
    gb = _gb_for(ideal, gb, limits)
    nf = normal_form(f, gb)
    return MembershipCertificate(
        kind="ideal",
        query=f,
        ideal=ideal,
        verdict=MEMBER if nf.is_zero else NON_MEMBER,
        order=gb.order,
        witness_basis=gb.polys,
        normal_form=nf,
        counters=gb.counters,
    )


def rabinowitsch_ring(ctx: RingContext) -> RingContext:
    t = ctx.fresh_name("t")
    return RingContext(ctx.field, ctx.variables + (t,), ctx.order)


def radical_member(f: Polynomial, ideal: Ideal, limits: Optional[Limits] = None,
                   base: Optional[GroebnerBasis] = None) -> MembershipCertificate:
    """Decide ``f in sqrt(ideal)`` with the Rabinowitsch trick.

    ``base`` may be a Groebner basis of ``ideal`` already embedded in
    :func:`rabinowitsch_ring`; it saves recomputing the pairs among the
    original generators.
    """
    _same_ring(f.ctx, ideal.ctx)
    f = f.in_context(ideal.ctx)
    ext = rabinowitsch_ring(ideal.ctx)
    t_name = ext.variables[-1]
    t = ext.gen(t_name)
    aug = 1 - t * f.in_context(ext)
    if base is None:
        gens = [g.in_context(ext) for g in ideal.generators] + [aug]
        gb = groebner(Ideal(ext, gens), limits=limits, stop_on_unit=True)
    else:
        gb = groebner(Ideal(ext, [aug]), limits=limits, stop_on_unit=True, base=base)
    return MembershipCertificate(
        kind="radical",
        query=f,
        ideal=ideal,
        verdict=RADICAL_MEMBER if gb.is_unit else NON_MEMBER,
        order=ext.order,
        witness_basis=gb.polys,
        fresh_variable=t_name,
        counters=gb.counters,
    )


class RadicalMembershipTester:
    """Answers repeated radical-membership queries against one ideal.

    The Groebner basis of the ideal is computed once in the extended ring and
    reused as the starting point of every Rabinowitsch completion.
    """

    def __init__(self, ideal: Ideal, limits: Optional[Limits] = None):
        self.ideal = ideal
        self.limits = limits
        self.ext = rabinowitsch_ring(ideal.ctx)
        self.base = groebner(ideal.in_context(self.ext), limits=limits)

    def __call__(self, f: Polynomial) -> MembershipCertificate:
        return radical_member(f, self.ideal, limits=self.limits, base=self.base)


@dataclass
class RadicalEquality:
    """Outcome of comparing two radicals generator by generator."""

    equal: bool
    forward: List[MembershipCertificate]
    backward: List[MembershipCertificate]

    def __bool__(self):
        return self.equal

    @property
    def certificates(self) -> List[MembershipCertificate]:
        return self.forward + self.backward

    def counters(self) -> Counters:
        total = Counters()
        for c in self.certificates:
            total.add(c.counters)
        return total


def radical_equal(I: Ideal, J: Ideal, limits: Optional[Limits] = None) -> RadicalEquality:
    """Check ``sqrt(I) == sqrt(J)``.

    ``forward`` certifies each generator of ``I`` in ``sqrt(J)``, ``backward``
    each generator of ``J`` in ``sqrt(I)``.
    """
    _same_ring(I.ctx, J.ctx)
    J = J.in_context(I.ctx)
    in_J = RadicalMembershipTester(J, limits)
    in_I = RadicalMembershipTester(I, limits)
    forward = [in_J(g) for g in I.generators]
    backward = [in_I(g) for g in J.generators]
    ok = all(c.holds for c in forward) and all(c.holds for c in backward)
    return RadicalEquality(ok, forward, backward)


def ideals_equal(I: Ideal, J: Ideal, limits: Optional[Limits] = None) -> bool:
    """Exact equality by mutual generator membership."""
    _same_ring(I.ctx, J.ctx)
    J = J.in_context(I.ctx)
    gi = groebner(I, limits=limits)
    gj = groebner(J, limits=limits)
    return all(gj.contains(g) for g in I) and all(gi.contains(g) for g in J)


# ---------------------------------------------------------------------------
# elimination, intersection, dimension
# ---------------------------------------------------------------------------

def eliminate(ideal: Ideal, variables: Sequence, limits: Optional[Limits] = None) -> Ideal:
    """Generators of ``ideal`` intersected with the subring of the other variables.

    ``variables`` are names or indices. The computation runs in lex with the
    eliminated variables placed first; the result is expressed in the
    original ring.
    """
    ctx = ideal.ctx
    names = [ctx.variables[v] if isinstance(v, int) else v for v in variables]
    for v in names:
        ctx.index(v)
    rest = [v for v in ctx.variables if v not in names]
    elim_ctx = RingContext(ctx.field, tuple(names) + tuple(rest), "lex")
    gb = groebner(ideal.in_context(elim_ctx), limits=limits)
    k = len(names)
    kept = [g for g in gb.polys if not any(i < k for i in g.variables_used())]
    out = sorted((g.in_context(ctx) for g in kept), key=lambda g: ctx.key(g.lm), reverse=True)
    return Ideal(ctx, out)


def intersect(I: Ideal, J: Ideal, limits: Optional[Limits] = None) -> Ideal:
    """Generators of ``I ∩ J``: eliminate ``t`` from ``t*I + (1 - t)*J``."""
    _same_ring(I.ctx, J.ctx)
    ctx = I.ctx
    t_name = ctx.fresh_name("t")
    ext = RingContext(ctx.field, (t_name,) + ctx.variables, ctx.order)
    t = ext.gen(t_name)
    gens = [t * g.in_context(ext) for g in I] + [(1 - t) * h.in_context(ext) for h in J]
    return eliminate(Ideal(ext, gens), [t_name], limits).in_context(ctx)


def dimension(ideal: Ideal, gb: Optional[GroebnerBasis] = None,
              limits: Optional[Limits] = None) -> int:
    """Krull dimension of ``R/ideal``.

    Computed as the largest set ``S`` of variables such that no leading
    monomial of the reduced basis is supported inside ``S``.
    """
    gb = _gb_for(ideal, gb, limits)
    if gb.is_unit:
        raise ImproperIdealError("the unit ideal has no dimension")
    n = ideal.ctx.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gb.lms()]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0
