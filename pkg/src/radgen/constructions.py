"""Constructions of small generating sets up to radical.

Three procedures live here:

* Schmitt-Vogel combination: a partition ``P_0, ..., P_r`` of a generator set
  is collapsed to the sums ``q_l = sum(p**e(p) for p in P_l)``;
* the matrix criterion: ``n + 1`` generators ``p_0, c_k*p_{i_k}`` are replaced
  by ``n`` combinations ``q_k = a_k*p_0 + c_k*p_{i_k}``;
* the recursive construction for ``(a1*b1 + a2*b2) + (b1, b2)(g_1, ..., g_m)``.

Every construction can certify its output by radical equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .ideal import (
    Ideal,
    Limits,
    RadicalEquality,
    ResourceLimitError,
    RadicalMembershipTester,
    groebner,
    ideal_member,
    radical_equal,
)
from .poly import ContextMismatch, Polynomial, RingContext, divide_multi


class PartitionError(ValueError):
    """A partition violates its structural invariants."""


class ConditionError(ValueError):
    """The hypotheses of a construction are not satisfied."""


class LiftError(ArithmeticError):
    """A polynomial expected in (b1, b2) could not be written in terms of them."""


def _check_ctx(polys: Sequence[Polynomial]) -> RingContext:
    ctx = None
    for p in polys:
        if not isinstance(p, Polynomial):
            raise TypeError(f"expected a polynomial, got {p!r}")
        if ctx is None:
            ctx = p.ctx
        elif p.ctx != ctx:
            raise ContextMismatch(f"{ctx} vs {p.ctx}")
    return ctx


# ---------------------------------------------------------------------------
# Schmitt-Vogel
# ---------------------------------------------------------------------------

@dataclass
class SvPartition:
    """Subsets ``P_0, ..., P_r`` with an exponent for each element.

    ``variant`` selects the condition checked before combining: ``"lemma1"``
    asks for divisibility by a single earlier element, ``"lemma2"`` only for a
    power of the product to lie in the ideal of all earlier elements.
    """

    subsets: List[List[Polynomial]]
    exponents: Dict[Polynomial, int] = field(default_factory=dict)
    variant: str = "lemma2"

    def __post_init__(self):
        self.subsets = [list(s) for s in self.subsets]
        if not self.subsets:
            raise PartitionError("a partition needs at least one subset")
        if len(self.subsets[0]) != 1:
            raise PartitionError("P_0 must have exactly one element")
        if any(not s for s in self.subsets):
            raise PartitionError("empty subset in partition")
        for s in self.subsets:
            if len(set(s)) != len(s):
                raise PartitionError("repeated element inside a subset")
        if self.variant not in ("lemma1", "lemma2"):
            raise PartitionError(f"unknown variant {self.variant!r}")
        elements = [p for s in self.subsets for p in s]
        self.ctx = _check_ctx(elements)
        if any(p.is_zero for p in elements):
            raise PartitionError("zero polynomial in partition")
        for p, e in self.exponents.items():
            if not isinstance(e, int) or e < 1:
                raise PartitionError(f"exponent of {p} must be a positive integer, got {e!r}")

    @property
    def r(self) -> int:
        return len(self.subsets) - 1

    def exponent(self, p: Polynomial) -> int:
        return self.exponents.get(p, 1)

    def elements(self) -> List[Polynomial]:
        """The generating set ``P``: union of all subsets, first occurrence order."""
        seen, out = set(), []
        for s in self.subsets:
            for p in s:
                if p not in seen:
                    seen.add(p)
                    out.append(p)
        return out

    def ideal(self) -> Ideal:
        return Ideal(self.ctx, self.elements())

    def check_generates(self, ideal: Ideal) -> bool:
        """True if the union of the subsets is exactly the generator set of ``ideal``."""
        return set(self.elements()) == set(g.in_context(self.ctx) for g in ideal)


@dataclass(frozen=True)
class Violation:
    level: int
    p: Polynomial
    other: Polynomial

    def __str__(self):
        return f"P_{self.level}: ({self.p})*({self.other})"


@dataclass
class ConditionReport:
    ok: bool
    violations: List[Violation]

    def __bool__(self):
        return self.ok


def check_sv_lemma1(partition: SvPartition, limits: Optional[Limits] = None) -> ConditionReport:
    """Each product of two elements of ``P_l`` lies in ``(p')`` for one earlier ``p'``."""
    ctx = partition.ctx
    earlier: List[Polynomial] = []
    principal = {}
    violations = []
    for level, subset in enumerate(partition.subsets):
        if level:
            for p, q in combinations(subset, 2):
                prod = p * q
                for g in earlier:
                    if g not in principal:
                        principal[g] = groebner(Ideal(ctx, [g]), limits=limits)
                    if ideal_member(prod, principal[g].ideal(), gb=principal[g]).holds:
                        break
                else:
                    violations.append(Violation(level, p, q))
        earlier.extend(subset)
    return ConditionReport(not violations, violations)


def check_sv_lemma2(partition: SvPartition, limits: Optional[Limits] = None) -> ConditionReport:
    """Each product of two elements of ``P_l`` lies in the radical of all earlier elements."""
    ctx = partition.ctx
    earlier: List[Polynomial] = []
    violations = []
    for level, subset in enumerate(partition.subsets):
        if level and len(subset) > 1:
            tester = RadicalMembershipTester(Ideal(ctx, earlier), limits)
            for p, q in combinations(subset, 2):
                if not tester(p * q).holds:
                    violations.append(Violation(level, p, q))
        earlier.extend(subset)
    return ConditionReport(not violations, violations)


@dataclass
class SvCombination:
    generators: List[Polynomial]
    condition: Optional[ConditionReport]
    certificate: Optional[RadicalEquality]

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.equal


def sv_combine(partition: SvPartition, force: bool = False, certify: bool = True,
               limits: Optional[Limits] = None) -> SvCombination:
    """Sum each subset's powers into one generator and certify the result.

    The variant's condition is checked first and a failure raises
    :class:`ConditionError`. ``force`` skips the check and the
    certification; ``certify=False`` keeps the check but skips the
    radical-equality certificate.
    """
    condition = None
    if not force:
        check = check_sv_lemma1 if partition.variant == "lemma1" else check_sv_lemma2
        condition = check(partition, limits)
        if not condition.ok:
            bad = "; ".join(map(str, condition.violations))
            raise ConditionError(f"{partition.variant} condition fails: {bad}")
    ctx = partition.ctx
    qs = []
    for subset in partition.subsets:
        q = ctx.zero()
        for p in subset:
            q = q + p ** partition.exponent(p)
        qs.append(q)
    cert = None
    if certify and not force:
        cert = radical_equal(partition.ideal(), Ideal(ctx, qs), limits)
    return SvCombination(qs, condition, cert)


# ---------------------------------------------------------------------------
# matrix criterion
# ---------------------------------------------------------------------------

@dataclass
class MatrixCriterionInput:
    """Rows ``c_k * e_{i_k}`` of an ``n x (n-1)`` matrix plus weights ``alpha0[k]``.

    ``p`` holds ``p_1, ..., p_{n-1}``; column indices in ``rows`` are 1-based.
    """

    p: List[Polynomial]
    rows: List[Tuple[Polynomial, int]]
    alpha0: List[Polynomial]

    def __post_init__(self):
        n = len(self.rows)
        if n < 2:
            raise ValueError("the matrix needs at least two rows")
        if len(self.p) != n - 1:
            raise ValueError(f"expected {n - 1} polynomials p_j for {n} rows, got {len(self.p)}")
        if len(self.alpha0) != n:
            raise ValueError(f"expected {n} weights alpha0, got {len(self.alpha0)}")
        for c, i in self.rows:
            if not (1 <= i <= n - 1):
                raise ValueError(f"column index {i} outside 1..{n - 1}")
        self.ctx = _check_ctx(list(self.p) + [c for c, _ in self.rows] + list(self.alpha0))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, k: int, j: int) -> Polynomial:
        """Matrix entry at 0-based row ``k`` and 1-based column ``j``."""
        c, i = self.rows[k]
        return c if i == j else self.ctx.zero()


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def minors(inp: MatrixCriterionInput) -> List[Polynomial]:
    """``Delta_k``: determinant after deleting row ``k``.

    Every row has one nonzero entry, so a minor is nonzero only when the
    remaining column indices are a permutation of ``1..n-1``; it is then the
    signed product of the remaining ``c_j``.
    """
    ctx = inp.ctx
    n = inp.n
    out = []
    for k in range(n):
        cols = [i for j, (_, i) in enumerate(inp.rows) if j != k]
        if sorted(cols) != list(range(1, n)):
            out.append(ctx.zero())
            continue
        prod = ctx.constant(_permutation_sign(cols))
        for j, (c, _) in enumerate(inp.rows):
            if j != k:
                prod = prod * c
        out.append(prod)
    return out


@dataclass
class MatrixConstruction:
    minors: List[Polynomial]
    p0: Polynomial
    q: List[Polynomial]
    source: Ideal
    certificate: Optional[RadicalEquality] = None

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.equal


def _alt(k: int) -> int:
    # (-1)^k for the 1-based row number k
    return -1 if k % 2 else 1


def theorem1_construct(inp: MatrixCriterionInput, certify: bool = True,
                       limits: Optional[Limits] = None) -> MatrixConstruction:
    """Build ``p_0`` and ``q_1..q_n`` from the matrix input.

    ``p_0 = sum((-1)^k * alpha0[k] * Delta_k)`` and
    ``q_k = alpha0[k]*p_0 + c_k*p_{i_k}``. With ``certify`` the radical
    equality ``(p_0, c_k*p_{i_k}) ~ (q_1..q_n)`` is checked and attached.
    """
    ctx = inp.ctx
    deltas = minors(inp)
    p0 = ctx.zero()
    for k in range(1, inp.n + 1):
        p0 = p0 + _alt(k) * inp.alpha0[k - 1] * deltas[k - 1]
    qs = [a * p0 + c * inp.p[i - 1] for a, (c, i) in zip(inp.alpha0, inp.rows)]
    source = Ideal(ctx, [p0] + [c * inp.p[i - 1] for c, i in inp.rows])
    cert = radical_equal(source, Ideal(ctx, qs), limits) if certify else None
    return MatrixConstruction(deltas, p0, qs, source, cert)


def square_identity(inp: MatrixCriterionInput, mc: MatrixConstruction) -> Polynomial:
    """``sum((-1)^k * Delta_k * q_k) - p_0**2``; identically zero."""
    total = inp.ctx.zero()
    for k in range(1, inp.n + 1):
        total = total + _alt(k) * mc.minors[k - 1] * mc.q[k - 1]
    return total - mc.p0 ** 2


def laplace_sums(inp: MatrixCriterionInput, mc: MatrixConstruction) -> List[Polynomial]:
    """Per-column sums ``sum((-1)^k * Delta_k * A[k][j])``; all vanish."""
    out = []
    for j in range(1, inp.n):
        s = inp.ctx.zero()
        for k in range(1, inp.n + 1):
            s = s + _alt(k) * mc.minors[k - 1] * inp.entry(k - 1, j)
        out.append(s)
    return out


@dataclass
class TwoGenerators:
    q1: Polynomial
    q2: Polynomial
    certificate: Optional[RadicalEquality] = None

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.equal

    def __iter__(self):
        return iter((self.q1, self.q2))


def corollary1(a1: Polynomial, a2: Polynomial, b1: Polynomial, b2: Polynomial, g: Polynomial,
               certify: bool = True, limits: Optional[Limits] = None) -> TwoGenerators:
    """Two generators for ``sqrt(a1*b1 + a2*b2, b1*g, b2*g)``.

    This is the matrix criterion with ``n = 2``, ``p_1 = g``, rows
    ``(b2, 1), (-b1, 1)`` and weights ``(a1, a2)``, giving
    ``q1 = a1*p0 + b2*g`` and ``q2 = a2*p0 - b1*g`` with ``p0 = a1*b1 + a2*b2``.
    """
    _check_ctx([a1, a2, b1, b2, g])
    inp = MatrixCriterionInput(p=[g], rows=[(b2, 1), (-b1, 1)], alpha0=[a1, a2])
    mc = theorem1_construct(inp, certify=False)
    q1, q2 = mc.q
    cert = None
    if certify:
        ctx = a1.ctx
        target = Ideal(ctx, [a1 * b1 + a2 * b2, b1 * g, b2 * g])
        cert = radical_equal(target, Ideal(ctx, [q1, q2]), limits)
    return TwoGenerators(q1, q2, cert)


# ---------------------------------------------------------------------------
# recursive construction
# ---------------------------------------------------------------------------

def _extended_basis(b1: Polynomial, b2: Polynomial, limits: Optional[Limits]):
    """Groebner basis of (b1, b2), each element stored as (g, u, v) with g = u*b1 + v*b2."""
    ctx = b1.ctx
    one, zero = ctx.one(), ctx.zero()
    basis: List[Tuple[Polynomial, Polynomial, Polynomial]] = []

    def reduce(f, u, v):
        changed = True
        while changed and not f.is_zero:
            changed = False
            qs, r = divide_multi(f, [g for g, _, _ in basis]) if basis else ([], f)
            if r != f:
                nu, nv = u, v
                for q, (_, gu, gv) in zip(qs, basis):
                    nu = nu - q * gu
                    nv = nv - q * gv
                f, u, v = r, nu, nv
        return f, u, v

    pending = [(b1, one, zero), (b2, zero, one)]
    pairs: List[Tuple[int, int]] = []
    steps = 0
    budget = (limits or Limits()).max_pairs
    while pending or pairs:
        if pending:
            f, u, v = pending.pop(0)
        else:
            i, j = pairs.pop(0)
            gi, ui, vi = basis[i]
            gj, uj, vj = basis[j]
            steps += 1
            if steps > budget:
                raise ResourceLimitError("lift completion exceeded its pair budget")
            F = ctx.field
            L = tuple(max(a, b) for a, b in zip(gi.lm, gj.lm))
            si = tuple(a - b for a, b in zip(L, gi.lm))
            sj = tuple(a - b for a, b in zip(L, gj.lm))
            ci, cj = F.inv(gi.lc), F.inv(gj.lc)
            f = gi.mul_term(si, ci) - gj.mul_term(sj, cj)
            u = ui.mul_term(si, ci) - uj.mul_term(sj, cj)
            v = vi.mul_term(si, ci) - vj.mul_term(sj, cj)
        f, u, v = reduce(f, u, v)
        if f.is_zero:
            continue
        pairs.extend((k, len(basis)) for k in range(len(basis)))
        basis.append((f, u, v))
    return basis


def lift_in_ideal(f: Polynomial, b1: Polynomial, b2: Polynomial,
                  limits: Optional[Limits] = None) -> Tuple[Polynomial, Polynomial]:
    """Cofactors ``(a1, a2)`` with ``f == a1*b1 + a2*b2``.

    Division by ``[b1, b2]`` in the ring's order is tried first, which makes
    the witness canonical for monomial ``b1, b2``. If that leaves a remainder
    the division is redone against a cofactor-tracking basis of ``(b1, b2)``.
    Raises :class:`LiftError` if ``f`` is not in the ideal.
    """
    _check_ctx([f, b1, b2])
    ctx = f.ctx
    if b1.is_zero and b2.is_zero:
        if f.is_zero:
            return ctx.zero(), ctx.zero()
        raise LiftError(f"{f} is not in the zero ideal")
    divisors = [b for b in (b1, b2) if not b.is_zero]
    qs, r = divide_multi(f, divisors)
    if r.is_zero:
        if b1.is_zero:
            return ctx.zero(), qs[0]
        if b2.is_zero:
            return qs[0], ctx.zero()
        return qs[0], qs[1]
    basis = _extended_basis(b1, b2, limits) if not (b1.is_zero or b2.is_zero) else None
    if basis is None:
        raise LiftError(f"{f} is not in ({b1}, {b2})")
    qs, r = divide_multi(f, [g for g, _, _ in basis])
    if not r.is_zero:
        raise LiftError(f"{f} is not in ({b1}, {b2})")
    a1, a2 = ctx.zero(), ctx.zero()
    for q, (_, u, v) in zip(qs, basis):
        a1 = a1 + q * u
        a2 = a2 + q * v
    if a1 * b1 + a2 * b2 != f:
        raise LiftError("cofactor reconstruction failed")
    return a1, a2


@dataclass
class Prop1Input:
    a1: Polynomial
    a2: Polynomial
    b1: Polynomial
    b2: Polynomial
    gammas: List[Polynomial]

    def __post_init__(self):
        self.gammas = list(self.gammas)
        if not self.gammas:
            raise ValueError("at least one gamma is required")
        self.ctx = _check_ctx([self.a1, self.a2, self.b1, self.b2] + self.gammas)

    def target(self) -> Ideal:
        """``(a1*b1 + a2*b2) + (b1, b2)(gammas)``."""
        gens = [self.a1 * self.b1 + self.a2 * self.b2]
        gens += [b * g for g in self.gammas for b in (self.b1, self.b2)]
        return Ideal(self.ctx, gens)


@dataclass
class LiftStep:
    gamma: Polynomial
    lifted: Polynomial
    a1: Polynomial
    a2: Polynomial


@dataclass
class Prop1Construction:
    generators: List[Polynomial]
    steps: List[LiftStep]
    target: Ideal
    certificate: Optional[RadicalEquality] = None

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.equal


def prop1_construct(inp: Prop1Input, certify: bool = True,
                    limits: Optional[Limits] = None) -> Prop1Construction:
    """``n`` generators up to radical for ``(a1*b1 + a2*b2) + (b1, b2)(g_1..g_{n-1})``.

    Starts from the two-generator case for ``g_1``. Each further ``g`` writes
    the current first generator as ``a1'*b1 + a2'*b2``, replaces it with
    ``a1'*q1 + b2*g`` and appends ``a2'*q1 - b1*g``.
    """
    b1, b2 = inp.b1, inp.b2
    first = corollary1(inp.a1, inp.a2, b1, b2, inp.gammas[0], certify=False)
    qs = [first.q1, first.q2]
    steps = []
    for g in inp.gammas[1:]:
        q1 = qs[0]
        a1, a2 = lift_in_ideal(q1, b1, b2, limits)
        steps.append(LiftStep(g, q1, a1, a2))
        qs[0] = a1 * q1 + b2 * g
        qs.append(a2 * q1 - b1 * g)
    beta = Ideal(inp.ctx, [b1, b2])
    if beta.generators:
        gb = groebner(beta, limits=limits)
        for q in qs:
            if not gb.contains(q):
                raise LiftError(f"generator {q} left the ideal ({b1}, {b2})")
    target = inp.target()
    cert = radical_equal(target, Ideal(inp.ctx, qs), limits) if certify else None
    return Prop1Construction(qs, steps, target, cert)
