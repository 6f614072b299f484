"""Sparse multivariate polynomials over exact fields.

A polynomial is an immutable mapping from exponent tuples to nonzero field
elements, stored in descending order for the ring's monomial order so the
leading term is always the first entry.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .field import QQ, CoefficientError, Field, Scalar

Monomial = Tuple[int, ...]

ORDERS = ("lex", "grevlex")


class ContextMismatch(ValueError):
    """Operands live in different polynomial rings."""


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

def _lex_key(m: Monomial) -> tuple:
    return m


def _grevlex_key(m: Monomial) -> tuple:
    return (sum(m),) + tuple(-e for e in reversed(m))


def _block_key(k: int) -> Callable[[Monomial], tuple]:
    def key(m: Monomial) -> tuple:
        return _grevlex_key(m[:k]) + _grevlex_key(m[k:])
    return key


@lru_cache(maxsize=None)
def order_key(order: str) -> Callable[[Monomial], tuple]:
    """Sort key for ``order``: larger key means larger monomial.

    Supported orders are ``lex``, ``grevlex`` and ``block:k`` (grevlex on the
    first k variables, ties broken by grevlex on the rest).
    """
    if order == "lex":
        return _lex_key
    if order == "grevlex":
        return _grevlex_key
    if order.startswith("block:"):
        return _block_key(int(order[6:]))
    raise ValueError(f"unknown monomial order {order!r}")


def check_order(order: str) -> str:
    order_key(order)
    return order


def cmp_monomials(order: str, a: Monomial, b: Monomial) -> int:
    """Compare two exponent vectors; returns -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError(f"monomial length mismatch: {len(a)} vs {len(b)}")
    key = order_key(order)
    ka, kb = key(tuple(a)), key(tuple(b))
    return (ka > kb) - (ka < kb)


def divides(a: Monomial, b: Monomial) -> bool:
    """True if monomial ``a`` divides monomial ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingContext:
    field: Field = QQ
    variables: Tuple[str, ...] = ()
    order: str = "grevlex"

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        for v in self.variables:
            if not _IDENT.fullmatch(v):
                raise ValueError(f"invalid variable name {v!r}")
        check_order(self.order)

    @classmethod
    def standard(cls, n: int, field: Field = QQ, order: str = "grevlex") -> "RingContext":
        """The ring K[x1, ..., xn]."""
        return cls(field, tuple(f"x{i}" for i in range(1, n + 1)), order)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        return order_key(self.order)

    def with_order(self, order: str) -> "RingContext":
        return RingContext(self.field, self.variables, order)

    def with_field(self, field: Field) -> "RingContext":
        return RingContext(field, self.variables, self.order)

    def fresh_name(self, base: str = "t") -> str:
        name, i = base, 0
        while name in self.variables:
            i += 1
            name = f"{base}{i}"
        return name

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def gen(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial._raw(self, {tuple(m): self.field.one})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def one(self) -> "Polynomial":
        return self.constant(1)

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial._raw(self, {(0,) * self.nvars: c} if c else {})

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __str__(self) -> str:
        return f"{self.field.name}[{', '.join(self.variables)}] ({self.order})"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial.

    >>> R = RingContext.standard(3)
    >>> x1, x2, x3 = R.gens()
    >>> str((x1 + x2) ** 2 - x1 ** 2)
    '2*x1*x2 + x2^2'
    """

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Optional[Mapping[Monomial, object]] = None):
        conv = ctx.field
        n = ctx.nvars
        clean: Dict[Monomial, Scalar] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {n} variables")
            c = conv(c)
            if c:
                clean[m] = conv.add(clean[m], c) if m in clean else c
        self.ctx = ctx
        self._terms = _sorted_terms(clean, ctx.key)
        self._hash = None

    @classmethod
    def _raw(cls, ctx: RingContext, terms: Dict[Monomial, Scalar], sort: bool = True) -> "Polynomial":
        # coefficients must already be nonzero field elements
        p = object.__new__(cls)
        p.ctx = ctx
        p._terms = _sorted_terms(terms, ctx.key) if sort else terms
        p._hash = None
        return p

    # -- access ------------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        """Copy of the term dictionary in descending order."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self._terms.items())

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(self.lm))

    @property
    def lm(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return next(iter(self._terms))

    @property
    def lc(self) -> Scalar:
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return next(iter(self._terms.values()))

    def coeff(self, m: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(m), self.ctx.field.zero)

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def variables_used(self) -> set:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    # -- conversions -------------------------------------------------------
    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        F = self.ctx.field
        inv = F.inv(self.lc)
        return Polynomial._raw(self.ctx, {m: F.mul(c, inv) for m, c in self._terms.items()}, sort=False)

    def in_context(self, ctx: RingContext) -> "Polynomial":
        """Re-express in ``ctx``.

        Variables are matched by name; the target may have extra variables,
        drop variables that do not occur, use a different order, or a
        different field (coefficients are converted).
        """
        if ctx == self.ctx:
            return self
        src = self.ctx.variables
        target = {v: i for i, v in enumerate(ctx.variables)}
        pos = [target.get(v) for v in src]
        n = ctx.nvars
        out: Dict[Monomial, Scalar] = {}
        F = ctx.field
        for m, c in self._terms.items():
            e = [0] * n
            for i, k, v in zip(pos, m, src):
                if i is not None:
                    e[i] = k
                elif k:
                    raise KeyError(f"variable {v!r} does not exist in {ctx}")
            c = F(c)
            if c:
                out[tuple(e)] = c
        return Polynomial._raw(ctx, out)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ctx.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(self.ctx, _add(self._terms, other._terms, 1, self.ctx.field.modulus))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(self.ctx, _add(self._terms, other._terms, -1, self.ctx.field.modulus))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        F = self.ctx.field
        return Polynomial._raw(self.ctx, {m: F.neg(c) for m, c in self._terms.items()}, sort=False)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(self.ctx, _mul(self._terms, other._terms, self.ctx.field.modulus))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, m: Monomial, c: Scalar) -> "Polynomial":
        F = self.ctx.field
        if not c:
            return self.ctx.zero()
        return Polynomial._raw(
            self.ctx, {mono_mul(k, m): F.mul(v, c) for k, v in self._terms.items()}, sort=False
        )

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self.ctx.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, tuple(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"


def _sorted_terms(terms: Dict[Monomial, Scalar], key) -> Dict[Monomial, Scalar]:
    if len(terms) < 2:
        return dict(terms)
    return {m: terms[m] for m in sorted(terms, key=key, reverse=True)}


def _add(a: Mapping, b: Mapping, sign: int, mod: Optional[int]) -> Dict[Monomial, Scalar]:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        v = (sign * c if v is None else v + sign * c)
        if mod is not None:
            v %= mod
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _mul(a: Mapping, b: Mapping, mod: Optional[int]) -> Dict[Monomial, Scalar]:
    out: Dict[Monomial, Scalar] = {}
    get = out.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = get(m, 0) + ca * cb
    if mod is not None:
        return {m: c % mod for m, c in out.items() if c % mod}
    return {m: c for m, c in out.items() if c}


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def _neg_key(key):
    def nk(m):
        return tuple(-x for x in key(m))
    return nk


_FIELD_BITS = 16


@lru_cache(maxsize=None)
def _packing(n: int):
    # exponent e_i sits in bits [16i, 16i+15); bit 15 of each field is a guard
    shifts = tuple(_FIELD_BITS * i for i in range(n))
    guard = sum(1 << (s + _FIELD_BITS - 1) for s in shifts)
    return shifts, guard


@lru_cache(maxsize=1 << 20)
def pack(m: Monomial) -> int:
    """Exponent vector packed into one integer (16 bits per variable)."""
    v = 0
    s = 0
    for e in m:
        if e >= 1 << (_FIELD_BITS - 1):
            raise OverflowError(f"exponent {e} too large")
        v |= e << s
        s += _FIELD_BITS
    return v


def guard_mask(n: int) -> int:
    return _packing(n)[1]


def reduce_terms(
    h: Dict[Monomial, Scalar],
    divisors: Sequence[Tuple[Monomial, Scalar, Sequence[Tuple[Monomial, Scalar]]]],
    key,
    mod: Optional[int],
    quotients: Optional[List[Dict[Monomial, Scalar]]] = None,
    full: bool = True,
) -> Dict[Monomial, Scalar]:
    """Multivariate division of the term dict ``h`` (consumed) by ``divisors``.

    Each divisor is ``(lm, inverse of lc, tail terms)``. The first divisor
    whose leading monomial divides the current leading term is used. Returns
    the remainder as an unsorted dict. With ``full=False`` the loop stops at
    the first irreducible leading term and the rest of ``h`` is returned
    unreduced.
    """
    if not h:
        return h
    nk = _neg_key(key)
    guard = _packing(len(next(iter(h))))[1]
    packed = [(pack(lm), idx) for idx, (lm, _, _) in enumerate(divisors)]
    heap = [(nk(m), m) for m in h]
    heapq.heapify(heap)
    rem: Dict[Monomial, Scalar] = {}
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        _, m = pop(heap)
        c = h.pop(m, None)
        if c is None:
            continue
        pm = pack(m) | guard
        for pa, idx in packed:
            if (pm - pa) & guard == guard:
                break
        else:
            if not full:
                h[m] = c
                h.update(rem)
                return h
            rem[m] = c
            continue
        lm, lc_inv, tail = divisors[idx]
        q = c * lc_inv
        if mod is not None:
            q %= mod
        shift = tuple(x - y for x, y in zip(m, lm))
        if quotients is not None:
            qd = quotients[idx]
            v = qd.get(shift, 0) + q
            if mod is not None:
                v %= mod
            if v:
                qd[shift] = v
            else:
                qd.pop(shift, None)
        for tm, tc in tail:
            nm = tuple(x + y for x, y in zip(tm, shift))
            old = h.get(nm)
            if old is None:
                v = -q * tc
                if mod is not None:
                    v %= mod
                h[nm] = v
                push(heap, (nk(nm), nm))
            else:
                v = old - q * tc
                if mod is not None:
                    v %= mod
                if v:
                    h[nm] = v
                else:
                    del h[nm]
    return rem


def _divisor_entry(g: "Polynomial"):
    it = iter(g._terms.items())
    lm, lc = next(it)
    return lm, g.ctx.field.inv(lc), list(it)


def divide_multi(f: Polynomial, divisors: Sequence[Polynomial]) -> Tuple[List[Polynomial], Polynomial]:
    """Divide ``f`` by an ordered list of divisors.

    Returns ``(quotients, remainder)`` with ``f == sum(q*d) + remainder`` and no
    term of the remainder divisible by any divisor's leading monomial.
    """
    ctx = f.ctx
    entries = []
    for d in divisors:
        if d.ctx != ctx:
            raise ContextMismatch(f"{ctx} vs {d.ctx}")
        if d.is_zero:
            raise ZeroDivisionError("zero polynomial in divisor list")
        entries.append(_divisor_entry(d))
    quotients: List[Dict[Monomial, Scalar]] = [{} for _ in divisors]
    rem = reduce_terms(dict(f._terms), entries, ctx.key, ctx.field.modulus, quotients)
    return [Polynomial._raw(ctx, q) for q in quotients], Polynomial._raw(ctx, rem)


# ---------------------------------------------------------------------------
# parsing and printing
# ---------------------------------------------------------------------------

class ParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: Optional[int] = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} at position {pos}")


class UnknownVariableError(ParseError):
    pass


class UnrepresentableCoefficientError(ParseError):
    pass


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: RingContext):
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return result

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            base = base ** int(tok[1])
            if self.peek()[0] == "^":
                raise ParseError("chained '^' is not allowed; use parentheses", self.peek()[2])
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2])
                value = Fraction(int(tok[1]), int(den[1]))
            try:
                return self.ctx.constant(value)
            except CoefficientError as exc:
                raise UnrepresentableCoefficientError(str(exc), tok[2]) from None
        if kind == "name":
            self.take()
            if tok[1] not in self.ctx.variables:
                raise UnknownVariableError(f"unknown variable {tok[1]!r}", tok[2])
            nxt = self.peek()
            if nxt[0] in ("name", "int", "("):
                raise ParseError("implicit multiplication is not allowed; use '*'", nxt[2])
            return self.ctx.gen(tok[1])
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", tok[2])


def parse_poly(text: str, ctx: RingContext) -> Polynomial:
    """Parse a polynomial expression in ``ctx``.

    Grammar: integers, rationals ``a/b``, variable names, ``+ - * ^`` and
    parentheses. ``^`` binds tightest and takes a non-negative integer
    literal; multiplication must be explicit.
    """
    return _Parser(text, ctx).parse()


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """Canonical text: descending terms, explicit ``*``, unit coefficients omitted."""
    if f.is_zero:
        return "0"
    names = f.ctx.variables
    mod = f.ctx.field.modulus
    out = []
    for m, c in f._terms.items():
        neg = mod is None and c < 0
        a = -c if neg else c
        mono = format_monomial(m, names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def polys_from_lines(lines: Iterable[str], ctx: RingContext) -> List[Polynomial]:
    return [parse_poly(s, ctx) for s in lines]
