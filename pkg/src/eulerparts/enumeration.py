"""Multiplicity-bounded partition enumeration.

A :class:`BoundSequence` caps how often each part size may occur (the cap is
inclusive: "at most b times").  Enumeration can further be restricted to a
congruence class of part sizes, to even length, and to at most one copy of
the class representative.  Both restrictions have a small text DSL so they
can be passed on a command line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator

from .partition import Partition


class _UnboundedType:
    """Singleton marking a part size with no multiplicity cap."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"


UNBOUNDED = _UnboundedType()


class BoundSequence:
    """Per-size multiplicity caps: part ``i`` may appear at most ``bound(i)`` times.

    Caps are inclusive; 0 forbids the size entirely and ``UNBOUNDED`` lifts
    the cap.  ``spec`` is the canonical DSL text, kept for reports.
    """

    __slots__ = ("_fn", "spec")

    def __init__(self, fn: Callable[[int], object], spec: str):
        self._fn = fn
        self.spec = spec

    def __repr__(self) -> str:
        return "BoundSequence(%r)" % self.spec

    def bound(self, size: int):
        if size < 1:
            raise ValueError("part sizes start at 1, got %d" % size)
        b = self._fn(size)
        if b is UNBOUNDED:
            return b
        if not isinstance(b, int) or b < 0:
            raise ValueError("bound for part %d must be a non-negative integer, got %r" % (size, b))
        return b

    def allows(self, size: int, mult: int) -> bool:
        b = self.bound(size)
        return b is UNBOUNDED or mult <= b

    def admits(self, p: Partition) -> bool:
        """True when every multiplicity of ``p`` is within its cap."""
        return all(self.allows(s, m) for s, m in p.multiplicities().items())

    def strict_products(self, cutoff: int) -> list[int]:
        """Sorted multiset of ``size * (bound + 1)`` values up to ``cutoff``.

        ``bound + 1`` is the strict (excluded) multiplicity, so these are the
        products that decide whether two bound sequences are equivalent.
        """
        out = []
        for size in range(1, cutoff + 1):
            b = self.bound(size)
            if b is UNBOUNDED:
                continue
            prod = size * (b + 1)
            if prod <= cutoff:
                out.append(prod)
        return sorted(out)

    # -- constructors ---------------------------------------------------

    @classmethod
    def unbounded(cls) -> "BoundSequence":
        return cls(lambda s: UNBOUNDED, "all:inf")

    @classmethod
    def constant(cls, cap: int) -> "BoundSequence":
        return cls(lambda s: cap, "all:%d" % cap)

    @classmethod
    def evens_only(cls, cap: int) -> "BoundSequence":
        """Cap only the even sizes; odd sizes stay unbounded."""
        return cls(lambda s: cap if s % 2 == 0 else UNBOUNDED, "even:%d" % cap)

    @classmethod
    def odds_evens(cls, odd_cap, even_cap) -> "BoundSequence":
        spec = "odd:%s,even:%s" % (_fmt_bound(odd_cap), _fmt_bound(even_cap))
        return cls(lambda s: odd_cap if s % 2 == 1 else even_cap, spec)

    @classmethod
    def from_items(cls, items: dict[int, object], default=UNBOUNDED) -> "BoundSequence":
        table = dict(items)
        chunks = ["%d:%s" % (s, _fmt_bound(b)) for s, b in sorted(table.items())]
        chunks.append("default:%s" % _fmt_bound(default))
        return cls(lambda s: table.get(s, default), ",".join(chunks))

    @classmethod
    def from_function(cls, fn: Callable[[int], object], spec: str = "phi:<custom>") -> "BoundSequence":
        return cls(fn, spec)


def _fmt_bound(b) -> str:
    return "inf" if b is UNBOUNDED else str(b)


@dataclass(frozen=True)
class CongruenceFilter:
    """Keep partitions whose parts are ``residue`` mod ``modulus``.

    ``even_length`` further requires an even number of parts, and
    ``first_part_once`` allows at most one copy of the part equal to
    ``residue`` (meaningful only when the residue is a valid part size).
    """

    modulus: int = 1
    residue: int = 0
    even_length: bool = False
    first_part_once: bool = False

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must satisfy 0 <= residue < modulus")

    def admits_size(self, size: int) -> bool:
        return size % self.modulus == self.residue

    def admits(self, p: Partition) -> bool:
        if self.even_length and len(p) % 2 == 1:
            return False
        if self.first_part_once and self.residue >= 1 and p.multiplicity(self.residue) > 1:
            return False
        return all(self.admits_size(s) for s in p.parts)

    @property
    def spec(self) -> str:
        chunks = ["mod:%d" % self.modulus, "res:%d" % self.residue]
        if self.even_length:
            chunks.append("even-length")
        if self.first_part_once:
            chunks.append("first-once")
        return ",".join(chunks)


# -- the DSLs -----------------------------------------------------------

_PHI_TOKEN = re.compile(r"\d+|[i+*()]")


def parse_phi(expr: str) -> Callable[[int], int]:
    """Parse a tiny arithmetic expression in ``i``: integers, ``+``, ``*``, parens.

    Returns a function of the part size, e.g. ``"2*i+1"``.
    """
    text = expr.replace(" ", "")
    tokens = _PHI_TOKEN.findall(text)
    if "".join(tokens) != text or not tokens:
        raise ValueError("bad expression %r (allowed: integers, i, +, *, parentheses)" % expr)

    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def atom():
        tok = peek()
        if tok is None:
            raise ValueError("unexpected end of expression in %r" % expr)
        if tok == "(":
            take()
            node = sum_expr()
            if peek() != ")":
                raise ValueError("unbalanced parentheses in %r" % expr)
            take()
            return node
        take()
        if tok == "i":
            return lambda i: i
        if tok.isdigit():
            val = int(tok)
            return lambda i: val
        raise ValueError("unexpected token %r in %r" % (tok, expr))

    def term():
        node = atom()
        while peek() == "*":
            take()
            rhs = atom()
            node = (lambda a, b: lambda i: a(i) * b(i))(node, rhs)
        return node

    def sum_expr():
        node = term()
        while peek() == "+":
            take()
            rhs = term()
            node = (lambda a, b: lambda i: a(i) + b(i))(node, rhs)
        return node

    fn = sum_expr()
    if pos != len(tokens):
        raise ValueError("trailing tokens in %r" % expr)
    return fn


def _parse_bound_value(text: str):
    """A bound value: "inf", an inclusive integer, or "Ns" for a strict cap N."""
    t = text.strip()
    if t == "inf":
        return UNBOUNDED
    strict = t.endswith("s")
    if strict:
        t = t[:-1]
    if not t.isdigit():
        raise ValueError("bad bound value %r" % text)
    val = int(t)
    if strict:
        if val < 1:
            raise ValueError("strict bound must be >= 1 in %r" % text)
        val -= 1
    return val


def parse_bounds(text: str) -> BoundSequence:
    """Parse the bound DSL.

    Examples: ``all:3``, ``even:1``, ``odd:inf,even:3``, ``1:3,2:5,default:inf``,
    ``phi:2*i+1``.  A trailing ``s`` marks a strict cap ("fewer than N"), so
    ``all:4s`` equals ``all:3``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty bound spec")
    if s.startswith("phi:"):
        expr = s[len("phi:"):]
        fn = parse_phi(expr)
        return BoundSequence.from_function(fn, "phi:%s" % expr.replace(" ", ""))

    sizes: dict[int, object] = {}
    odd = even = default = None
    for entry in s.split(","):
        key, sep, value = entry.partition(":")
        key = key.strip()
        if not sep:
            raise ValueError("bad bound entry %r (expected key:value)" % entry)
        val = _parse_bound_value(value)
        if key in ("all", "default"):
            if default is not None:
                raise ValueError("duplicate default in %r" % text)
            default = val
        elif key == "odd":
            odd = val
        elif key == "even":
            even = val
        elif key.isdigit() and int(key) >= 1:
            sizes[int(key)] = val
        else:
            raise ValueError("bad bound key %r" % key)

    base = UNBOUNDED if default is None else default
    odd_cap = base if odd is None else odd
    even_cap = base if even is None else even

    def fn(size, sizes=sizes, odd_cap=odd_cap, even_cap=even_cap):
        if size in sizes:
            return sizes[size]
        return odd_cap if size % 2 == 1 else even_cap

    return BoundSequence(fn, s.replace(" ", ""))


def parse_filter(text: str) -> CongruenceFilter:
    """Parse the filter DSL: ``mod:k,res:i[,even-length][,first-once]``."""
    modulus = 1
    residue = 0
    even_length = False
    first_once = False
    for entry in text.strip().split(","):
        key, sep, value = entry.partition(":")
        key = key.strip()
        if key == "mod" and sep:
            modulus = int(value)
        elif key == "res" and sep:
            residue = int(value)
        elif key == "even-length" and not sep:
            even_length = True
        elif key == "first-once" and not sep:
            first_once = True
        else:
            raise ValueError("bad filter entry %r" % entry)
    return CongruenceFilter(modulus, residue, even_length, first_once)


# -- enumeration ---------------------------------------------------------

def bounded_partitions(n: int, bounds: BoundSequence | None = None,
                       filt: CongruenceFilter | None = None) -> Iterator[Partition]:
    """Yield all partitions of ``n`` within the caps, in descending
    lexicographic order (largest first part first, ties broken by the next
    part, and so on).  The order is deterministic.

    ``n = 0`` yields exactly the empty partition whatever the caps are.
    """
    if n < 0:
        raise ValueError("cannot partition a negative number")
    modulus = filt.modulus if filt else 1
    residue = filt.residue if filt else 0
    need_even = filt.even_length if filt else False
    once_size = filt.residue if (filt and filt.first_part_once and filt.residue >= 1) else 0

    acc: list[int] = []

    def gen(remaining: int, max_size: int):
        if remaining == 0:
            if not need_even or len(acc) % 2 == 0:
                yield Partition._raw(tuple(acc))
            return
        for size in range(min(remaining, max_size), 0, -1):
            if size % modulus != residue:
                continue
            cap = remaining // size
            if bounds is not None:
                b = bounds.bound(size)
                if b is not UNBOUNDED:
                    cap = min(cap, b)
            if size == once_size:
                cap = min(cap, 1)
            for count in range(cap, 0, -1):
                acc.extend([size] * count)
                yield from gen(remaining - size * count, size - 1)
                del acc[len(acc) - count:]

    return gen(n, n)


def count_total(n: int, bounds: BoundSequence | None = None,
                filt: CongruenceFilter | None = None) -> int:
    return sum(1 for _ in bounded_partitions(n, bounds, filt))


def count_by_statistic(n: int, stat: Callable[[Partition], int],
                       bounds: BoundSequence | None = None,
                       filt: CongruenceFilter | None = None) -> dict[int, int]:
    """Histogram of ``stat`` over the enumerated partitions, keyed ascending."""
    hist: dict[int, int] = {}
    for p in bounded_partitions(n, bounds, filt):
        k = stat(p)
        hist[k] = hist.get(k, 0) + 1
    return dict(sorted(hist.items()))
