"""Integer partitions and the statistics used throughout the package.

A partition is stored canonically as a non-increasing tuple of positive
parts; the empty tuple is the (unique) partition of 0.
"""

from __future__ import annotations

from typing import Iterable, Iterator

EMPTY_TEXT = "∅"  # how the empty partition prints: "∅"


class Partition:
    """An integer partition, kept in non-increasing order.

    Instances are treated as immutable: all operations return new objects.
    Input order does not matter; ``Partition([2, 7, 1])`` stores ``(7, 2, 1)``.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        vals = sorted(parts, reverse=True)
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError("parts must be positive integers, got %r" % (v,))
        self.parts = tuple(vals)

    @classmethod
    def _raw(cls, sorted_parts: tuple[int, ...]) -> "Partition":
        # Internal fast path: caller guarantees a validated, sorted tuple.
        p = object.__new__(cls)
        p.parts = sorted_parts
        return p

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"7,2,1"`` or exponent shorthand ``"2^5,4^4"``.

        Surrounding whitespace and one pair of parentheses are tolerated, so
        table entries such as ``"(2^2,1^3)"`` round-trip.  The empty string
        and "∅" both give the empty partition.
        """
        s = text.strip()
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1].strip()
        if s in ("", EMPTY_TEXT):
            return cls()
        parts = []
        for token in s.split(","):
            token = token.strip()
            if not token:
                raise ValueError("empty entry in partition %r" % (text,))
            base, sep, exp = token.partition("^")
            try:
                size = int(base)
                mult = int(exp) if sep else 1
            except ValueError:
                raise ValueError("bad partition entry %r" % (token,)) from None
            if size < 1:
                raise ValueError("parts must be positive, got %d" % size)
            if mult < 1:
                raise ValueError("multiplicity must be positive in %r" % (token,))
            parts.extend([size] * mult)
        return cls(parts)

    # -- basic container behaviour ------------------------------------

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __le__(self, other: "Partition") -> bool:
        return self.parts <= other.parts

    def __repr__(self) -> str:
        return "Partition(%s)" % (list(self.parts),)

    def __str__(self) -> str:
        if not self.parts:
            return EMPTY_TEXT
        return ",".join(str(p) for p in self.parts)

    # -- statistics ----------------------------------------------------

    def weight(self) -> int:
        """The number being partitioned: the sum of all parts."""
        return sum(self.parts)

    def alt_sum(self) -> int:
        """Alternating sum of the parts: first - second + third - ...

        Always non-negative because the parts are non-increasing.
        """
        total = 0
        for i, p in enumerate(self.parts):
            total += p if i % 2 == 0 else -p
        return total

    def odd_count(self) -> int:
        """How many parts are odd (counted with multiplicity)."""
        return sum(1 for p in self.parts if p % 2 == 1)

    def multiplicity(self, size: int) -> int:
        return sum(1 for p in self.parts if p == size)

    def multiplicities(self) -> dict[int, int]:
        """Part sizes mapped to their multiplicities, largest size first."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram; an involution on partitions."""
        if not self.parts:
            return self
        cols = []
        for i in range(1, self.parts[0] + 1):
            cols.append(sum(1 for p in self.parts if p >= i))
        return Partition._raw(tuple(cols))

    def largest_odd_part(self) -> int:
        """The largest odd part, or 0 when every part is even (or none)."""
        for p in self.parts:
            if p % 2 == 1:
                return p
        return 0

    def largest_odd_multiplicity_part(self) -> int:
        """The largest part occurring an odd number of times, 0 if none."""
        for size, mult in self.multiplicities().items():
            if mult % 2 == 1:
                return size
        return 0

    # -- rendering -----------------------------------------------------

    def exponent_form(self) -> str:
        """Render with multiplicities as exponents, e.g. ``(2^2,1^3)``."""
        if not self.parts:
            return EMPTY_TEXT
        chunks = []
        for size, mult in self.multiplicities().items():
            chunks.append(str(size) if mult == 1 else "%d^%d" % (size, mult))
        return "(%s)" % ",".join(chunks)
