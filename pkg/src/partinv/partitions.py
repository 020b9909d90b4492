"""Set partitions of [n] in standard form: parsing, serialization, spans,
the nonoverlapping test, and exhaustive enumeration.

Standard form writes every block in decreasing order and lists blocks by
increasing first entry (equivalently by increasing block maximum), e.g.
31/62/7/854. Two text serializations exist:

    compact   one digit per entry, juxtaposed ("854"); legal only while
              every entry is <= 9
    comma     decimal entries joined by "," ("10,7,3"); works for any n

Blocks are joined by "/". A string is read in comma form iff it contains a
',' or a '0' (a zero can only occur inside a multi-digit decimal, and every
all-singleton partition of [n >= 10] spells out "10"); otherwise compact.
Whenever both readings are valid they denote the same partition, so the
rule is unambiguous.
"""

import operator
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import BoundError, FormatError, ParseError, ValidationError

Block = tuple[int, ...]

#: Entries legal in a compact block (zero excluded: entries are positive).
_COMPACT_DIGITS = frozenset("123456789")

_NUMBER = re.compile(r"[1-9][0-9]*\Z")

#: Default enumeration ceiling; Bell(14) ~ 1.9e8 partitions, streamed.
DEFAULT_MAX_N = 14


class Span(NamedTuple):
    """Closed integer interval [lo, hi] covered by a block."""

    lo: int
    hi: int


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1, ..., n} in standard form.

    The constructor trusts its arguments. Build instances through parse(),
    normalize() or from_blocks() unless the blocks are already known to be
    valid standard form; validate() re-checks every invariant.
    """

    n: int
    blocks: tuple[Block, ...]

    def validate(self) -> "SetPartition":
        """Raise ValidationError naming the first violated invariant."""
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError("n must be a positive integer")
        if not self.blocks:
            raise ValidationError("partition has no blocks")
        entries = []
        for block in self.blocks:
            if not block:
                raise ValidationError("empty block")
            for e in block:
                if not isinstance(e, int) or e < 1:
                    raise ValidationError(f"entry {e!r} is not a positive integer")
            if any(a <= b for a, b in zip(block, block[1:])):
                raise ValidationError(f"block {block} is not strictly decreasing")
            entries.extend(block)
        firsts = [b[0] for b in self.blocks]
        if any(a >= b for a, b in zip(firsts, firsts[1:])):
            raise ValidationError("blocks are not ordered by increasing first entry")
        if len(entries) != self.n or set(entries) != set(range(1, self.n + 1)):
            raise ValidationError(f"blocks do not partition {{1, ..., {self.n}}}")
        return self

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        """Validating constructor for blocks already in standard form."""
        tup = tuple(tuple(b) for b in blocks)
        if not tup or any(not b for b in tup):
            raise ValidationError("blocks must be a nonempty family of nonempty blocks")
        n = max(max(b) for b in tup)
        return cls(n, tup).validate()

    @classmethod
    def from_json(cls, obj: dict) -> "SetPartition":
        """Inverse of to_json; validates standard form."""
        if not isinstance(obj, dict) or "blocks" not in obj:
            raise ValidationError('expected an object with a "blocks" field')
        return cls.from_blocks(obj["blocks"])

    def to_json(self) -> dict:
        """Structured form: {"blocks": [[...], ...]}, inner lists decreasing."""
        return {"blocks": [list(b) for b in self.blocks]}

    def __str__(self) -> str:
        return format_partition(self)


def normalize(blocks: Iterable[Iterable[int]]) -> SetPartition:
    """Build the standard form of an unordered family of disjoint sets.

    Unlike parse/from_blocks this sorts for the caller; it still rejects
    families that are not a partition of some {1, ..., n}.
    """
    fam = [tuple(sorted(b, reverse=True)) for b in blocks]
    if not fam or any(not b for b in fam):
        raise ValidationError("blocks must be a nonempty family of nonempty blocks")
    fam.sort(key=operator.itemgetter(0))
    n = max(b[0] for b in fam)
    return SetPartition(n, tuple(fam)).validate()


def parse(text: str) -> SetPartition:
    """Parse a partition in the grammar above; rejects non-standard form."""
    if not text:
        raise ParseError("empty partition text", 0)
    comma_form = "," in text or "0" in text
    blocks = []
    pos = 0
    for chunk in text.split("/"):
        if not chunk:
            raise ParseError("empty block", pos)
        if comma_form:
            entries = []
            epos = pos
            for num in chunk.split(","):
                if not _NUMBER.match(num):
                    raise ParseError(f"invalid entry {num!r}", epos)
                entries.append(int(num))
                epos += len(num) + 1
        else:
            for off, ch in enumerate(chunk):
                if ch not in _COMPACT_DIGITS:
                    raise ParseError(f"invalid character {ch!r}", pos + off)
            entries = [int(ch) for ch in chunk]
        blocks.append(tuple(entries))
        pos += len(chunk) + 1
    n = max(max(b) for b in blocks)
    return SetPartition(n, tuple(blocks)).validate()


def format_partition(p: SetPartition, compact: bool | None = None) -> str:
    """Serialize a partition; compact=None picks compact whenever legal."""
    if compact is None:
        compact = p.n <= 9
    elif compact and p.n > 9:
        raise FormatError(f"compact form needs entries <= 9, partition covers [{p.n}]")
    sep = "" if compact else ","
    return "/".join(sep.join(map(str, b)) for b in p.blocks)


def span(block: Iterable[int]) -> Span:
    """Smallest integer interval containing the block."""
    return Span(min(block), max(block))


def _spans_laminar(spans: list[tuple[int, int]]) -> bool:
    """True iff every pair of intervals is disjoint or nested.

    Block minima are distinct elements, so the lo endpoints never tie.
    """
    spans.sort()
    for i, (lo1, hi1) in enumerate(spans):
        for lo2, hi2 in spans[i + 1:]:
            if lo2 > hi1:
                break  # sorted by lo: everything later is disjoint from this one
            if hi2 > hi1:
                return False  # lo1 < lo2 <= hi1 < hi2: proper crossing
    return True


def is_nonoverlapping(p: SetPartition) -> bool:
    """True iff all block spans are pairwise disjoint or nested.

    Singleton spans are single points, so only non-singleton blocks are
    checked.
    """
    return _spans_laminar([(b[-1], b[0]) for b in p.blocks if len(b) > 1])


def _iter_groups(n: int) -> Iterator[list[list[int]]]:
    """Yield each partition of [n] as ascending-entry blocks ordered by
    block maximum, in lexicographic order of the restricted-growth string.

    The RGS odometer a satisfies a[0] = 0 and a[i] <= 1 + max(a[:i]);
    b[i] caches that bound. Fresh group lists are yielded each step, so
    consumers may keep them.
    """
    a = [0] * n
    b = [1] * n
    last = n - 1
    by_max = operator.itemgetter(-1)
    while True:
        nblocks = b[last] + (1 if a[last] == b[last] else 0) if last else 1
        groups = [[] for _ in range(nblocks)]
        for i in range(n):
            groups[a[i]].append(i + 1)
        groups.sort(key=by_max)
        yield groups
        i = last
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        bound = b[i] + (1 if a[i] == b[i] else 0)
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = bound


def _check_bound(n: int, max_n: int) -> None:
    if n < 1:
        raise BoundError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise BoundError(f"n={n} exceeds the enumeration guard {max_n} (raise max_n to override)")


def enumerate_all(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[SetPartition]:
    """Every partition of [n] exactly once, in standard form, RGS-lex order."""
    _check_bound(n, max_n)
    return _gen_all(n)


def _gen_all(n: int) -> Iterator[SetPartition]:
    for groups in _iter_groups(n):
        yield SetPartition(n, tuple(tuple(reversed(g)) for g in groups))


def enumerate_nonoverlapping(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[SetPartition]:
    """enumerate_all filtered to nonoverlapping partitions."""
    _check_bound(n, max_n)
    return _gen_nonoverlapping(n)


def _gen_nonoverlapping(n: int) -> Iterator[SetPartition]:
    laminar = _spans_laminar
    for groups in _iter_groups(n):
        if laminar([(g[0], g[-1]) for g in groups if len(g) > 1]):
            yield SetPartition(n, tuple(tuple(reversed(g)) for g in groups))
