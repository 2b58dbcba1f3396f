"""Signed permutations, B-snakes, and their derived combinatorial data.

A signed permutation on an index set I = {i_1 < ... < i_r} ⊆ {1, ..., n} is
a word x_r ... x_2 x_1 of nonzero integers whose magnitudes are pairwise
distinct and fill exactly I.  Words are stored leftmost-first, exactly as
printed in bracket notation, and are grouped into length-2 blocks anchored
at the right end: ``[x_5/x_4x_3/x_2x_1]`` for r = 5, ``[x_4x_3/x_2x_1]``
for r = 4.  All position arithmetic in this package is right-anchored and
1-based: x_1 is the last letter of the printed word.

A B-snake is a signed permutation satisfying the alternation

    0 < x_r > x_{r-1} < x_{r-2} > ...

down to x_1.  Snakes on an r-element set are counted by the Springer
numbers 1, 1, 3, 11, 57, 361, 2763, 24611, ... (A001586); they serve as
the basis of the quotient algebra built in the sibling modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

IndexSet = tuple[int, ...]
SignedSubset = frozenset[int]

#: Largest r for which exhaustive enumeration of all 2^r * r! signed
#: permutations (and hence ``springer``) is allowed by default.
ENUMERATION_CAP = 7


class CapExceeded(ValueError):
    """A desk-scale safety cap was exceeded; pass a larger cap to override."""


class ParseError(ValueError):
    """Malformed bracket notation; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at index {position})"
        super().__init__(message)
        self.position = position


def index_set(values: Iterable[int]) -> IndexSet:
    """Sorted tuple of distinct positive integers."""
    elems = tuple(sorted(set(values)))
    if elems and elems[0] < 1:
        raise ValueError(f"index set must contain positive integers: {elems}")
    return elems


def signed_subset(members: Iterable[int]) -> SignedSubset:
    """Frozen set of nonzero integers with no {i, -i} pair."""
    s = frozenset(members)
    if 0 in s:
        raise ValueError("signed subset cannot contain 0")
    if any(-m in s for m in s):
        raise ValueError(f"signed subset contains a +/- pair: {sorted(s)}")
    return s


@dataclass(frozen=True, slots=True)
class SignedPermutation:
    """Word of distinct-magnitude signed integers, leftmost letter first."""

    word: tuple[int, ...]

    def __post_init__(self):
        mags = [abs(v) for v in self.word]
        if 0 in mags:
            raise ValueError("zero entry in signed permutation")
        if len(set(mags)) != len(mags):
            raise ValueError(f"duplicate magnitude in word {self.word}")

    @property
    def r(self) -> int:
        return len(self.word)

    @property
    def support(self) -> IndexSet:
        return tuple(sorted(abs(v) for v in self.word))

    def entry(self, i: int) -> int:
        """Right-anchored letter x_i, 1 <= i <= r."""
        if not 1 <= i <= len(self.word):
            raise IndexError(f"position {i} out of range for r={len(self.word)}")
        return self.word[len(self.word) - i]

    def __str__(self) -> str:
        return format_sp(self)

    def to_json(self) -> dict:
        obj: dict = {"word": list(self.word)}
        if is_snake(self):
            obj["snake"] = True
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "SignedPermutation":
        return cls(tuple(obj["word"]))


#: Alias used in signatures where the argument must satisfy ``is_snake``.
BSnake = SignedPermutation

EMPTY = SignedPermutation(())


def parse_sp(text: str) -> SignedPermutation:
    """Parse bracket notation like ``[1/-32/-5-4]`` into a signed permutation.

    Entries are single digits 1-9 with an optional minus sign.  Block
    separators ``/`` are optional but, when present, must sit at the
    right-anchored length-2 block boundaries.  They are validated and
    discarded.
    """
    if not text.startswith("["):
        raise ParseError("expected leading '['", 0)
    if not text.endswith("]"):
        raise ParseError("expected trailing ']'", len(text) - 1)
    inner = text[1:-1]
    word: list[int] = []
    slash_positions: list[int] = []  # number of letters seen before each '/'
    i = 0
    while i < len(inner):
        ch = inner[i]
        if ch == "/":
            slash_positions.append(len(word))
            i += 1
            continue
        sign = 1
        if ch == "-":
            sign = -1
            i += 1
            if i >= len(inner) or not inner[i].isdigit():
                raise ParseError("dangling '-'", i)
            ch = inner[i]
        if not ch.isdigit():
            raise ParseError(f"unexpected character {ch!r}", i + 1)
        if ch == "0":
            raise ParseError("zero entry", i + 1)
        word.append(sign * int(ch))
        i += 1
    r = len(word)
    for pos in slash_positions:
        if pos == 0 or pos == r:
            raise ParseError("empty block")
        if (r - pos) % 2 != 0:
            raise ParseError(f"block separator after letter {pos} does not sit "
                             "on a right-anchored pair boundary")
    mags = [abs(v) for v in word]
    for j, m in enumerate(mags):
        if m in mags[:j]:
            raise ParseError(f"duplicate magnitude {m}", j + 1)
    return SignedPermutation(tuple(word))


def format_sp(x: SignedPermutation) -> str:
    """Canonical bracket notation; the rightmost block has length 2."""
    w = x.word
    if not w:
        return "[]"
    head = len(w) % 2  # leftmost block is a singleton iff r is odd
    blocks = []
    start = 0
    if head:
        blocks.append(w[:1])
        start = 1
    for j in range(start, len(w), 2):
        blocks.append(w[j:j + 2])
    return "[" + "/".join("".join(str(v) for v in b) for b in blocks) + "]"


def bar(x: SignedPermutation) -> SignedPermutation:
    """Negate every letter."""
    return SignedPermutation(tuple(-v for v in x.word))


def star(x: SignedPermutation) -> SignedPermutation:
    """Swap the two letters of every length-2 block; negate the leader for odd r.

    This is the companion word whose nested vertex families F_i pair with
    those of x to span a cross-polytope boundary (see oracle.chain_of).
    """
    w = list(x.word)
    r = len(w)
    start = r % 2
    if start:
        w[0] = -w[0]
    for j in range(start, r, 2):
        w[j], w[j + 1] = w[j + 1], w[j]
    return SignedPermutation(tuple(w))


def f_set(x: SignedPermutation, i: int) -> SignedSubset:
    """The nested vertex family F_i(x) = {x_1, ..., x_{2i-1}}, negated for even r."""
    r = x.r
    if not 1 <= i <= (r + 1) // 2:
        raise IndexError(f"F_{i} undefined for r={r}")
    tail = x.word[r - (2 * i - 1):]
    if r % 2 == 0:
        tail = tuple(-v for v in tail)
    return frozenset(tail)


def subperm(x: SignedPermutation, J: Iterable[int]) -> SignedPermutation:
    """Letters of magnitude in J, kept in their original relative order."""
    Jset = set(J)
    if not Jset <= set(x.support):
        raise ValueError(f"{sorted(Jset)} is not a subset of the support {x.support}")
    return SignedPermutation(tuple(v for v in x.word if abs(v) in Jset))


def restrict_p(x: SignedPermutation, J: Iterable[int]) -> SignedPermutation:
    """Parity-corrected restriction P_J: the subword of x, or of bar(x) when
    |support| + |J| is odd."""
    Jset = set(J)
    base = x if (x.r + len(Jset)) % 2 == 0 else bar(x)
    return subperm(base, Jset)


def _is_snake_word(w: tuple[int, ...]) -> bool:
    if not w:
        return True
    if w[0] <= 0:
        return False
    for j in range(len(w) - 1):
        if j % 2 == 0:
            if not w[j] > w[j + 1]:
                return False
        else:
            if not w[j] < w[j + 1]:
                return False
    return True


def is_snake(x: SignedPermutation) -> bool:
    """True iff 0 < x_r > x_{r-1} < x_{r-2} > ... holds down to x_1."""
    return _is_snake_word(x.word)


def as_snake(x: SignedPermutation) -> BSnake:
    """Validate the snake alternation; raise otherwise."""
    if not is_snake(x):
        raise ValueError(f"{x} is not a B-snake")
    return x


def _signed_values(mags: Iterable[int]) -> list[int]:
    out = [-m for m in mags] + list(mags)
    out.sort()
    return out


def enumerate_signed_perms(I: Iterable[int], cap: int = ENUMERATION_CAP
                           ) -> Iterator[SignedPermutation]:
    """All 2^r * r! signed permutations on I, in lexicographic word order."""
    elems = index_set(I)
    if len(elems) > cap:
        raise CapExceeded(f"|I| = {len(elems)} exceeds enumeration cap {cap}")
    for w in _words_lex(frozenset(elems)):
        yield SignedPermutation(w)


def _words_lex(remaining: frozenset[int], prefix: tuple[int, ...] = ()
               ) -> Iterator[tuple[int, ...]]:
    if not remaining:
        yield prefix
        return
    for v in _signed_values(remaining):
        yield from _words_lex(remaining - {abs(v)}, prefix + (v,))


def enumerate_snakes(I: Iterable[int]) -> list[BSnake]:
    """All B-snakes on I in lexicographic word order (the frozen basis order).

    Generated by a pruned left-to-right search rather than by filtering the
    full hyperoctahedral group, so the count springer(|I|) stays cheap even
    at r = 7.
    """
    elems = index_set(I)
    out = [SignedPermutation(w) for w in _snake_words(frozenset(elems))]
    return out


def _snake_words(mags: frozenset[int]) -> Iterator[tuple[int, ...]]:
    r = len(mags)
    if r == 0:
        yield ()
        return

    def rec(prefix: tuple[int, ...], remaining: frozenset[int], want_gt: bool
            ) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield prefix
            return
        last = prefix[-1]
        for v in _signed_values(remaining):
            if (last > v) if want_gt else (last < v):
                yield from rec(prefix + (v,), remaining - {abs(v)}, not want_gt)

    for first in sorted(mags):
        yield from rec((first,), mags - {first}, True)


@lru_cache(maxsize=None)
def springer(r: int, cap: int = ENUMERATION_CAP) -> int:
    """Number of B-snakes on any r-element set, by enumeration (memoized)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r > cap:
        raise CapExceeded(f"r = {r} exceeds springer cap {cap}")
    return sum(1 for _ in _snake_words(frozenset(range(1, r + 1))))


def block_sums(x: SignedPermutation) -> tuple[int, ...]:
    """Sums x_{2i-1} + x_{2i} over the length-2 blocks, rightmost block first."""
    w = x.word
    r = len(w)
    out = []
    for i in range(1, r // 2 + 1):
        out.append(w[r - 2 * i] + w[r - (2 * i - 1)])
    return tuple(out)


def order_lt(x: SignedPermutation, y: SignedPermutation) -> bool:
    """The strict comparison x ◁ y that every rewriting step decreases.

    Block sums x_{2i-1} + x_{2i} are compared lexicographically from the
    rightmost block; for even r the comparison is applied to the negated
    words (equivalently, the first differing sum must be larger).  Words
    with equal sum vectors are incomparable.
    """
    if x.support != y.support:
        raise ValueError(f"supports differ: {x.support} vs {y.support}")
    sx, sy = block_sums(x), block_sums(y)
    if x.r % 2 == 0:
        sx = tuple(-s for s in sx)
        sy = tuple(-s for s in sy)
    return sx < sy
