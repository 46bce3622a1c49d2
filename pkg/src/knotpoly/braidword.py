"""Braid words: parsing, combinatorial attributes and Markov-move constructors."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterator, Sequence


class ParseError(ValueError):
    """Malformed braid text or table row."""


class StrandMismatch(ValueError):
    """Two braids with different strand counts were combined."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the standard generators of B_n.

    Letter ``g > 0`` is sigma_g, ``g < 0`` is the inverse of sigma_|g|.
    Words are kept unreduced.
    """

    n: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(g) for g in self.word))
        if self.n < 1:
            raise ValueError(f"strand count must be positive, got {self.n}")
        for g in self.word:
            if g == 0 or abs(g) > self.n - 1:
                raise ValueError(f"letter {g} out of range for {self.n} strands")

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise StrandMismatch(f"cannot concatenate B_{self.n} and B_{other.n} words")
        return BraidWord(self.n, self.word + other.word)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-g for g in reversed(self.word)))

    def text(self) -> str:
        return " ".join(str(g) for g in self.word)

    def __str__(self) -> str:
        return f"B{self.n}[{self.text()}]"


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def parse_braid(text: str, n_override: int | None = None) -> BraidWord:
    """Parse whitespace-separated nonzero integers into a braid word.

    Without ``n_override`` the strand count is ``1 + max |g|``.
    """
    letters = []
    for tok in text.split():
        try:
            g = int(tok)
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}") from None
        if g == 0:
            raise ParseError("generator index 0 is not allowed")
        letters.append(g)
    if n_override is None:
        n = 1 + max((abs(g) for g in letters), default=0)
    else:
        n = int(n_override)
        if n < 1:
            raise ParseError(f"strand count must be positive, got {n}")
        bad = [g for g in letters if abs(g) >= n]
        if bad:
            raise ParseError(f"generator {bad[0]} out of range for {n} strands")
    return BraidWord(n, tuple(letters))


def writhe(b: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in b.word)


def permutation(b: BraidWord) -> tuple[int, ...]:
    """Image in the symmetric group, as a 0-based tuple ``perm[start] = end``.

    Strand starting at position ``i`` (top) ends at position ``perm[i]``.
    """
    pos = list(range(b.n))  # pos[p] = strand currently at position p
    for g in b.word:
        i = abs(g) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * b.n
    for p, strand in enumerate(pos):
        perm[strand] = p
    return tuple(perm)


def cycle_type(perm: Sequence[int]) -> list[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, size = start, 0
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            size += 1
        lengths.append(size)
    return sorted(lengths)


def closure_components(b: BraidWord) -> int:
    return len(cycle_type(permutation(b)))


def conjugate(b: BraidWord, g: BraidWord) -> BraidWord:
    """The word ``g b g^-1``."""
    if b.n != g.n:
        raise StrandMismatch(f"conjugator has {g.n} strands, braid has {b.n}")
    return g * b * g.inverse()


def stabilize(b: BraidWord, sign: int) -> BraidWord:
    """Markov stabilisation: add a strand and append sigma_n^(+-1)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return BraidWord(b.n + 1, b.word + (sign * b.n,))


class LCG:
    """64-bit linear congruential generator (Knuth's MMIX constants).

    ``state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64``;
    outputs are the top 31 bits of the new state.  Kept deliberately simple so
    other implementations can reproduce the same words.
    """

    A = 6364136223846793005
    C = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.A * self.state + self.C) & self.MASK
        return self.state >> 33

    def below(self, k: int) -> int:
        return self.next() % k


def random_braid(n: int, length: int, seed: int | LCG) -> BraidWord:
    """Deterministic pseudo-random word with letters uniform over +-{1..n-1}."""
    if n < 1 or length < 0:
        raise ValueError("need n >= 1 and length >= 0")
    if n == 1:
        return identity(1)
    rng = seed if isinstance(seed, LCG) else LCG(seed)
    letters = []
    for _ in range(length):
        k = rng.below(2 * (n - 1))
        g = k // 2 + 1
        letters.append(g if k % 2 == 0 else -g)
    return BraidWord(n, tuple(letters))


@dataclass(frozen=True)
class TableEntry:
    name: str
    n: int
    word: str

    def braid(self) -> BraidWord:
        return parse_braid(self.word, self.n)


@dataclass(frozen=True)
class RowError:
    line: int
    text: str
    message: str


TABLE_HEADER = ("name", "n", "word")


def read_table(stream: io.TextIOBase) -> Iterator[TableEntry | RowError]:
    """Yield entries (or row errors) from a ``name<TAB>n<TAB>word`` TSV stream.

    Rows that fail to parse are yielded as :class:`RowError` so the caller can
    report them and continue.
    """
    reader = csv.reader(stream, delimiter="\t", quoting=csv.QUOTE_NONE)
    header = next(reader, None)
    if header is None:
        return
    if tuple(h.strip() for h in header) != TABLE_HEADER:
        raise ParseError(f"bad table header: {header!r}")
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) == 2:
            row = row + [""]
        if len(row) != 3:
            yield RowError(lineno, "\t".join(row), "expected 3 tab-separated fields")
            continue
        name, n_text, word = row
        try:
            n = int(n_text)
            entry = TableEntry(name.strip(), n, word.strip())
            entry.braid()
        except (ValueError, ParseError) as exc:
            yield RowError(lineno, "\t".join(row), str(exc))
            continue
        yield entry
