"""Finite-word primitives: run decomposition, reduction, and equivalence keys.

A word is an immutable sequence of small integer symbols over an explicit
alphabet ``{0, ..., alphabet_size - 1}``. Collapsing each maximal run of a
word to a single symbol yields its reduction; two words are
reduced-equivalent when their reductions coincide, and reduced-abelian
equivalent when their reductions are anagrams of each other. For binary
words the reduced class is determined by the pair (first symbol, run count),
which the complexity engines exploit; the general-alphabet operations here
double as the oracle for that fast path.

All operations are pure functions of immutable inputs and are safe for
unrestricted concurrent use. The empty word is rejected everywhere except
``parikh`` (complexity functions start at length 1, so nothing here needs a
reduction of the empty word).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import WordDomainError

Symbol = int


@dataclass(frozen=True)
class Word:
    """An immutable finite word over ``{0, ..., alphabet_size - 1}``."""

    symbols: tuple[Symbol, ...]
    alphabet_size: int = 2

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.alphabet_size < 1:
            raise WordDomainError(f"alphabet_size must be positive, got {self.alphabet_size}")
        if self.symbols:
            if min(self.symbols) < 0 or max(self.symbols) >= self.alphabet_size:
                raise WordDomainError(
                    f"symbols must lie in [0, {self.alphabet_size}), got {self.symbols!r}"
                )

    @classmethod
    def from_text(cls, text: str, alphabet_size: int | None = None) -> "Word":
        """Parse a word from a digit string such as ``"0010110"``."""
        symbols = tuple(int(c) for c in text)
        if alphabet_size is None:
            alphabet_size = max(2, max(symbols) + 1 if symbols else 2)
        return cls(symbols, alphabet_size)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self) -> str:
        if self.alphabet_size <= 10:
            return "".join(str(s) for s in self.symbols)
        return " ".join(str(s) for s in self.symbols)


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal-run factorization of a word.

    ``run_symbols`` holds one symbol per run (adjacent entries distinct) and
    equals the word's reduction; ``run_lengths`` holds the positive length of
    each run. Repeating ``run_symbols[i]`` ``run_lengths[i]`` times and
    concatenating reconstructs the original word.
    """

    run_symbols: Word
    run_lengths: tuple[int, ...]

    def rebuild(self) -> Word:
        out: list[Symbol] = []
        for sym, length in zip(self.run_symbols, self.run_lengths):
            out.extend([sym] * length)
        return Word(tuple(out), self.run_symbols.alphabet_size)


@dataclass(frozen=True)
class ParikhVector:
    """Per-symbol occurrence counts, indexed by symbol value."""

    counts: tuple[int, ...]

    def count(self, symbol: Symbol) -> int:
        return self.counts[symbol]

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class ReducedKey:
    """Canonical representative of a reduced-equivalence class.

    The key is the reduced word itself, so equality is exact and
    collision-free rather than hash-based.
    """

    canonical: Word


@dataclass(frozen=True)
class AbelianReducedKey:
    """Canonical representative of a reduced-abelian equivalence class."""

    reduced_length: int
    reduced_parikh: ParikhVector


def _require_nonempty(w: Word, op: str) -> None:
    if len(w) == 0:
        raise WordDomainError(f"{op} is undefined on the empty word")


def reduce(w: Word) -> Word:
    """Collapse every maximal run of ``w`` to a single symbol."""
    _require_nonempty(w, "reduce")
    out = [w.symbols[0]]
    for s in w.symbols[1:]:
        if s != out[-1]:
            out.append(s)
    return Word(tuple(out), w.alphabet_size)


def run_decomposition(w: Word) -> RunDecomposition:
    """Split ``w`` into its maximal runs."""
    _require_nonempty(w, "run_decomposition")
    syms: list[Symbol] = [w.symbols[0]]
    lengths: list[int] = [1]
    for s in w.symbols[1:]:
        if s == syms[-1]:
            lengths[-1] += 1
        else:
            syms.append(s)
            lengths.append(1)
    return RunDecomposition(Word(tuple(syms), w.alphabet_size), tuple(lengths))


def alternations(w: Word) -> int:
    """Number of adjacent unequal pairs; one less than the number of runs."""
    _require_nonempty(w, "alternations")
    return sum(1 for a, b in zip(w.symbols, w.symbols[1:]) if a != b)


def trim_first(w: Word) -> Word:
    if len(w) < 2:
        raise WordDomainError("trim_first needs a word of length >= 2")
    return Word(w.symbols[1:], w.alphabet_size)


def trim_last(w: Word) -> Word:
    if len(w) < 2:
        raise WordDomainError("trim_last needs a word of length >= 2")
    return Word(w.symbols[:-1], w.alphabet_size)


def parikh(w: Word) -> ParikhVector:
    """Occurrence count of each alphabet symbol; defined for the empty word too."""
    counts = [0] * w.alphabet_size
    for s in w.symbols:
        counts[s] += 1
    return ParikhVector(tuple(counts))


def reduced_key(w: Word) -> ReducedKey:
    """Key whose equality is exactly reduced-equivalence."""
    return ReducedKey(reduce(w))


def abelian_reduced_key(w: Word) -> AbelianReducedKey:
    """Key whose equality is exactly anagram-equivalence of reductions."""
    red = reduce(w)
    return AbelianReducedKey(len(red), parikh(red))
