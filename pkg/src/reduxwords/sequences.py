"""Deterministic generators for 1-indexed infinite sequences.

Every sequence is accessed through a :class:`SequenceHandle`, which owns a
growable cached prefix and a hard materialization cap. Indexing is 1-based
throughout the public API; internal buffers are 0-based and the boundary is
fixed here.

Three constructions are provided:

* direct arithmetic rules (the production generators for the two builtin
  sequences ``tm`` and ``pf``),
* fixed points of prolongable morphisms,
* iterated gap-filling with an eventually periodic filler (the Toeplitz
  construction; each pass writes the filler, restarted from its beginning,
  into every other remaining gap).

The builtin sequences each come with a second, independent construction so
the two can be cross-checked against one another. Arbitrary eventually
periodic Toeplitz fillers are supported as an extension beyond the
alternating 0/1 filler the builtin sequence needs.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .errors import CapacityError, ConfigurationError, SpecFileError, WordDomainError
from .words import Symbol, Word

DEFAULT_MAX_PREFIX = 1 << 26
MAX_PREFIX_ENV_VAR = "REDUXWORDS_MAX_PREFIX"


def _default_cap() -> int:
    raw = os.environ.get(MAX_PREFIX_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_PREFIX
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{MAX_PREFIX_ENV_VAR} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ConfigurationError(f"{MAX_PREFIX_ENV_VAR} must be positive, got {cap}")
    return cap


class SequenceHandle:
    """Lazily materialized, 1-indexed infinite sequence.

    The cached prefix grows by doubling and is shared by all queries; a
    position's value never changes once computed. Cache growth is
    synchronized, so concurrent reads at arbitrary indices are safe and
    deterministic.
    """

    def __init__(
        self,
        name: str,
        alphabet_size: int,
        extender: Callable[[list[int], int], None],
        max_prefix: int | None = None,
    ):
        if alphabet_size < 1:
            raise ConfigurationError("alphabet_size must be positive")
        self.name = name
        self.alphabet_size = alphabet_size
        self._extend = extender
        self._cap = max_prefix if max_prefix is not None else _default_cap()
        self._buf: list[int] = []
        self._lock = threading.Lock()

    def _ensure(self, length: int) -> None:
        if len(self._buf) >= length:
            return
        if length > self._cap:
            raise CapacityError(
                f"sequence {self.name!r}: prefix of {length} symbols exceeds the "
                f"cap of {self._cap} (raise {MAX_PREFIX_ENV_VAR} or max_prefix)"
            )
        with self._lock:
            if len(self._buf) >= length:
                return
            target = max(64, len(self._buf))
            while target < length:
                target *= 2
            target = min(target, self._cap)
            self._extend(self._buf, target)
            assert len(self._buf) >= length

    def at(self, n: int) -> Symbol:
        """Symbol at 1-based index ``n``."""
        if n < 1:
            raise ValueError(f"sequence indices are 1-based, got n={n}")
        self._ensure(n)
        return self._buf[n - 1]

    def prefix(self, length: int) -> Word:
        """The word formed by indices 1..length."""
        if length < 1:
            raise WordDomainError("prefix length must be >= 1")
        self._ensure(length)
        return Word(tuple(self._buf[:length]), self.alphabet_size)

    def prefix_symbols(self, length: int) -> list[int]:
        """Prefix as a plain list; cheaper than :meth:`prefix` for engines."""
        if length < 1:
            raise WordDomainError("prefix length must be >= 1")
        self._ensure(length)
        return self._buf[:length]

    def __repr__(self) -> str:
        return f"SequenceHandle({self.name!r}, alphabet_size={self.alphabet_size})"


def from_pointwise(
    rule: Callable[[int], int],
    alphabet_size: int,
    name: str,
    max_prefix: int | None = None,
) -> SequenceHandle:
    """Handle for a sequence given by a direct rule ``n -> symbol`` (n >= 1)."""

    def extend(buf: list[int], target: int) -> None:
        for n in range(len(buf) + 1, target + 1):
            buf.append(rule(n))

    return SequenceHandle(name, alphabet_size, extend, max_prefix=max_prefix)


# -- builtin arithmetic rules -------------------------------------------------

def thue_morse_at(n: int) -> Symbol:
    """Bit-count parity of n-1; the n-th symbol (1-based) of the tm sequence."""
    if n < 1:
        raise ValueError(f"sequence indices are 1-based, got n={n}")
    return bin(n - 1).count("1") & 1


def paperfolding_at(n: int) -> Symbol:
    """0 when the odd part of n is 1 mod 4, else 1."""
    if n < 1:
        raise ValueError(f"sequence indices are 1-based, got n={n}")
    odd = n // (n & -n)
    return (odd >> 1) & 1


def thue_morse(max_prefix: int | None = None) -> SequenceHandle:
    return from_pointwise(thue_morse_at, 2, "tm", max_prefix=max_prefix)


def paperfolding(max_prefix: int | None = None) -> SequenceHandle:
    return from_pointwise(paperfolding_at, 2, "pf", max_prefix=max_prefix)


# -- morphic fixed points -----------------------------------------------------

@dataclass(frozen=True)
class Morphism:
    """Substitution sending each symbol to a nonempty word."""

    images: Mapping[Symbol, tuple[Symbol, ...]]
    alphabet_size: int

    def __post_init__(self):
        object.__setattr__(self, "images", dict(self.images))
        for sym, image in self.images.items():
            if not (0 <= sym < self.alphabet_size):
                raise ConfigurationError(f"morphism domain symbol {sym} out of alphabet")
            if len(image) == 0:
                raise ConfigurationError(f"image of {sym} is empty")
            if any(not (0 <= s < self.alphabet_size) for s in image):
                raise ConfigurationError(f"image of {sym} leaves the alphabet: {image}")

    def apply(self, w: Word) -> Word:
        out: list[Symbol] = []
        for s in w.symbols:
            if s not in self.images:
                raise ConfigurationError(f"morphism has no image for symbol {s}")
            out.extend(self.images[s])
        return Word(tuple(out), self.alphabet_size)

    def is_prolongable_at(self, seed: Symbol) -> bool:
        image = self.images.get(seed)
        return image is not None and len(image) >= 2 and image[0] == seed


def thue_morse_morphism() -> Morphism:
    return Morphism({0: (0, 1), 1: (1, 0)}, 2)


def morphic_fixed_point(
    m: Morphism,
    seed: Symbol,
    name: str | None = None,
    max_prefix: int | None = None,
) -> SequenceHandle:
    """Handle for the fixed point obtained by iterating ``m`` on ``seed``.

    Requires the morphism to be prolongable at the seed (the seed's image
    starts with the seed and has length >= 2) and to have an image for every
    symbol reachable from the seed.
    """
    if not m.is_prolongable_at(seed):
        raise ConfigurationError(
            f"morphism is not prolongable at seed {seed}: its image must "
            f"start with the seed and have length >= 2"
        )
    reachable = {seed}
    frontier = [seed]
    while frontier:
        sym = frontier.pop()
        image = m.images.get(sym)
        if image is None:
            raise ConfigurationError(f"no image for reachable symbol {sym}")
        for s in image:
            if s not in reachable:
                reachable.add(s)
                frontier.append(s)

    state = {"consumed": 0}

    def extend(buf: list[int], target: int) -> None:
        # buf is always a prefix of the fixed point: it starts as the seed's
        # image and grows by appending the image of the next unconsumed symbol.
        if not buf:
            buf.extend(m.images[seed])
            state["consumed"] = 1
        while len(buf) < target:
            buf.extend(m.images[buf[state["consumed"]]])
            state["consumed"] += 1

    if name is None:
        name = f"morphic(seed={seed})"
    return SequenceHandle(name, m.alphabet_size, extend, max_prefix=max_prefix)


def thue_morse_morphic(max_prefix: int | None = None) -> SequenceHandle:
    """Independent construction of tm, for cross-checking the arithmetic rule."""
    return morphic_fixed_point(thue_morse_morphism(), 0, name="tm-morphic", max_prefix=max_prefix)


# -- Toeplitz construction ----------------------------------------------------

@dataclass(frozen=True)
class ToeplitzSpec:
    """Eventually periodic filler for the iterated gap-filling construction.

    Each pass writes ``preperiod`` followed by cyclic repetitions of
    ``period`` into every other remaining gap (the 1st, 3rd, 5th, ...),
    restarting from the beginning of the filler on every pass.
    """

    period: tuple[Symbol, ...]
    preperiod: tuple[Symbol, ...] = ()
    alphabet_size: int = 2

    def __post_init__(self):
        if len(self.period) == 0:
            raise ConfigurationError("toeplitz period must be nonempty")
        for s in self.preperiod + self.period:
            if not (0 <= s < self.alphabet_size):
                raise ConfigurationError(f"filler symbol {s} out of alphabet")

    def filler_at(self, i: int) -> Symbol:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]


def _toeplitz_fill(spec: ToeplitzSpec, length: int) -> list[int]:
    # A position's value is final once written, and the k-th remaining gap of
    # the finite buffer is the k-th remaining gap of the infinite sequence, so
    # prefixes of different lengths agree.
    buf = [0] * length
    gaps = list(range(length))
    while gaps:
        for j, pos in enumerate(gaps[0::2]):
            buf[pos] = spec.filler_at(j)
        gaps = gaps[1::2]
    return buf


def toeplitz(
    spec: ToeplitzSpec,
    name: str = "toeplitz",
    max_prefix: int | None = None,
) -> SequenceHandle:
    """Handle for the limit of the iterated gap-filling passes."""

    def extend(buf: list[int], target: int) -> None:
        buf[:] = _toeplitz_fill(spec, target)

    return SequenceHandle(name, spec.alphabet_size, extend, max_prefix=max_prefix)


def paperfolding_toeplitz_spec() -> ToeplitzSpec:
    return ToeplitzSpec(period=(0, 1), alphabet_size=2)


def paperfolding_toeplitz(max_prefix: int | None = None) -> SequenceHandle:
    """Independent construction of pf, for cross-checking the arithmetic rule."""
    return toeplitz(paperfolding_toeplitz_spec(), name="pf-toeplitz", max_prefix=max_prefix)


# -- sequence spec files ------------------------------------------------------

BUILTIN_SEQUENCES: dict[str, Callable[..., SequenceHandle]] = {
    "tm": thue_morse,
    "pf": paperfolding,
}


def _parse_symbol_string(raw: str, key: str) -> tuple[Symbol, ...]:
    raw = raw.strip()
    if not raw:
        return ()
    try:
        if "," in raw:
            return tuple(int(part) for part in raw.split(","))
        return tuple(int(c) for c in raw)
    except ValueError as exc:
        raise SpecFileError(
            f"{key}: expected a digit string or comma-separated integers, got {raw!r}"
        ) from exc


def parse_sequence_spec(text: str, name: str = "spec", max_prefix: int | None = None) -> SequenceHandle:
    """Build a handle from the key/value spec format.

    Lines are ``key = value``; blank lines and ``#`` comments are ignored.
    ``kind`` selects the construction: ``builtin`` (key ``name``: tm or pf),
    ``morphic`` (keys ``alphabet_size``, ``seed``, and one ``image.<symbol>``
    per symbol), or ``toeplitz`` (keys ``alphabet_size``, ``period``,
    optional ``preperiod``). Symbol strings are digit strings, or
    comma-separated integers for alphabets past 10.
    """
    entries: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpecFileError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = line.split("=", 1)
        entries[key.strip()] = value.strip()

    kind = entries.pop("kind", None)
    if kind is None:
        raise SpecFileError("missing required key 'kind'")

    def take_int(key: str) -> int:
        if key not in entries:
            raise SpecFileError(f"kind {kind!r} requires key {key!r}")
        raw = entries.pop(key)
        try:
            return int(raw)
        except ValueError as exc:
            raise SpecFileError(f"{key}: expected an integer, got {raw!r}") from exc

    if kind == "builtin":
        builtin = entries.pop("name", None)
        if builtin not in BUILTIN_SEQUENCES:
            raise SpecFileError(
                f"builtin name must be one of {sorted(BUILTIN_SEQUENCES)}, got {builtin!r}"
            )
        _reject_extras(entries)
        return BUILTIN_SEQUENCES[builtin](max_prefix=max_prefix)

    if kind == "morphic":
        alphabet_size = take_int("alphabet_size")
        seed = take_int("seed")
        images: dict[int, tuple[int, ...]] = {}
        for key in list(entries):
            if key.startswith("image."):
                try:
                    sym = int(key[len("image."):])
                except ValueError as exc:
                    raise SpecFileError(f"bad image key {key!r}") from exc
                images[sym] = _parse_symbol_string(entries.pop(key), key)
        if not images:
            raise SpecFileError("kind 'morphic' requires at least one image.<symbol> key")
        _reject_extras(entries)
        try:
            morphism = Morphism(images, alphabet_size)
            return morphic_fixed_point(morphism, seed, name=name, max_prefix=max_prefix)
        except ConfigurationError as exc:
            raise SpecFileError(str(exc)) from exc

    if kind == "toeplitz":
        alphabet_size = take_int("alphabet_size")
        period = _parse_symbol_string(entries.pop("period", ""), "period")
        preperiod = _parse_symbol_string(entries.pop("preperiod", ""), "preperiod")
        _reject_extras(entries)
        try:
            spec = ToeplitzSpec(period=period, preperiod=preperiod, alphabet_size=alphabet_size)
        except ConfigurationError as exc:
            raise SpecFileError(str(exc)) from exc
        return toeplitz(spec, name=name, max_prefix=max_prefix)

    raise SpecFileError(f"unknown kind {kind!r} (expected builtin, morphic, or toeplitz)")


def _reject_extras(entries: dict[str, str]) -> None:
    if entries:
        raise SpecFileError(f"unrecognized keys: {sorted(entries)}")


def load_sequence_spec(path: str, max_prefix: int | None = None) -> SequenceHandle:
    """Read a spec file from disk; see :func:`parse_sequence_spec` for the format."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecFileError(f"cannot read spec file {path!r}: {exc}") from exc
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_sequence_spec(text, name=name, max_prefix=max_prefix)
