"""Window-scan engines for factor-style complexity functions.

All four complexity notions are computed the same way: slide every length-n
window over a long finite prefix, put each window into its equivalence class,
and count distinct classes. The class keys are

* ``factor``: the window itself,
* ``abelian``: the window's symbol-count vector,
* ``reduced_factor``: the window's run-length reduction,
* ``reduced_abelian``: the symbol-count vector of the reduction.

A finite scan can only undercount the infinite sequence, so counts are
certified empirically: the scan is repeated at twice the window and must
agree on every value. ``certified_window`` records the smaller of the two
agreeing windows. This is evidence, not proof; proofs live in
:mod:`reduxwords.theorems`.

Window starts are 0-based internally; the public profile maps window length
``n`` (>= 1) to its count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ConfigurationError, StabilizationError
from .sequences import SequenceHandle

Counts = dict[int, int]


@dataclass(frozen=True)
class WindowPolicy:
    """How long a prefix to scan and how to certify the counts.

    In ``stabilize`` mode the first scan uses ``initial_multiplier * n_max``
    symbols and the window doubles until two consecutive scans agree
    everywhere, up to ``max_doublings`` doublings. In ``fixed`` mode a single
    scan is performed at ``fixed_length`` (or the initial window if unset)
    with no agreement check.
    """

    initial_multiplier: int = 32
    max_doublings: int = 6
    mode: str = "stabilize"
    fixed_length: int | None = None

    def __post_init__(self):
        if self.mode not in ("stabilize", "fixed"):
            raise ConfigurationError(f"mode must be 'stabilize' or 'fixed', got {self.mode!r}")
        if self.initial_multiplier < 1:
            raise ConfigurationError("initial_multiplier must be >= 1")
        if self.max_doublings < 1:
            raise ConfigurationError("max_doublings must be >= 1")
        if self.fixed_length is not None and self.mode != "fixed":
            raise ConfigurationError("fixed_length only applies to mode='fixed'")

    def initial_window(self, n_max: int) -> int:
        return self.initial_multiplier * n_max


@dataclass(frozen=True)
class ComplexityProfile:
    """Counts per window length, with the window that certified them."""

    kind: str
    sequence: str
    values: Counts
    certified_window: int

    def value(self, n: int) -> int:
        return self.values[n]

    def as_rows(self) -> list[tuple[int, int]]:
        return sorted(self.values.items())


@dataclass(frozen=True)
class ExtremesTable:
    """Min and max window alternation counts per length."""

    sequence: str
    minima: Counts
    maxima: Counts
    certified_window: int

    def as_rows(self) -> list[tuple[int, int, int]]:
        return [(n, self.minima[n], self.maxima[n]) for n in sorted(self.minima)]


def reduced_complexity_from_extremes(table: ExtremesTable, n: int) -> int:
    """Reduced factor count predicted from window alternation extremes.

    Valid for sequences whose length-n windows realize every alternation
    count between the minimum and the maximum, with both starting symbols.
    """
    return 2 * (table.maxima[n] - table.minima[n] + 1)


class AlternationPrefix:
    """Per-position alternation index over a fixed finite prefix.

    ``alt[i]`` counts adjacent unequal pairs among positions 0..i, so the
    window starting at ``s`` of length ``n`` has ``alt[s+n-1] - alt[s]``
    alternations, and ``alt[s]`` is the index of the run containing position
    ``s``. ``run_symbols`` lists one symbol per run; the reduction of the
    window is exactly ``run_symbols[alt[s] : alt[s+n-1] + 1]``.
    """

    def __init__(self, symbols: Sequence[int], alphabet_size: int):
        if len(symbols) == 0:
            raise ConfigurationError("cannot index an empty prefix")
        if alphabet_size > 256:
            raise ConfigurationError("engines support alphabets of at most 256 symbols")
        self.alphabet_size = alphabet_size
        self.arr = np.asarray(symbols, dtype=np.uint8)
        self.length = len(self.arr)
        boundary = self.arr[1:] != self.arr[:-1]
        self.alt = np.zeros(self.length, dtype=np.int64)
        np.cumsum(boundary, out=self.alt[1:])
        keep = np.empty(self.length, dtype=bool)
        keep[0] = True
        keep[1:] = boundary
        self.run_symbols = self.arr[keep].tobytes()
        self._run_counts: np.ndarray | None = None

    def window_alternations(self, n: int) -> np.ndarray:
        """Alternation counts of every length-n window, by start position."""
        if not (1 <= n <= self.length):
            raise ConfigurationError(f"window length {n} outside prefix of {self.length}")
        starts = self.length - n + 1
        return self.alt[n - 1:] - self.alt[:starts]

    def window_firsts(self, n: int) -> np.ndarray:
        return self.arr[: self.length - n + 1]

    def reduction_bytes(self, s: int, n: int) -> bytes:
        return self.run_symbols[self.alt[s] : self.alt[s + n - 1] + 1]

    def run_prefix_counts(self) -> np.ndarray:
        """Shape (alphabet, runs+1): per-symbol counts over run_symbols prefixes."""
        if self._run_counts is None:
            runs = np.frombuffer(self.run_symbols, dtype=np.uint8)
            table = np.zeros((self.alphabet_size, len(runs) + 1), dtype=np.int64)
            for c in range(self.alphabet_size):
                np.cumsum(runs == c, out=table[c, 1:])
            self._run_counts = table
        return self._run_counts


# -- distinct-window counting, one engine per class key -----------------------

class _SuffixAutomaton:
    """Online suffix automaton; counts distinct substrings of each length."""

    def __init__(self):
        self.next: list[dict[int, int]] = [{}]
        self.link = [-1]
        self.len = [0]
        self.last = 0

    def extend(self, c: int) -> None:
        cur = len(self.len)
        self.next.append({})
        self.len.append(self.len[self.last] + 1)
        self.link.append(-1)
        p = self.last
        while p != -1 and c not in self.next[p]:
            self.next[p][c] = cur
            p = self.link[p]
        if p == -1:
            self.link[cur] = 0
        else:
            q = self.next[p][c]
            if self.len[p] + 1 == self.len[q]:
                self.link[cur] = q
            else:
                clone = len(self.len)
                self.next.append(dict(self.next[q]))
                self.len.append(self.len[p] + 1)
                self.link.append(self.link[q])
                while p != -1 and self.next[p].get(c) == q:
                    self.next[p][c] = clone
                    p = self.link[p]
                self.link[q] = clone
                self.link[cur] = clone
        self.last = cur

    def counts_by_length(self, max_len: int) -> np.ndarray:
        """Entry n-1 is the number of distinct substrings of length n <= max_len."""
        diff = np.zeros(max_len + 2, dtype=np.int64)
        for v in range(1, len(self.len)):
            lo = self.len[self.link[v]] + 1
            hi = self.len[v]
            if lo > max_len:
                continue
            diff[lo] += 1
            diff[min(hi, max_len) + 1] -= 1
        return np.cumsum(diff[1 : max_len + 1])


def factor_counts(symbols: Sequence[int], n_values: Iterable[int]) -> Counts:
    """Distinct windows of each requested length, via a suffix automaton."""
    wanted = sorted(set(n_values))
    if wanted and wanted[-1] > len(symbols):
        raise ConfigurationError("window length exceeds the scanned prefix")
    sa = _SuffixAutomaton()
    for c in symbols:
        sa.extend(int(c))
    table = sa.counts_by_length(wanted[-1]) if wanted else np.zeros(0, dtype=np.int64)
    return {n: int(table[n - 1]) for n in wanted}


def factor_counts_by_windows(symbols: Sequence[int], n_values: Iterable[int]) -> Counts:
    """Set-of-windows oracle for :func:`factor_counts`; quadratic but direct."""
    buf = bytes(int(c) for c in symbols)
    out: Counts = {}
    for n in sorted(set(n_values)):
        out[n] = len({buf[s : s + n] for s in range(len(buf) - n + 1)})
    return out


def abelian_counts_by_sliding(
    symbols: Sequence[int], n_values: Iterable[int], alphabet_size: int
) -> Counts:
    """Distinct symbol-count vectors per length, by an incremental counter."""
    syms = [int(c) for c in symbols]
    length = len(syms)
    out: Counts = {}
    for n in sorted(set(n_values)):
        counts = [0] * alphabet_size
        for c in syms[:n]:
            counts[c] += 1
        seen = {tuple(counts)}
        for s in range(1, length - n + 1):
            counts[syms[s - 1]] -= 1
            counts[syms[s + n - 1]] += 1
            seen.add(tuple(counts))
        out[n] = len(seen)
    return out


def _abelian_counts_binary(index: AlternationPrefix, n_values: Iterable[int]) -> Counts:
    ones = np.zeros(index.length + 1, dtype=np.int64)
    np.cumsum(index.arr, out=ones[1:])
    out: Counts = {}
    for n in sorted(set(n_values)):
        k = ones[n:] - ones[: index.length - n + 1]
        out[n] = int(np.count_nonzero(np.bincount(k, minlength=n + 1)))
    return out


def reduced_factor_counts_by_keys(symbols: Sequence[int], n_values: Iterable[int]) -> Counts:
    """Distinct window reductions per length, as run-symbol slices."""
    index = AlternationPrefix(symbols, 256)
    alt = index.alt.tolist()
    runs = index.run_symbols
    out: Counts = {}
    for n in sorted(set(n_values)):
        seen = set()
        off = n - 1
        for s in range(index.length - n + 1):
            seen.add(runs[alt[s] : alt[s + off] + 1])
        out[n] = len(seen)
    return out


def _reduced_factor_counts_binary(index: AlternationPrefix, n_values: Iterable[int]) -> Counts:
    # A binary reduction is an alternating word, pinned down by its first
    # symbol and its length; the key packs both into one small integer.
    out: Counts = {}
    for n in sorted(set(n_values)):
        d = index.window_alternations(n)
        keys = index.window_firsts(n).astype(np.int64) * (n + 1) + d
        out[n] = int(np.count_nonzero(np.bincount(keys, minlength=2 * (n + 1))))
    return out


def reduced_abelian_counts_by_keys(
    symbols: Sequence[int], n_values: Iterable[int], alphabet_size: int
) -> Counts:
    """Distinct reduction symbol-count vectors per length."""
    index = AlternationPrefix(symbols, alphabet_size)
    table = index.run_prefix_counts()
    out: Counts = {}
    for n in sorted(set(n_values)):
        starts = index.length - n + 1
        lo = index.alt[:starts]
        hi = index.alt[n - 1 :] + 1
        cols = [table[c][hi] - table[c][lo] for c in range(alphabet_size)]
        stacked = np.stack(cols, axis=1)
        out[n] = len(np.unique(stacked, axis=0))
    return out


def _reduced_abelian_counts_binary(index: AlternationPrefix, n_values: Iterable[int]) -> Counts:
    # A binary reduction alternates, so its count vector is fixed by the run
    # count r alone when r is even and by (r, first symbol) when r is odd.
    # Key 3r + (0 | 1 + first) keeps the three cases per r disjoint.
    out: Counts = {}
    for n in sorted(set(n_values)):
        r = index.window_alternations(n) + 1
        tag = np.where(r & 1 == 1, index.window_firsts(n).astype(np.int64) + 1, 0)
        out[n] = int(np.count_nonzero(np.bincount(3 * r + tag, minlength=3 * n + 3)))
    return out


# -- certification driver ------------------------------------------------------

def _scan_until_stable(
    handle: SequenceHandle,
    n_max: int,
    policy: WindowPolicy,
    scan: Callable[[Sequence[int]], object],
):
    """Run ``scan`` on growing prefixes until two consecutive results agree.

    Returns ``(result, certified_window)`` where the result was identical at
    ``certified_window`` and at twice it. Raises StabilizationError after
    ``max_doublings`` unsuccessful doublings, carrying the last result.
    """
    if policy.mode == "fixed":
        window = policy.fixed_length if policy.fixed_length is not None else policy.initial_window(n_max)
        if window < n_max:
            raise ConfigurationError(f"fixed window {window} is shorter than n_max={n_max}")
        return scan(handle.prefix_symbols(window)), window

    window = policy.initial_window(n_max)
    prev = scan(handle.prefix_symbols(window))
    for _ in range(policy.max_doublings):
        nxt_window = window * 2
        nxt = scan(handle.prefix_symbols(nxt_window))
        if nxt == prev:
            return prev, window
        prev, window = nxt, nxt_window
    raise StabilizationError(
        f"counts for {handle.name!r} did not stabilize by window {window} "
        f"(n_max={n_max}, {policy.max_doublings} doublings)",
        partial_values=prev,
        window=window,
    )


def _profile(handle, n_max, policy, kind, scan) -> ComplexityProfile:
    if n_max < 1:
        raise ConfigurationError("n_max must be >= 1")
    policy = policy or WindowPolicy()
    values, window = _scan_until_stable(handle, n_max, policy, scan)
    return ComplexityProfile(kind=kind, sequence=handle.name, values=values, certified_window=window)


def factor_complexity(
    handle: SequenceHandle, n_max: int, policy: WindowPolicy | None = None
) -> ComplexityProfile:
    """Distinct windows of each length 1..n_max."""
    ns = range(1, n_max + 1)
    return _profile(handle, n_max, policy, "factor", lambda sym: factor_counts(sym, ns))


def abelian_complexity(
    handle: SequenceHandle, n_max: int, policy: WindowPolicy | None = None
) -> ComplexityProfile:
    """Distinct window symbol-count vectors of each length 1..n_max."""
    ns = range(1, n_max + 1)
    if handle.alphabet_size == 2:
        scan = lambda sym: _abelian_counts_binary(AlternationPrefix(sym, 2), ns)
    else:
        scan = lambda sym: abelian_counts_by_sliding(sym, ns, handle.alphabet_size)
    return _profile(handle, n_max, policy, "abelian", scan)


def reduced_factor_complexity(
    handle: SequenceHandle, n_max: int, policy: WindowPolicy | None = None
) -> ComplexityProfile:
    """Distinct window reductions of each length 1..n_max."""
    ns = range(1, n_max + 1)
    if handle.alphabet_size == 2:
        scan = lambda sym: _reduced_factor_counts_binary(AlternationPrefix(sym, 2), ns)
    else:
        scan = lambda sym: reduced_factor_counts_by_keys(sym, ns)
    return _profile(handle, n_max, policy, "reduced_factor", scan)


def reduced_abelian_complexity(
    handle: SequenceHandle, n_max: int, policy: WindowPolicy | None = None
) -> ComplexityProfile:
    """Distinct reduction symbol-count vectors of each length 1..n_max."""
    ns = range(1, n_max + 1)
    if handle.alphabet_size == 2:
        scan = lambda sym: _reduced_abelian_counts_binary(AlternationPrefix(sym, 2), ns)
    else:
        scan = lambda sym: reduced_abelian_counts_by_keys(sym, ns, handle.alphabet_size)
    return _profile(handle, n_max, policy, "reduced_abelian", scan)


def alternation_extremes(
    handle: SequenceHandle, n_max: int, policy: WindowPolicy | None = None
) -> ExtremesTable:
    """Least and greatest alternation count over windows of each length."""
    if n_max < 1:
        raise ConfigurationError("n_max must be >= 1")
    policy = policy or WindowPolicy()

    def scan(symbols: Sequence[int]) -> tuple[Counts, Counts]:
        index = AlternationPrefix(symbols, handle.alphabet_size)
        minima: Counts = {}
        maxima: Counts = {}
        for n in range(1, n_max + 1):
            d = index.window_alternations(n)
            minima[n] = int(d.min())
            maxima[n] = int(d.max())
        return minima, maxima

    (minima, maxima), window = _scan_until_stable(handle, n_max, policy, scan)
    return ExtremesTable(sequence=handle.name, minima=minima, maxima=maxima, certified_window=window)
