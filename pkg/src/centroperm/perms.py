"""
Exact arithmetic on permutations in one-line notation.

A permutation of size n is represented as a tuple of the integers 1..n,
where entry i (0-indexed) is the value at position i+1. The empty tuple
is the empty permutation. All functions treat permutations as immutable
values; tuples give structural equality, hashing and lexicographic order
for free.

Text format: entries separated by spaces or commas, e.g. "4 9 3 1 2 5 8 7 6",
or a compact digit string like "231" when every entry is at most 9.
Canonical output is space-separated integers.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional, Sequence

Perm = tuple[int, ...]

EMPTY: Perm = ()


def permutation(values: Iterable[int]) -> Perm:
    """
    Validate and return a permutation of 1..n.

    >>> permutation([2, 3, 1])
    (2, 3, 1)
    >>> permutation([])
    ()
    """
    p = tuple(values)
    n = len(p)
    seen = [False] * (n + 1)
    for v in p:
        if not isinstance(v, int) or v < 1 or v > n:
            raise ValueError(f"entry {v!r} is out of range for a permutation of size {n}")
        if seen[v]:
            raise ValueError(f"duplicate entry {v}")
        seen[v] = True
    return p


def parse_permutation(text: str) -> Perm:
    """
    Parse a permutation from text.

    Entries may be separated by spaces and/or commas; a bare digit string
    is read one digit per entry (only possible when all entries are <= 9).

    >>> parse_permutation("1")
    (1,)
    >>> parse_permutation("231")
    (2, 3, 1)
    >>> parse_permutation("10 9 8 7 6 5 4 3 2 1")[0]
    10
    """
    stripped = text.strip()
    if not stripped:
        return EMPTY
    if any(sep in stripped for sep in (" ", ",", "\t")):
        tokens = [t for t in stripped.replace(",", " ").split() if t]
    elif stripped.isdigit():
        tokens = list(stripped)
    else:
        tokens = [stripped]
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ValueError(f"cannot read {tok!r} as a permutation entry") from None
    n = len(values)
    seen = [False] * (n + 1)
    for tok, v in zip(tokens, values):
        if v < 1 or v > n:
            raise ValueError(f"entry {tok!r} is out of range for a permutation of size {n}")
        if seen[v]:
            raise ValueError(f"duplicate entry {tok!r}")
        seen[v] = True
    return tuple(values)


def fmt_perm(p: Perm) -> str:
    """Canonical text form: space-separated entries ("" for the empty permutation)."""
    return " ".join(str(v) for v in p)


def flatten(values: Sequence[int]) -> Perm:
    """
    The pattern of a sequence of distinct integers: replace each entry by
    its rank.

    >>> flatten((40, 10, 25))
    (3, 1, 2)
    """
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for rank, idx in enumerate(order, 1):
        out[idx] = rank
    return tuple(out)


def reverse_complement(p: Perm) -> Perm:
    """
    Rotate the diagram of p by a half turn: entry i becomes n+1-p(n+1-i).

    >>> reverse_complement((3, 1, 2))
    (2, 3, 1)
    >>> reverse_complement((2, 4, 1, 3))
    (2, 4, 1, 3)
    """
    n = len(p)
    return tuple(n + 1 - p[n - 1 - i] for i in range(n))


def is_centrosymmetric(p: Perm) -> bool:
    """
    True if p equals its reverse-complement. For odd n = 2k+1 this forces
    p(k+1) = k+1. The empty permutation is centrosymmetric.
    """
    n = len(p)
    return all(p[i] == n + 1 - p[n - 1 - i] for i in range((n + 1) // 2))


def find_occurrence(host: Perm, pattern: Perm) -> Optional[tuple[int, ...]]:
    """
    Search for an occurrence of pattern in host and return the
    lexicographically least witness as 1-based positions, or None.

    >>> find_occurrence((4, 9, 3, 1, 2, 5, 8, 7, 6), (4, 1, 2, 3))
    (2, 3, 6, 7)
    >>> find_occurrence((3, 1, 2), (2, 1)) is None
    False
    """
    k, n = len(pattern), len(host)
    if k == 0:
        return ()
    if k > n:
        return None

    # For pattern step j, the candidate host value is constrained only by the
    # already-placed entries closest in value from below and above.
    lo_ref = [-1] * k
    hi_ref = [-1] * k
    for j in range(k):
        for i in range(j):
            if pattern[i] < pattern[j] and (lo_ref[j] < 0 or pattern[i] > pattern[lo_ref[j]]):
                lo_ref[j] = i
            if pattern[i] > pattern[j] and (hi_ref[j] < 0 or pattern[i] < pattern[hi_ref[j]]):
                hi_ref[j] = i

    chosen = [0] * k

    def dfs(j: int, start: int) -> bool:
        # Positions are tried in increasing order, so the first complete
        # match is the lexicographically least witness.
        last = n - (k - j)
        lo = host[chosen[lo_ref[j]]] if lo_ref[j] >= 0 else 0
        hi = host[chosen[hi_ref[j]]] if hi_ref[j] >= 0 else n + 1
        for pos in range(start, last + 1):
            v = host[pos]
            if lo < v < hi:
                chosen[j] = pos
                if j == k - 1 or dfs(j + 1, pos + 1):
                    return True
        return False

    if dfs(0, 0):
        return tuple(i + 1 for i in chosen)
    return None


def contains(host: Perm, pattern: Perm) -> bool:
    """True if host has a subsequence whose entries are ordered like pattern."""
    return find_occurrence(host, pattern) is not None


def avoids(host: Perm, pattern: Perm) -> bool:
    """True if host has no occurrence of pattern."""
    return find_occurrence(host, pattern) is None


def direct_sum(a: Perm, b: Perm) -> Perm:
    """
    Juxtapose diagrams diagonally: b's entries are shifted up by |a| and
    appended after a.

    >>> direct_sum((2, 1), (1,))
    (2, 1, 3)
    """
    shift = len(a)
    return a + tuple(v + shift for v in b)


def skew_sum(a: Perm, b: Perm) -> Perm:
    """
    Juxtapose diagrams anti-diagonally: a's entries are shifted up by |b|
    and placed before b.

    >>> skew_sum((1, 2), (1, 2))
    (3, 4, 1, 2)
    """
    shift = len(b)
    return tuple(v + shift for v in a) + b


def sum_decompose(p: Perm) -> list[Perm]:
    """
    The unique maximal decomposition of p as a direct sum of
    sum-indecomposable blocks. A block boundary falls after position i
    exactly when the first i values are {1..i}, i.e. when their maximum
    is i.

    >>> sum_decompose((2, 1, 3, 4))
    [(2, 1), (1,), (1,)]
    >>> sum_decompose((3, 1, 4, 2))
    [(3, 1, 4, 2)]
    """
    blocks: list[Perm] = []
    start = 0
    high = 0
    for i, v in enumerate(p):
        if v > high:
            high = v
        if high == i + 1:
            blocks.append(tuple(v - start for v in p[start : i + 1]))
            start = i + 1
    return blocks


def is_sum_indecomposable(p: Perm) -> bool:
    """
    True if p is not a direct sum of two non-empty permutations.
    Undefined (and an error) for the empty permutation.
    """
    if not p:
        raise ValueError("indecomposability is undefined for the empty permutation")
    high = 0
    for i, v in enumerate(p[:-1]):
        if v > high:
            high = v
        if high == i + 1:
            return False
    return True


def delete_entry(p: Perm, i: int) -> Perm:
    """The pattern left after deleting the entry at 0-based position i."""
    return flatten(p[:i] + p[i + 1 :])


def all_permutations(n: int) -> Iterator[Perm]:
    """All size-n permutations in lexicographic order (brute-force oracle)."""
    return itertools.permutations(range(1, n + 1))
