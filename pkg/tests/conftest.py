"""Shared brute-force oracles for the test suite."""

from __future__ import annotations

import itertools

from centroperm.classes import member
from centroperm.perms import is_centrosymmetric


def brute_members(spec, n):
    """Filter all n! permutations by the membership predicate."""
    return tuple(
        p for p in itertools.permutations(range(1, n + 1)) if member(spec, p)
    )


def brute_centro(spec, m):
    """Filter the brute-force members by centrosymmetry."""
    return tuple(p for p in brute_members(spec, m) if is_centrosymmetric(p))


def all_perms_up_to(max_n):
    for n in range(max_n + 1):
        yield from itertools.permutations(range(1, n + 1))
