"""
Class specifications, membership, and pruned exhaustive enumeration.

A class specification is a combinator tree over six node kinds: avoidance
of a finite basis, the rc image of a class, unions, intersections, sum
closures of a generator family, and geometric grid classes. Every
combinator preserves downward closure under pattern containment, which is
what makes one-point-extension enumeration and prefix pruning sound.

Spec text format (whitespace-insensitive):

    av:321,3412
    rc(SPEC)
    union(SPEC,SPEC)
    inter(SPEC,SPEC)
    sumclosure:monotone-skew-monotone
    sumclosure:layered-skew-one
    geom:[-1,1;1,-1]

Basis permutations use the compact digit form, so all entries must be at
most 9. The bare matrix form geom:-1,1;1,-1 is accepted at top level; use
brackets when nesting inside union(...) or inter(...).
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from functools import lru_cache

from .grids import GridMatrix, geom_member, parse_matrix
from .perms import (
    EMPTY,
    Perm,
    contains,
    direct_sum,
    flatten,
    is_sum_indecomposable,
    parse_permutation,
    reverse_complement,
    sum_decompose,
)

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Generator families for sum closures


@dataclass(frozen=True)
class MonotoneSkewMonotone:
    """
    The single point together with every increasing run skew-stacked on a
    second increasing run. Closed under taking indecomposable sub-patterns
    and under rc.
    """

    name = "monotone-skew-monotone"
    rc_closed = True
    ind_subpattern_closed = True

    def contains_perm(self, p: Perm) -> bool:
        n = len(p)
        if n == 0:
            return False
        if n == 1:
            return True
        i = p.index(n) + 1
        if i == n:
            return False
        return p[:i] == tuple(range(n - i + 1, n + 1)) and p[i:] == tuple(
            range(1, n - i + 1)
        )

    def of_size(self, n: int) -> tuple[Perm, ...]:
        if n == 0:
            return ()
        if n == 1:
            return ((1,),)
        out = [
            tuple(range(n - i + 1, n + 1)) + tuple(range(1, n - i + 1))
            for i in range(1, n)
        ]
        return tuple(sorted(out))


@dataclass(frozen=True)
class LayeredSkewOne:
    """
    Permutations of the form (layers of size 1 or 2) skew-stacked on a
    single point; equivalently: the last entry is 1 and what is above it
    is a direct sum of copies of 1 and 21. Closed under indecomposable
    sub-patterns, not closed under rc.
    """

    name = "layered-skew-one"
    rc_closed = False
    ind_subpattern_closed = True

    def contains_perm(self, p: Perm) -> bool:
        if not p or p[-1] != 1:
            return False
        body = tuple(v - 1 for v in p[:-1])
        return all(block in ((1,), (2, 1)) for block in sum_decompose(body))

    def of_size(self, n: int) -> tuple[Perm, ...]:
        if n == 0:
            return ()
        out = []
        for body in _layered_12(n - 1):
            out.append(tuple(v + 1 for v in body) + (1,))
        return tuple(sorted(out))


def _layered_12(n: int) -> list[Perm]:
    """Direct sums of 1s and 21s of total size n."""
    if n == 0:
        return [EMPTY]
    out = [direct_sum((1,), rest) for rest in _layered_12(n - 1)]
    if n >= 2:
        out += [direct_sum((2, 1), rest) for rest in _layered_12(n - 2)]
    return out


@dataclass(frozen=True)
class FiniteGenerators:
    """
    A finite generator set, wrapped as the family of all indecomposable
    sub-patterns of the generators (that down-set is what per-block
    membership in the sum closure actually needs).
    """

    generators: tuple[Perm, ...]
    name = "finite"
    ind_subpattern_closed = True

    @property
    def rc_closed(self) -> bool:
        return all(
            any(contains(h, reverse_complement(g)) for h in self.generators)
            for g in self.generators
        )

    def contains_perm(self, p: Perm) -> bool:
        if not p or not is_sum_indecomposable(p):
            return False
        return any(contains(g, p) for g in self.generators)

    def of_size(self, n: int) -> tuple[Perm, ...]:
        if n == 0:
            return ()
        found = set()
        for g in self.generators:
            if len(g) < n:
                continue
            for positions in itertools.combinations(range(len(g)), n):
                q = flatten(tuple(g[i] for i in positions))
                if is_sum_indecomposable(q):
                    found.add(q)
        return tuple(sorted(found))


GeneratorFamily = MonotoneSkewMonotone | LayeredSkewOne | FiniteGenerators

BUILTIN_FAMILIES = {
    MonotoneSkewMonotone.name: MonotoneSkewMonotone(),
    LayeredSkewOne.name: LayeredSkewOne(),
}


# ---------------------------------------------------------------------------
# Specification nodes


@dataclass(frozen=True)
class Avoid:
    basis: tuple[Perm, ...]

    def __post_init__(self) -> None:
        reduced = _antichain(self.basis)
        object.__setattr__(self, "basis", reduced)

    def __str__(self) -> str:
        return "av:" + ",".join("".join(str(v) for v in b) for b in self.basis)


def _antichain(basis) -> tuple[Perm, ...]:
    """Drop basis elements that contain another basis element (with a warning)."""
    elems = sorted(set(basis), key=lambda b: (len(b), b))
    keep: list[Perm] = []
    for b in elems:
        smaller = next((s for s in keep if contains(b, s)), None)
        if smaller is None:
            keep.append(b)
        else:
            log.warning(
                "basis element %s contains %s and is redundant; dropping it",
                b,
                smaller,
            )
    return tuple(keep)


@dataclass(frozen=True)
class RcImage:
    child: "ClassSpec"

    def __str__(self) -> str:
        return f"rc({self.child})"


@dataclass(frozen=True)
class Union:
    left: "ClassSpec"
    right: "ClassSpec"

    def __str__(self) -> str:
        return f"union({self.left},{self.right})"


@dataclass(frozen=True)
class Intersection:
    left: "ClassSpec"
    right: "ClassSpec"

    def __str__(self) -> str:
        return f"inter({self.left},{self.right})"


@dataclass(frozen=True)
class SumClosure:
    family: GeneratorFamily

    def __str__(self) -> str:
        if isinstance(self.family, FiniteGenerators):
            gens = ",".join("".join(str(v) for v in g) for g in self.family.generators)
            return f"sumclosure:finite({gens})"
        return f"sumclosure:{self.family.name}"


@dataclass(frozen=True)
class GeomGrid:
    matrix: GridMatrix

    def __str__(self) -> str:
        return f"geom:[{self.matrix}]"


ClassSpec = Avoid | RcImage | Union | Intersection | SumClosure | GeomGrid


def avoid(*patterns: str | Perm) -> Avoid:
    """Convenience constructor: avoid("321", "3412")."""
    return Avoid(
        tuple(
            parse_permutation(p) if isinstance(p, str) else tuple(p) for p in patterns
        )
    )


# ---------------------------------------------------------------------------
# Membership


def member(spec: ClassSpec, p: Perm) -> bool:
    """Decide whether p belongs to the class described by spec."""
    if isinstance(spec, Avoid):
        return all(not contains(p, b) for b in spec.basis)
    if isinstance(spec, RcImage):
        return member(spec.child, reverse_complement(p))
    if isinstance(spec, Union):
        return member(spec.left, p) or member(spec.right, p)
    if isinstance(spec, Intersection):
        return member(spec.left, p) and member(spec.right, p)
    if isinstance(spec, SumClosure):
        if not spec.family.ind_subpattern_closed:
            raise ValueError(
                "sum-closure membership needs a family closed under "
                "indecomposable sub-patterns"
            )
        # an indecomposable occurrence cannot straddle a block boundary, so
        # testing each block against the family is exact
        return all(spec.family.contains_perm(block) for block in sum_decompose(p))
    if isinstance(spec, GeomGrid):
        return geom_member(spec.matrix, p)
    raise TypeError(f"not a class specification: {spec!r}")


# ---------------------------------------------------------------------------
# Syntactic structure detectors


def is_rc_invariant(spec: ClassSpec) -> bool:
    """
    Conservative syntactic test for rc-invariance of the described class.
    True guarantees invariance; False means it could not be established
    from the shape of the specification.
    """
    if isinstance(spec, Avoid):
        return {reverse_complement(b) for b in spec.basis} == set(spec.basis)
    if isinstance(spec, RcImage):
        return is_rc_invariant(spec.child)
    if isinstance(spec, (Union, Intersection)):
        if is_rc_invariant(spec.left) and is_rc_invariant(spec.right):
            return True
        return _rc_mirror_pair(spec.left, spec.right)
    if isinstance(spec, SumClosure):
        return spec.family.rc_closed
    if isinstance(spec, GeomGrid):
        from .grids import is_rc_matrix

        return is_rc_matrix(spec.matrix)
    return False


def _rc_mirror_pair(a: ClassSpec, b: ClassSpec) -> bool:
    if b == RcImage(a) or a == RcImage(b):
        return True
    if isinstance(a, Avoid) and isinstance(b, Avoid):
        return set(b.basis) == {reverse_complement(x) for x in a.basis}
    return False


def is_sum_closed_syntactic(spec: ClassSpec) -> bool:
    """
    Conservative syntactic test for sum-closedness: avoidance of an
    all-indecomposable basis, sum closures, and intersections or rc
    images of those.
    """
    if isinstance(spec, Avoid):
        return all(is_sum_indecomposable(b) for b in spec.basis if b)
    if isinstance(spec, SumClosure):
        return True
    if isinstance(spec, Intersection):
        return is_sum_closed_syntactic(spec.left) and is_sum_closed_syntactic(spec.right)
    if isinstance(spec, RcImage):
        return is_sum_closed_syntactic(spec.child)
    return False


# ---------------------------------------------------------------------------
# Enumeration


@lru_cache(maxsize=None)
def enumerate_class(spec: ClassSpec, n: int) -> tuple[Perm, ...]:
    """
    Exactly the size-n members, in lexicographic order. Members of size n
    are generated by inserting a new maximum into members of size n-1 and
    keeping those that pass membership; deleting the maximum of any
    member lands back in the class, so nothing is missed.
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    if isinstance(spec, GeomGrid):
        from .grids import enumerate_geom

        return enumerate_geom(spec.matrix, n)
    if n == 0:
        return (EMPTY,) if member(spec, EMPTY) else ()
    out = []
    for q in enumerate_class(spec, n - 1):
        for i in range(n):
            candidate = q[:i] + (n,) + q[i:]
            if member(spec, candidate):
                out.append(candidate)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def enumerate_centrosymmetric(spec: ClassSpec, m: int) -> tuple[Perm, ...]:
    """
    Exactly the centrosymmetric size-m members, in lexicographic order.

    The first half of the permutation is built by backtracking: choosing a
    value v for the next position forces the mirror value m+1-v at the
    mirror position, so v and m+1-v may never both be chosen. For odd
    m = 2k+1 the center entry is forced to k+1. After each choice the
    pattern of all placed points is tested for membership, which is a
    sound prune because classes are down-sets.
    """
    if m < 0:
        raise ValueError("size must be non-negative")
    if m == 0:
        return (EMPTY,) if member(spec, EMPTY) else ()
    if m == 1:
        return ((1,),) if member(spec, (1,)) else ()
    half = m // 2
    center = (half + 1,) if m % 2 else ()
    out: list[Perm] = []
    prefix: list[int] = []
    used = [False] * (m + 1)

    def partial_ok() -> bool:
        mirrored = tuple(m + 1 - v for v in reversed(prefix))
        return member(spec, flatten(tuple(prefix) + center + mirrored))

    def extend() -> None:
        if len(prefix) == half:
            # the last partial check covered all m points, so this is a member
            mirrored = tuple(m + 1 - v for v in reversed(prefix))
            out.append(tuple(prefix) + center + mirrored)
            return
        for v in range(1, m + 1):
            if used[v] or used[m + 1 - v] or (center and v == center[0]):
                continue
            prefix.append(v)
            used[v] = True
            if partial_ok():
                extend()
            used[v] = False
            prefix.pop()

    extend()
    return tuple(out)


# ---------------------------------------------------------------------------
# Count tables


@dataclass(frozen=True)
class CountTable:
    """
    Per-size exact counts for one class, all member sizes bounded by
    max_n: a[n] counts size-n members, b_even[n] counts centrosymmetric
    members of size 2n, b_odd[n] of size 2n+1, c[n] indecomposable
    members of size n, d[n] centrosymmetric indecomposables of size 2n.
    """

    spec_text: str
    max_n: int
    a: tuple[int, ...]
    b_even: tuple[int, ...]
    b_odd: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    def prop21_violations(self) -> list[str]:
        """Indices violating b_n <= a_2n or b_n <= 2^n a_n (should be none)."""
        bad = []
        for n, b in enumerate(self.b_even):
            if 2 * n <= self.max_n and b > self.a[2 * n]:
                bad.append(f"b[{n}] = {b} > a[{2 * n}] = {self.a[2 * n]}")
            if b > 2**n * self.a[n]:
                bad.append(f"b[{n}] = {b} > 2^{n} * a[{n}]")
        return bad


def count_table(spec: ClassSpec, max_n: int) -> CountTable:
    """Fill all five count sequences by enumeration up to member size max_n."""
    a = []
    c = []
    for n in range(max_n + 1):
        members = enumerate_class(spec, n)
        a.append(len(members))
        c.append(sum(1 for p in members if p and is_sum_indecomposable(p)))
    b_even = []
    d = []
    for n in range(max_n // 2 + 1):
        centro = enumerate_centrosymmetric(spec, 2 * n)
        b_even.append(len(centro))
        d.append(sum(1 for p in centro if p and is_sum_indecomposable(p)))
    b_odd = [
        len(enumerate_centrosymmetric(spec, 2 * n + 1))
        for n in range((max_n - 1) // 2 + 1)
    ]
    return CountTable(
        spec_text=str(spec),
        max_n=max_n,
        a=tuple(a),
        b_even=tuple(b_even),
        b_odd=tuple(b_odd),
        c=tuple(c),
        d=tuple(d),
    )


# ---------------------------------------------------------------------------
# Class agreement


@dataclass(frozen=True)
class AgreementReport:
    left: str
    right: str
    max_n: int
    agree: bool
    first_diff_size: int | None = None
    witness: Perm | None = None
    witness_side: str | None = None  # "left" or "right"

    def __str__(self) -> str:
        if self.agree:
            return f"{self.left} and {self.right} agree for all sizes <= {self.max_n}"
        return (
            f"{self.left} and {self.right} disagree at size {self.first_diff_size}: "
            f"{self.witness} belongs to the {self.witness_side} class only"
        )


def classes_agree(a: ClassSpec, b: ClassSpec, max_n: int) -> AgreementReport:
    """Compare enumerations size by size and report the least witness, if any."""
    for n in range(max_n + 1):
        left = enumerate_class(a, n)
        right = enumerate_class(b, n)
        if left != right:
            left_set, right_set = set(left), set(right)
            witness = min(left_set.symmetric_difference(right_set))
            side = "left" if witness in left_set else "right"
            return AgreementReport(
                left=str(a),
                right=str(b),
                max_n=max_n,
                agree=False,
                first_diff_size=n,
                witness=witness,
                witness_side=side,
            )
    return AgreementReport(left=str(a), right=str(b), max_n=max_n, agree=True)


# ---------------------------------------------------------------------------
# Spec text parsing


def parse_class_spec(text: str) -> ClassSpec:
    """Parse the class-spec DSL (see module docstring)."""
    body = "".join(text.split())
    if not body:
        raise ValueError("empty class specification")
    spec, rest = _parse_spec(body, nested=False)
    if rest:
        raise ValueError(f"unexpected trailing text {rest!r} in class specification")
    return spec


def _parse_spec(body: str, nested: bool) -> tuple[ClassSpec, str]:
    if body.startswith("av:"):
        rest = body[len("av:") :]
        match = re.match(r"\d+(?:,\d+)*", rest)
        if not match:
            raise ValueError("av: needs at least one pattern in compact digit form")
        basis = tuple(parse_permutation(tok) for tok in match.group().split(","))
        return Avoid(basis), rest[match.end() :]
    if body.startswith("rc("):
        inner, rest = _take_bracketed(body[len("rc") :])
        child, leftover = _parse_spec(inner, nested=True)
        if leftover:
            raise ValueError(f"unexpected text {leftover!r} inside rc(...)")
        return RcImage(child), rest
    for name, node in (("union(", Union), ("inter(", Intersection)):
        if body.startswith(name):
            inner, rest = _take_bracketed(body[len(name) - 1 :])
            left, leftover = _parse_spec(inner, nested=True)
            if not leftover.startswith(","):
                raise ValueError(f"{name[:-1]} needs two comma-separated specifications")
            right, leftover = _parse_spec(leftover[1:], nested=True)
            if leftover:
                raise ValueError(f"unexpected text {leftover!r} inside {name[:-1]}(...)")
            return node(left, right), rest
    if body.startswith("sumclosure:"):
        rest = body[len("sumclosure:") :]
        match = re.match(r"[a-z0-9-]+", rest)
        name = match.group() if match else ""
        if name not in BUILTIN_FAMILIES:
            known = ", ".join(sorted(BUILTIN_FAMILIES))
            raise ValueError(f"unknown generator family {name!r} (known: {known})")
        return SumClosure(BUILTIN_FAMILIES[name]), rest[match.end() :]
    if body.startswith("geom:"):
        rest = body[len("geom:") :]
        if rest.startswith("["):
            end = rest.find("]")
            if end < 0:
                raise ValueError("unterminated [ in geom: matrix")
            return GeomGrid(parse_matrix(rest[1:end])), rest[end + 1 :]
        if nested:
            raise ValueError(
                "bracket the matrix as geom:[...] when nesting inside union/inter"
            )
        return GeomGrid(parse_matrix(rest)), ""
    token = body.split("(", 1)[0].split(":", 1)[0]
    raise ValueError(f"unknown class specification starting at {token!r}")


def _take_bracketed(body: str) -> tuple[str, str]:
    """body starts with '('; return (inner text, text after the matching ')')."""
    if not body.startswith("("):
        raise ValueError("expected '('")
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return body[1:i], body[i + 1 :]
    raise ValueError("unbalanced parentheses in class specification")
