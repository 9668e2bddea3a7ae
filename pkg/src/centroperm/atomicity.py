"""
Bounded witness searches for the joint-embedding style properties of
rc-invariant classes: can every member sigma be joined with rc(sigma)
inside the class, and is every member contained in an even-size
centrosymmetric member?

Searches are bounded and the reports say so: a missing witness up to a
bound is evidence, never a verdict. Every witness that is returned has
been re-checked against the membership and containment oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import (
    ClassSpec,
    GeomGrid,
    enumerate_centrosymmetric,
    enumerate_class,
    is_rc_invariant,
    is_sum_closed_syntactic,
    member,
)
from .perms import (
    Perm,
    contains,
    direct_sum,
    is_centrosymmetric,
    reverse_complement,
)


@dataclass(frozen=True)
class WitnessReport:
    """Result of one bounded witness search for a single sigma."""

    spec_text: str
    sigma: Perm
    witness: Perm | None
    searched_to: int
    constructed: bool = False  # witness came from the direct-sum construction

    @property
    def found(self) -> bool:
        return self.witness is not None

    def __str__(self) -> str:
        if self.found:
            how = "constructed" if self.constructed else "found"
            return f"sigma={self.sigma}: witness {self.witness} ({how})"
        return f"sigma={self.sigma}: none up to size {self.searched_to}"


def _verified(spec: ClassSpec, sigma: Perm, pi: Perm) -> bool:
    """Oracle check: pi is a class member containing sigma and rc(sigma)."""
    return (
        member(spec, pi)
        and contains(pi, sigma)
        and contains(pi, reverse_complement(sigma))
    )


def rc_witness(spec: ClassSpec, sigma: Perm, max_n: int) -> WitnessReport:
    """
    Search for a class member containing both sigma and rc(sigma), trying
    sizes |sigma|..max_n in lexicographic order (least witness first).
    Sum closed rc-invariant specifications short-circuit with the witness
    sigma (+) rc(sigma), which is verified rather than assumed.
    """
    if not member(spec, sigma):
        raise ValueError(f"{sigma} is not a member of {spec}")
    text = str(spec)
    if is_sum_closed_syntactic(spec) and is_rc_invariant(spec):
        candidate = direct_sum(sigma, reverse_complement(sigma))
        if not _verified(spec, sigma, candidate):
            raise AssertionError(
                "sum closed rc-invariant class rejected its constructed witness"
            )
        return WitnessReport(text, sigma, candidate, len(candidate), constructed=True)
    for n in range(len(sigma), max_n + 1):
        for pi in enumerate_class(spec, n):
            if _verified(spec, sigma, pi):
                return WitnessReport(text, sigma, pi, n)
    return WitnessReport(text, sigma, None, max_n)


@dataclass(frozen=True)
class AtomicityReport:
    """Aggregate of rc-witness searches over all members up to a size bound."""

    spec_text: str
    max_sigma: int
    max_n: int
    failures: tuple[WitnessReport, ...]
    witnesses: tuple[WitnessReport, ...]

    @property
    def all_found(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        if self.all_found:
            return (
                f"{self.spec_text}: every member of size <= {self.max_sigma} has a "
                f"joint witness (searched to size {self.max_n})"
            )
        sigmas = ", ".join(str(r.sigma) for r in self.failures)
        return (
            f"{self.spec_text}: no witness up to size {self.max_n} for {sigmas}; "
            f"this is evidence against the joint-embedding property only up to "
            f"the bound"
        )


def is_rc_atomic_up_to(spec: ClassSpec, max_sigma: int, max_n: int) -> AtomicityReport:
    """
    Run rc_witness for every non-empty member sigma with |sigma| <= max_sigma.
    The class must be (syntactically) rc-invariant.
    """
    if not is_rc_invariant(spec):
        raise ValueError("rc-atomicity checks need an rc-invariant specification")
    witnesses = []
    failures = []
    for s in range(1, max_sigma + 1):
        for sigma in enumerate_class(spec, s):
            report = rc_witness(spec, sigma, max_n)
            (witnesses if report.found else failures).append(report)
    return AtomicityReport(
        spec_text=str(spec),
        max_sigma=max_sigma,
        max_n=max_n,
        failures=tuple(failures),
        witnesses=tuple(witnesses),
    )


def _geom_doubled_witness(spec: GeomGrid, sigma: Perm) -> Perm | None:
    """
    Try the drawing-doubling construction: take a word drawing sigma and
    append its half-turn image in reverse. Under an rc-symmetric
    orientation the decoded permutation is centrosymmetric and contains
    sigma; otherwise the attempt may fail and the caller falls back to
    searching.
    """
    from .grids import _decode, _geometry, rc_cell
    import itertools

    work, ori, _ = _geometry(spec.matrix)
    cells = work.nonzero_cells()
    word = None
    for candidate in itertools.product(cells, repeat=len(sigma)):
        if _decode(candidate, ori, work.rows)[0] == sigma:
            word = candidate
            break
    if word is None:
        return None
    doubled = word + tuple(
        rc_cell(c, work.rows, work.cols) for c in reversed(word)
    )
    rho = _decode(doubled, ori, work.rows)[0]
    if is_centrosymmetric(rho) and contains(rho, sigma):
        return rho
    return None


def generated_by_centro_up_to(
    spec: ClassSpec, max_sigma: int, max_even: int
) -> AtomicityReport:
    """
    For every member sigma with |sigma| <= max_sigma, look for an
    even-size centrosymmetric class member containing sigma. Sum closed
    rc-invariant specifications construct sigma (+) rc(sigma); grid
    specifications first try doubling a drawing; everything else (and any
    failed construction) searches even sizes up to max_even.
    """
    if not is_rc_invariant(spec):
        raise ValueError("this check needs an rc-invariant specification")
    text = str(spec)
    sum_closed = is_sum_closed_syntactic(spec)
    witnesses = []
    failures = []
    for s in range(1, max_sigma + 1):
        for sigma in enumerate_class(spec, s):
            report = None
            if sum_closed:
                rho = direct_sum(sigma, reverse_complement(sigma))
                if not (member(spec, rho) and is_centrosymmetric(rho) and contains(rho, sigma)):
                    raise AssertionError(
                        "sum closed rc-invariant class rejected its constructed witness"
                    )
                report = WitnessReport(text, sigma, rho, len(rho), constructed=True)
            elif isinstance(spec, GeomGrid):
                rho = _geom_doubled_witness(spec, sigma)
                if rho is not None and member(spec, rho):
                    report = WitnessReport(text, sigma, rho, len(rho), constructed=True)
            if report is None:
                report = _search_centro_witness(spec, sigma, max_even)
            (witnesses if report.found else failures).append(report)
    return AtomicityReport(
        spec_text=text,
        max_sigma=max_sigma,
        max_n=max_even,
        failures=tuple(failures),
        witnesses=tuple(witnesses),
    )


def _search_centro_witness(spec: ClassSpec, sigma: Perm, max_even: int) -> WitnessReport:
    start = len(sigma) + (len(sigma) % 2)
    for m in range(start, max_even + 1, 2):
        for rho in enumerate_centrosymmetric(spec, m):
            if contains(rho, sigma):
                return WitnessReport(str(spec), sigma, rho, m)
    return WitnessReport(str(spec), sigma, None, max_even)
