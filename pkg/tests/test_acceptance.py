"""
Acceptance suite: one test per criterion, each printing a PASS/FAIL line
(run with -s to see them as they complete). Tolerances are pinned here:
sequence checks are exact, root decimals match to 1e-5 with residuals
below 1e-7, and the stated runtime budgets are enforced.
"""

import itertools
import time

from centroperm import catalog
from centroperm.atomicity import is_rc_atomic_up_to, rc_witness
from centroperm.classes import (
    classes_agree,
    count_table,
    enumerate_centrosymmetric,
    enumerate_class,
    is_rc_invariant,
    is_sum_closed_syntactic,
    member,
    parse_class_spec,
)
from centroperm.grids import (
    centro_geom_counts,
    enumerate_geom,
    enumerate_gridded,
    has_centrosymmetric_gridding,
    is_centro_gridded,
    parse_matrix,
    rc_component_pairing,
    split_XY,
)
from centroperm.harness import catalog_bounds_suite
from centroperm.perms import (
    contains,
    direct_sum,
    is_centrosymmetric,
    is_sum_indecomposable,
    reverse_complement,
)
from centroperm.series import (
    Polynomial,
    Series,
    check_convolution,
    egge_monotone,
    expand,
    parse_gf,
    positive_root,
    rc_gf,
)

X_MATRIX = parse_matrix("-1,1;1,-1")
DIAG = parse_matrix("1,0;0,1")


def _criterion(number: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number:02d} {name}: {status}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} ({name}) failed: {detail}"


def test_criterion_01_centro_count_tables():
    start = time.perf_counter()
    failures = []
    for row in catalog.TABLE1_ROWS:
        spec = parse_class_spec(row.spec_text)
        for m in range(13):
            expected = row.even_value(m // 2) if m % 2 == 0 else row.odd_value(m // 2)
            actual = len(enumerate_centrosymmetric(spec, m))
            if actual != expected:
                failures.append((row.id, m, expected, actual))
    elapsed = time.perf_counter() - start
    _criterion(
        1,
        "four-row centrosymmetric tables, sizes 0-12, exact",
        not failures and elapsed < 120.0,
        f"elapsed {elapsed:.1f}s" + (f"; mismatches {failures}" if failures else ""),
    )


def test_criterion_02_binomial_formula_oracle_equivalence():
    bad = []
    for k in (2, 3, 4, 5):
        pattern = "".join(str(v) for v in range(k, 0, -1))
        spec = parse_class_spec(f"av:{pattern}")
        for n in range(6):
            if egge_monotone(k, n) != len(enumerate_centrosymmetric(spec, 2 * n)):
                bad.append((k, n))
    centro4 = [p for p in itertools.permutations(range(1, 5)) if is_centrosymmetric(p)]
    spot_ok = len(centro4) == 8 and egge_monotone(4, 2) == sum(
        1 for p in centro4 if not contains(p, (4, 3, 2, 1))
    ) == 7
    _criterion(
        2,
        "binomial-sum formula equals direct enumeration (k=2..5, 2n<=10)",
        not bad and spot_ok,
        f"mismatches {bad}" if bad else "includes the spot value 7 at (k=4, n=2)",
    )


def test_criterion_03_x_class_counts_and_corners():
    counts = centro_geom_counts(X_MATRIX, 5)[1:]
    corners_ok = all(
        p[0] in (1, n) or p[-1] in (1, n)
        for n in range(1, 7)
        for p in enumerate_geom(X_MATRIX, n)
    )
    _criterion(
        3,
        "x-class centro counts 2,4,8,16,32 and corner property",
        counts == [2, 4, 8, 16, 32] and corners_ok,
        f"counts {counts}, corners {corners_ok}",
    )


def test_criterion_04_gridding_subtlety():
    result = has_centrosymmetric_gridding((1, 2), DIAG)
    in_class = member(parse_class_spec("geom:[1,0;0,1]"), (1, 2))
    _criterion(
        4,
        "12 is a centrosymmetric member of the diagonal class with no centrosymmetric gridding",
        in_class
        and is_centrosymmetric((1, 2))
        and result.in_class
        and not result.has_gridding,
    )


def test_criterion_05_split_machinery():
    diag_conditions = rc_component_pairing(DIAG)
    a_x, a_y = split_XY(DIAG)
    bijection_ok = all(
        sum(1 for g in enumerate_gridded(DIAG, 2 * n) if is_centro_gridded(g))
        == len(enumerate_gridded(a_x, n))
        for n in range(5)
    )
    x_conditions = rc_component_pairing(X_MATRIX)
    _criterion(
        5,
        "pairing conditions, split, and the gridded bijection",
        diag_conditions.forest
        and diag_conditions.pairing_ok
        and bijection_ok
        and not x_conditions.forest
        and not x_conditions.pairing_ok,
    )


def test_criterion_06_sum_closure_identities():
    first = classes_agree(
        parse_class_spec("sumclosure:monotone-skew-monotone"),
        parse_class_spec("av:321,3142,2413"),
        8,
    )
    second = classes_agree(
        parse_class_spec("sumclosure:layered-skew-one"),
        parse_class_spec("av:312,4321,3421"),
        8,
    )
    gf_ok = True
    for gf_text, basis in (
        ("(1-x)^2/(1-3x+2x^2-x^3)", "av:321,3142,2413"),
        ("(1-x-x^2)/(1-2x-x^2)", "av:312,4321,3421"),
    ):
        counts = tuple(len(enumerate_class(parse_class_spec(basis), n)) for n in range(11))
        gf_ok = gf_ok and expand(parse_gf(gf_text), 11).as_ints() == counts
    ind = [
        sum(
            1
            for p in enumerate_class(parse_class_spec("av:321,3142,2413"), n)
            if is_sum_indecomposable(p)
        )
        for n in range(2, 9)
    ]
    _criterion(
        6,
        "sum-closure identities, series match to size 10, linear indecomposable counts",
        first.agree and second.agree and gf_ok and ind == [n - 1 for n in range(2, 9)],
        f"ind counts {ind}",
    )


def test_criterion_07_threshold_roots():
    start = time.perf_counter()
    targets = (
        (catalog.XI_POLY, catalog.XI_DECIMAL),
        (catalog.TAU_POLY, catalog.TAU_DECIMAL),
        (catalog.SILVER_POLY, catalog.SILVER_DECIMAL),
    )
    ok = True
    for coeffs, decimal in targets:
        poly = Polynomial(coeffs)
        root = positive_root(poly)
        ok = ok and abs(root - decimal) < 1e-5 and abs(poly(root)) < 1e-7
    elapsed = time.perf_counter() - start
    _criterion(
        7,
        "threshold roots at the printed decimals (1e-5) with small residuals (1e-7)",
        ok and elapsed < 1.0,
        f"elapsed {elapsed * 1000:.0f}ms",
    )


def test_criterion_08_series_identities():
    ok = True
    details = []
    for text in ("av:321", "av:231,312", "av:321,3412"):
        table = count_table(parse_class_spec(text), 10)
        a = Series.from_ints(table.a)
        c = Series.from_ints(table.c)
        one = Series.from_ints((1,) + (0,) * 10)
        product = (a * (one - c)).as_ints()
        if product != (1,) + (0,) * 10:
            ok = False
            details.append(f"{text}: class series times (1 - ind series) != 1")
        if not check_convolution(table).holds:
            ok = False
            details.append(f"{text}: centro convolution failed")
    loop_table = count_table(parse_class_spec("av:231,312"), 10)
    d_gf = parse_gf("x/(1-x)")
    a_gf = parse_gf("(1-x)/(1-2x)")
    loop_ok = (
        expand(a_gf, 11).as_ints() == loop_table.a
        and expand(d_gf, 6).as_ints() == loop_table.d
        and rc_gf(d_gf, a_gf) == parse_gf("1/(1-2x)")
        and expand(parse_gf("1/(1-2x)"), 6).as_ints() == loop_table.b_even
    )
    _criterion(
        8,
        "series identities and the closed loop to the doubling row",
        ok and loop_ok,
        "; ".join(details) if details else "holds through size 10 (centro size 10)",
    )


def test_criterion_09_counting_bounds_across_catalog():
    report = catalog_bounds_suite(6)
    bad = [c.name for c in report.checks if c.status == "fail"]
    _criterion(
        9,
        "b_n <= a_2n and b_n <= 2^n a_n over the full catalog",
        report.passed,
        f"violations in {bad}" if bad else f"{len(report.checks)} classes checked",
    )


def test_criterion_10_witness_evidence():
    union_report = rc_witness(parse_class_spec("union(av:312,rc(av:312))"), (3, 1, 2), 8)
    union_ok = not union_report.found and union_report.searched_to == 8
    constructed_ok = True
    swept = 0
    for text in catalog.catalog_spec_texts():
        spec = parse_class_spec(text)
        if not (is_sum_closed_syntactic(spec) and is_rc_invariant(spec)):
            continue
        swept += 1
        sweep = is_rc_atomic_up_to(spec, 3, 8)
        for witness in sweep.witnesses:
            w, s = witness.witness, witness.sigma
            if not (
                witness.constructed
                and w == direct_sum(s, reverse_complement(s))
                and member(spec, w)
                and contains(w, s)
                and contains(w, reverse_complement(s))
            ):
                constructed_ok = False
        if not sweep.all_found:
            constructed_ok = False
    _criterion(
        10,
        "no joint witness for 312 in the union class; constructed witnesses everywhere sum closed",
        union_ok and constructed_ok and swept >= 10,
        f"{swept} sum closed rc-invariant classes swept",
    )


def test_criterion_11_union_intersection_identity():
    ok = True
    for row in catalog.TABLE3_ROWS:
        union_spec = parse_class_spec(row.union_text)
        inter_spec = parse_class_spec(row.intersection_text)
        for m in range(11):
            if enumerate_centrosymmetric(union_spec, m) != enumerate_centrosymmetric(
                inter_spec, m
            ):
                ok = False
    _criterion(11, "centro members of the union equal those of the intersection, sizes <= 10", ok)
