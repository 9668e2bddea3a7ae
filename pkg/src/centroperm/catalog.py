"""
Built-in catalog: the classes exercised by the verification harness, their
reference sequences (with provenance tags), and the algebraic growth-rate
targets each row is checked against.

Golden sequence values live in data/golden_sequences.txt; every line must
carry a provenance tag (published / derived / trivial) and the loader
rejects untagged values.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

# ---------------------------------------------------------------------------
# Closed-form sequence generators


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """f(1) = f(2) = 1 convention."""
    if n < 1:
        raise ValueError("fibonacci is defined here for n >= 1")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
    return math.comb(2 * n, n)


# ---------------------------------------------------------------------------
# Golden sequence fixtures


@dataclass(frozen=True)
class GoldenSequence:
    id: str
    values: tuple[int, ...]
    tag: str  # published | derived | trivial
    note: str


_LINE = re.compile(
    r"^(?P<id>[\w.\-]+):\s*(?P<values>-?\d+(?:\s*,\s*-?\d+)*)\s*"
    r"#\s*(?P<tag>published|derived|trivial)\s*(?::\s*(?P<note>.*))?$"
)


def parse_golden(text: str) -> dict[str, GoldenSequence]:
    out: dict[str, GoldenSequence] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _LINE.match(line)
        if not match:
            raise ValueError(
                f"golden line {lineno} is malformed or lacks a provenance tag: {raw!r}"
            )
        seq = GoldenSequence(
            id=match["id"],
            values=tuple(int(v) for v in match["values"].split(",")),
            tag=match["tag"],
            note=(match["note"] or "").strip(),
        )
        if seq.id in out:
            raise ValueError(f"duplicate golden id {seq.id!r} at line {lineno}")
        out[seq.id] = seq
    return out


@lru_cache(maxsize=None)
def all_golden() -> dict[str, GoldenSequence]:
    text = resources.files("centroperm").joinpath("data/golden_sequences.txt").read_text()
    return parse_golden(text)


def golden(seq_id: str) -> GoldenSequence:
    try:
        return all_golden()[seq_id]
    except KeyError:
        raise KeyError(f"no golden sequence named {seq_id!r}") from None


# ---------------------------------------------------------------------------
# Algebraic constants

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)

# threshold polynomials (ascending coefficients) and their printed decimals
XI_POLY = (-1, -1, -1, 0, -2, 1)     # x^5 - 2x^4 - x^2 - x - 1
XI_DECIMAL = 2.30522
TAU_POLY = (-1, 2, -3, 1)            # x^3 - 3x^2 + 2x - 1
TAU_DECIMAL = 2.32472
SILVER_POLY = (-1, -2, 1)            # x^2 - 2x - 1
SILVER_DECIMAL = 2.41421


# ---------------------------------------------------------------------------
# Catalog rows


@dataclass(frozen=True)
class Table1Row:
    id: str
    spec_text: str
    even_form: str
    odd_form: str

    def even_value(self, k: int) -> int:
        return _CLOSED_FORMS[self.even_form](k)

    def odd_value(self, k: int) -> int:
        return _CLOSED_FORMS[self.odd_form](k)


_CLOSED_FORMS = {
    "binom(2k,k)": central_binomial,
    "catalan(k)": catalan,
    "fib-odd-up": lambda k: fibonacci(2 * k + 1),
    "fib-odd-down": lambda k: 1 if k == 0 else fibonacci(2 * k - 1),
    "2^k": lambda k: 2**k,
    "fib(k+2)": lambda k: fibonacci(k + 2),
    "fib(k+1)": lambda k: fibonacci(k + 1),
}

TABLE1_ROWS: tuple[Table1Row, ...] = (
    Table1Row("av321", "av:321", "binom(2k,k)", "catalan(k)"),
    Table1Row("av321-3412", "av:321,3412", "fib-odd-up", "fib-odd-down"),
    Table1Row("av231-312", "av:231,312", "2^k", "2^k"),
    Table1Row("av231-312-321", "av:231,312,321", "fib(k+2)", "fib(k+1)"),
)


@dataclass(frozen=True)
class Table2Row:
    id: str
    spec_text: str
    sum_closed: bool
    growth_agree: bool
    growth_text: str
    growth: float
    rc_growth_text: str
    rc_growth: float


TABLE2_ROWS: tuple[Table2Row, ...] = (
    Table2Row("av321", "av:321", True, True, "4", 4.0, "4", 4.0),
    Table2Row("av4321", "av:4321", True, True, "9", 9.0, "9", 9.0),
    Table2Row("av231-312", "av:231,312", True, True, "2", 2.0, "2", 2.0),
    Table2Row(
        "av321-3412", "av:321,3412", True, True,
        "(3+sqrt5)/2", (3 + SQRT5) / 2, "(3+sqrt5)/2", (3 + SQRT5) / 2,
    ),
    Table2Row(
        "av321-3142", "av:321,3142", True, True,
        "(3+sqrt5)/2", (3 + SQRT5) / 2, "(3+sqrt5)/2", (3 + SQRT5) / 2,
    ),
    Table2Row(
        "av231-312-321", "av:231,312,321", True, True,
        "(1+sqrt5)/2", (1 + SQRT5) / 2, "(1+sqrt5)/2", (1 + SQRT5) / 2,
    ),
    Table2Row(
        "av2413-3142", "av:2413,3142", True, True,
        "3+2sqrt2", 3 + 2 * SQRT2, "3+2sqrt2", 3 + 2 * SQRT2,
    ),
    Table2Row("av3412-4321", "av:3412,4321", True, True, "4", 4.0, "4", 4.0),
    Table2Row(
        "av3142-4321", "av:3142,4321", True, True,
        "2+sqrt3", 2 + SQRT3, "2+sqrt3", 2 + SQRT3,
    ),
    Table2Row("av321-2143", "av:321,2143", False, True, "2", 2.0, "2", 2.0),
    Table2Row("av2143-3412", "av:2143,3412", False, True, "4", 4.0, "4", 4.0),
    Table2Row(
        "av1324-4231", "av:1324,4231", False, False,
        "2+sqrt2", 2 + SQRT2, "2", 2.0,
    ),
    Table2Row(
        "av2143-4321", "av:2143,4321", False, False,
        "(3+sqrt5)/2", (3 + SQRT5) / 2, "2", 2.0,
    ),
)


@dataclass(frozen=True)
class Table3Row:
    id: str
    d_spec_text: str
    growth_text: str
    growth: float
    rc_growth_text: str
    rc_growth: float

    @property
    def union_text(self) -> str:
        return f"union({self.d_spec_text},rc({self.d_spec_text}))"

    @property
    def intersection_text(self) -> str:
        return f"inter({self.d_spec_text},rc({self.d_spec_text}))"


TABLE3_ROWS: tuple[Table3Row, ...] = (
    Table3Row("d312", "av:312", "4", 4.0, "2", 2.0),
    Table3Row("d4123", "av:4123", "9", 9.0, "4", 4.0),
    Table3Row("d4312", "av:4312", "9", 9.0, "2+sqrt5", 2 + SQRT5),
)


@dataclass(frozen=True)
class SumClosureExample:
    id: str
    closure_text: str
    basis_text: str
    gf_text: str
    ind_gf_text: str
    growth_poly: tuple[int, ...]
    growth_decimal: float


WORKED_EXAMPLES: tuple[SumClosureExample, ...] = (
    SumClosureExample(
        id="msm",
        closure_text="sumclosure:monotone-skew-monotone",
        basis_text="av:321,3142,2413",
        gf_text="(1-x)^2/(1-3x+2x^2-x^3)",
        ind_gf_text="(x-x^2+x^3)/(1-x)^2",
        growth_poly=TAU_POLY,
        growth_decimal=TAU_DECIMAL,
    ),
    SumClosureExample(
        id="lso",
        closure_text="sumclosure:layered-skew-one",
        basis_text="av:312,4321,3421",
        gf_text="(1-x-x^2)/(1-2x-x^2)",
        ind_gf_text="x/(1-x-x^2)",
        growth_poly=SILVER_POLY,
        growth_decimal=SILVER_DECIMAL,
    ),
)


def catalog_spec_texts() -> tuple[str, ...]:
    """Every class the harness property suites sweep over."""
    texts: list[str] = []
    for row in TABLE1_ROWS:
        texts.append(row.spec_text)
    for row in TABLE2_ROWS:
        texts.append(row.spec_text)
    for row in TABLE3_ROWS:
        texts.append(row.union_text)
        texts.append(row.intersection_text)
    for ex in WORKED_EXAMPLES:
        texts.append(ex.closure_text)
        texts.append(ex.basis_text)
    seen = set()
    unique = []
    for t in texts:
        if t not in seen:
            seen.add(t)
            unique.append(t)
    return tuple(unique)
