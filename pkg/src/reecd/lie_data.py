"""Degree facts for the candidate simple groups of the elimination.

Covers three kinds of data: Steinberg and second-unipotent degrees for the
groups of Lie type, the two-row character degree formula for alternating
groups with its divisible-by-16 witnesses, and an embedded evidence table
for the 26 sporadic groups and the Tits group.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from math import comb

from .exactmath import cyclotomic_eval, val_p

__all__ = [
    "LieCandidate",
    "AlternatingCandidate",
    "SporadicCandidate",
    "TitsCandidate",
    "SimpleCandidate",
    "SporadicFact",
    "LIE_FAMILIES",
    "TITS_NAME",
    "steinberg_exponent",
    "unipotent_degree",
    "alt_char_degree",
    "alt_16_witness",
    "sporadic_fact",
    "sporadic_names",
    "A5_EXTENDIBLE_DEGREE",
    "A6_EXTENDIBLE_DEGREE",
    "A7_EXTENDIBLE_DEGREE",
]

LIE_FAMILIES = (
    "PSL", "PSU", "PSp", "Omega", "OmegaPM",
    "2B2", "3D4", "E6", "E7", "E8", "F4", "2F4", "G2", "2G2",
)

# Families indexed by a rank parameter m (PSp means PSp_{2m}, Omega means
# the odd-dimensional groups Omega_{2m+1}, OmegaPM the groups of dimension 2m).
_RANKED = {"PSL": 2, "PSU": 3, "PSp": 2, "Omega": 3, "OmegaPM": 4}
_FIXED_EXPONENT = {
    "2B2": 2, "3D4": 12, "E6": 36, "E7": 63, "E8": 120,
    "F4": 24, "2F4": 12, "G2": 6, "2G2": 3,
}

# Small extendible degrees used for the three smallest alternating groups.
A5_EXTENDIBLE_DEGREE = 5
A6_EXTENDIBLE_DEGREE = 9
A7_EXTENDIBLE_DEGREE = 6

TITS_NAME = "2F4(2)'"


@dataclass(frozen=True)
class LieCandidate:
    """A simple group of Lie type over GF(p**e); m is the rank parameter
    for the classical families and None otherwise."""

    family: str
    p: int
    e: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.family not in LIE_FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in _RANKED:
            if self.m is None or self.m < _RANKED[self.family]:
                raise ValueError(f"rank {self.m} inadmissible for {self.family}")
        elif self.m is not None:
            raise ValueError(f"{self.family} takes no rank parameter")
        if self.e < 1:
            raise ValueError("field exponent must be >= 1")

    @property
    def q0(self) -> int:
        return self.p**self.e


@dataclass(frozen=True)
class AlternatingCandidate:
    n: int

    def __post_init__(self) -> None:
        if self.n < 5:
            raise ValueError("alternating candidates start at degree 5")


@dataclass(frozen=True)
class SporadicCandidate:
    name: str


@dataclass(frozen=True)
class TitsCandidate:
    pass


SimpleCandidate = LieCandidate | AlternatingCandidate | SporadicCandidate | TitsCandidate


def steinberg_exponent(family: str, m: int | None = None) -> int:
    """Exponent N with |S|_p = q0**N for the family's Steinberg degree."""
    if family in _FIXED_EXPONENT:
        if m is not None:
            raise ValueError(f"{family} takes no rank parameter")
        return _FIXED_EXPONENT[family]
    if family not in _RANKED:
        raise ValueError(f"unknown family {family!r}")
    if m is None or m < _RANKED[family]:
        raise ValueError(f"rank {m} inadmissible for {family}")
    if family in ("PSL", "PSU"):
        return m * (m - 1) // 2
    if family in ("PSp", "Omega"):
        return m * m
    return m * (m - 1)  # OmegaPM


def unipotent_degree(candidate: LieCandidate) -> int | None:
    """The listed second degree of the family at q0, when there is one.

    PSL and PSU carry one for m >= 4, PSp for m >= 2, Omega for m >= 3,
    and E7 carries the cyclotomic product q0**46 * Phi7 * Phi12 * Phi14.
    """
    q0, m = candidate.q0, candidate.m
    fam = candidate.family
    if fam == "PSL" and m >= 4:
        num = q0 * (q0 ** (m - 1) - 1)
        den = q0 - 1
    elif fam == "PSU" and m >= 4:
        num = q0 * (q0 ** (m - 1) - (-1) ** (m - 1))
        den = q0 + 1
    elif fam in ("PSp", "Omega"):
        num = q0 * (q0**m - 1) * (q0 ** (m - 1) + 1)
        den = q0 - 1
    elif fam == "E7":
        return (
            q0**46
            * cyclotomic_eval(7, q0)
            * cyclotomic_eval(12, q0)
            * cyclotomic_eval(14, q0)
        )
    else:
        return None
    quot, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"inexact unipotent degree for {candidate}")
    return quot


def alt_char_degree(n: int, r: int, s: int) -> int:
    """Degree of the two-row-indexed character of the symmetric group that
    restricts irreducibly to the alternating group for the (r, s) used here:
    C(n,s) * C(n-s-1,r-1) * (n-2s-r) / (r+s)."""
    if n < 8 or r < 1 or s < 0 or r + 2 * s + 1 > n:
        raise ValueError(f"inadmissible parameters (n={n}, r={r}, s={s})")
    num = comb(n, s) * comb(n - s - 1, r - 1) * (n - 2 * s - r)
    quot, rem = divmod(num, r + s)
    if rem:
        raise AssertionError(f"inexact division for (n={n}, r={r}, s={s})")
    return quot


def alt_16_witness(n: int) -> tuple[int, int, int]:
    """A pair (r, s) with 16 dividing the corresponding degree, for n >= 8.

    Even n uses (2, 1); n = 4t+1 uses (1, 2); n = 4t+3 uses (3, 2).  The
    chosen pairs avoid the two parameter families that fail to restrict
    irreducibly (s = 0 with n = 2r+1, and s = 1 with n = 2r+2).
    """
    if n < 8:
        raise ValueError("witness defined for n >= 8")
    if n % 2 == 0:
        r, s = 2, 1
    elif n % 4 == 1:
        r, s = 1, 2
    else:
        r, s = 3, 2
    degree = alt_char_degree(n, r, s)
    assert degree % 16 == 0, (n, r, s, degree)
    return r, s, degree


@dataclass(frozen=True)
class SporadicFact:
    name: str
    order: int
    exceptional: bool
    witnesses: tuple[int, ...]
    has_degree_div_16: bool
    witness_is_two_part: bool


def _load_sporadic_table() -> dict[str, SporadicFact]:
    text = resources.files(__package__).joinpath("sporadic_witnesses.tsv").read_text()
    table: dict[str, SporadicFact] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, order_s, kind, witness_s = line.split("\t")
        order = int(order_s)
        witnesses = tuple(int(w) for w in witness_s.split(","))
        if kind == "pair":
            if len(witnesses) != 2:
                raise AssertionError(f"{name}: pair rows need two witnesses")
            for w in witnesses:
                if w % 2 != 0 or w % 16 == 0 or order % w != 0:
                    raise AssertionError(f"{name}: bad pair witness {w}")
            if (witnesses[0] * witnesses[1]) % 16 != 0:
                raise AssertionError(f"{name}: pair product not divisible by 16")
            fact = SporadicFact(name, order, True, witnesses, False, False)
        elif kind in ("degree16", "two-part"):
            (w,) = witnesses
            if w % 16 != 0 or order % w != 0:
                raise AssertionError(f"{name}: bad witness {w}")
            if kind == "two-part" and w != 2 ** val_p(order, 2):
                raise AssertionError(f"{name}: {w} is not the 2-part of the order")
            fact = SporadicFact(name, order, False, witnesses, True, kind == "two-part")
        else:
            raise AssertionError(f"{name}: unknown kind {kind!r}")
        table[name] = fact
    if len(table) != 27:
        raise AssertionError(f"expected 27 rows, found {len(table)}")
    if {n for n, t in table.items() if t.exceptional} != {"J1", "M22"}:
        raise AssertionError("exactly J1 and M22 must be exceptional")
    return table


_SPORADIC = _load_sporadic_table()
_ALIASES = {"Tits": TITS_NAME, "O'N": "ON", "F24": "Fi24'"}


def sporadic_names() -> tuple[str, ...]:
    """The 26 sporadic group names plus the Tits group, in table order."""
    return tuple(_SPORADIC)


def sporadic_fact(name: str) -> SporadicFact:
    key = _ALIASES.get(name, name)
    if key not in _SPORADIC:
        raise ValueError(f"unknown sporadic group {name!r}")
    return _SPORADIC[key]
