"""Degree data for the simple groups ²G₂(q) and their almost simple extensions.

Here q = 3**f with f odd, f >= 3, and theta = 3**((f+1)/2) is the square
root of 3q.  The group has exactly eleven irreducible character degrees,
kept in a fixed canonical order (lines 1 to 11).  An almost simple group
with this socle is described by the extension index d dividing f; its
degree set is modelled by a certified subset together with a certified
superset, and every predicate below is phrased against one of the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactmath import divisors, gcd, is_prime, is_prime_power, part_p, val_p

__all__ = [
    "ReeParams",
    "DegreeEntry",
    "ReeDegreeTable",
    "AlmostSimpleSpec",
    "DegreeSet",
    "MaxSubgroupRow",
    "MaxFilterOutcome",
    "EXTENDING_LINES",
    "ree_params",
    "ree_degree_table",
    "group_order",
    "cd_superset",
    "certified_degrees",
    "prime_power_degrees",
    "max_two_part",
    "smallest_even_degree",
    "is_isolated",
    "gcd_identities_check",
    "maximal_subgroups",
    "maximal_index_filter",
]

# Lines whose characters keep their degree in every extension by field
# automorphisms (the degree-1 line is handled separately everywhere).
EXTENDING_LINES = (2, 3, 4, 5, 9)


@dataclass(frozen=True)
class ReeParams:
    """The parameter triple (f, q = 3**f, theta = sqrt(3q))."""

    f: int
    q: int
    theta: int


def ree_params(f: int) -> ReeParams:
    if not isinstance(f, int) or isinstance(f, bool):
        raise ValueError("f must be an integer")
    if f < 3 or f % 2 == 0:
        raise ValueError("f must be odd and >= 3")
    q = 3**f
    theta = 3 ** ((f + 1) // 2)
    assert theta * theta == 3 * q
    return ReeParams(f=f, q=q, theta=theta)


@dataclass(frozen=True)
class DegreeEntry:
    line: int
    value: int
    extends_to_aut: bool


@dataclass(frozen=True)
class ReeDegreeTable:
    params: ReeParams
    entries: tuple[DegreeEntry, ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(e.value for e in self.entries)

    def entry(self, line: int) -> DegreeEntry:
        if not 1 <= line <= 11:
            raise ValueError("line must be between 1 and 11")
        return self.entries[line - 1]


def _degree_values(params: ReeParams) -> tuple[int, ...]:
    """The eleven degrees in line order; the three divisions are exact."""
    q, th = params.q, params.theta
    num3 = th * (q - 1) * (q - th + 1)
    num4 = th * (q - 1) * (q + th + 1)
    num5 = th * (q - 1) * (q + 1)
    if num3 % 6 or num4 % 6 or num5 % 3:
        raise AssertionError("inexact division in a degree formula")
    return (
        1,
        (q - th + 1) * (q + th + 1),
        num3 // 6,
        num4 // 6,
        num5 // 3,
        (q - 1) * (q + 1) * (q - th + 1),
        (q - 1) * (q - th + 1) * (q + th + 1),
        q * (q - th + 1) * (q + th + 1),
        q**3,
        (q + 1) * (q - th + 1) * (q + th + 1),
        (q - 1) * (q + 1) * (q + th + 1),
    )


def ree_degree_table(params: ReeParams) -> ReeDegreeTable:
    values = _degree_values(params)
    entries = tuple(
        DegreeEntry(line=i + 1, value=v, extends_to_aut=(i + 1) in EXTENDING_LINES)
        for i, v in enumerate(values)
    )
    return ReeDegreeTable(params=params, entries=entries)


def group_order(params: ReeParams) -> int:
    q = params.q
    return q**3 * (q**3 + 1) * (q - 1)


@dataclass(frozen=True)
class AlmostSimpleSpec:
    """Socle parameters plus the index d of the extension, d dividing f."""

    params: ReeParams
    d: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.params.f % self.d != 0:
            raise ValueError("d must be a positive divisor of f")


@dataclass(frozen=True)
class DegreeSet:
    """A finite set of degrees, each with (line, multiplier) provenance."""

    members: tuple[int, ...]
    provenance: dict[int, tuple[tuple[int, int], ...]] = field(compare=False)

    def __contains__(self, x: int) -> bool:
        return x in self.provenance

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _degree_set(pairs: dict[int, set[tuple[int, int]]]) -> DegreeSet:
    members = tuple(sorted(pairs))
    prov = {v: tuple(sorted(pairs[v])) for v in members}
    return DegreeSet(members=members, provenance=prov)


def cd_superset(spec: AlmostSimpleSpec) -> DegreeSet:
    """Certified superset of the degree set of the index-d extension.

    Every degree of the extension is a table degree times a divisor of d.
    Lines 1 and 9 admit no proper multiplier: the trivial character lies
    only under the degree-1 characters of the cyclic top quotient, and the
    q**3 character is the unique one of its degree and extends, so a cyclic
    quotient (all of whose characters are linear) cannot inflate it.
    """
    table = ree_degree_table(spec.params)
    pairs: dict[int, set[tuple[int, int]]] = {}
    for entry in table.entries:
        mults = (1,) if entry.line in (1, 9) else tuple(divisors(spec.d))
        for a in mults:
            pairs.setdefault(entry.value * a, set()).add((entry.line, a))
    return _degree_set(pairs)


def certified_degrees(spec: AlmostSimpleSpec) -> DegreeSet:
    """Degrees the extension provably has: the extending lines, 1, and
    (q**3 + 1) * d."""
    table = ree_degree_table(spec.params)
    pairs: dict[int, set[tuple[int, int]]] = {1: {(1, 1)}}
    for line in EXTENDING_LINES:
        pairs.setdefault(table.entry(line).value, set()).add((line, 1))
    q3p1 = table.entry(10).value
    pairs.setdefault(q3p1 * spec.d, set()).add((10, spec.d))
    return _degree_set(pairs)


def prime_power_degrees(degs: DegreeSet) -> DegreeSet:
    """Members greater than 1 that are prime powers."""
    if not degs.members:
        raise ValueError("empty degree set")
    pairs = {
        v: set(degs.provenance[v])
        for v in degs.members
        if v > 1 and is_prime_power(v) is not None
    }
    return _degree_set(pairs)


def max_two_part(degs: DegreeSet) -> int:
    """Largest 2-part over the members."""
    if not degs.members:
        raise ValueError("empty degree set")
    return max(part_p(v, 2) for v in degs.members)


def smallest_even_degree(degs: DegreeSet) -> int:
    if not degs.members:
        raise ValueError("empty degree set")
    evens = [v for v in degs.members if v % 2 == 0]
    if not evens:
        raise ValueError("no even member")
    return min(evens)


def is_isolated(x: int, degs: DegreeSet) -> bool:
    """True iff no member in (1, x) divides x and no member is a proper
    multiple of x."""
    if x not in degs:
        raise ValueError(f"{x} is not a member of the degree set")
    for y in degs.members:
        if 1 < y < x and x % y == 0:
            return False
        if y > x and y % x == 0:
            return False
    return True


def gcd_identities_check(params: ReeParams) -> bool:
    """The pairwise gcds among q-1, q+1, q-theta+1, q+theta+1."""
    q, th = params.q, params.theta
    return (
        gcd(q - 1, q + 1) == 2
        and gcd(q - 1, q - th + 1) == 1
        and gcd(q - 1, q + th + 1) == 1
        and gcd(q + 1, q - th + 1) == 1
        and gcd(q + 1, q + th + 1) == 1
        and gcd(q - th + 1, q + th + 1) == 1
    )


@dataclass(frozen=True)
class MaxSubgroupRow:
    tag: str
    order: int
    index: int
    r: int | None = None
    q0: int | None = None


def maximal_subgroups(params: ReeParams) -> tuple[MaxSubgroupRow, ...]:
    """The six families of maximal subgroups, with exact orders and indices."""
    q, th, f = params.q, params.theta, params.f
    total = group_order(params)
    rows = [
        ("parabolic", q**3 * (q - 1)),
        ("involution-centralizer", q * (q * q - 1)),
        ("dihedral-normalizer", 6 * (q + 1)),
        ("torus-plus", 6 * (q + th + 1)),
        ("torus-minus", 6 * (q - th + 1)),
    ]
    out = []
    for tag, order in rows:
        assert total % order == 0
        out.append(MaxSubgroupRow(tag=tag, order=order, index=total // order))
    for r in [p for p in divisors(f) if is_prime(p)]:
        q0 = 3 ** (f // r)
        order = q0**3 * (q0**3 + 1) * (q0 - 1)
        assert total % order == 0
        out.append(
            MaxSubgroupRow(
                tag=f"subfield({r})", order=order, index=total // order, r=r, q0=q0
            )
        )
    return tuple(out)


@dataclass(frozen=True)
class MaxFilterOutcome:
    row: MaxSubgroupRow
    surviving: bool
    witness: dict


def maximal_index_filter(spec: AlmostSimpleSpec) -> list[MaxFilterOutcome]:
    """Which maximal-subgroup indices divide some member of the superset.

    A failing row records a valuation witness: its index carries a 3-part
    too large for any mixed member, and a nontrivial part coprime to 3, so
    neither the mixed members nor the pure powers of 3 can absorb it.
    """
    degs = cd_superset(spec)
    mixed_vals = [
        val_p(v, 3)
        for v in degs.members
        if v > 1 and is_prime_power(v) is None
    ]
    max_mixed = max(mixed_vals, default=0)
    out = []
    for row in maximal_subgroups(spec.params):
        dividing = [v for v in degs.members if v % row.index == 0]
        if dividing:
            witness = {"index": row.index, "dividing_member": dividing[0]}
            out.append(MaxFilterOutcome(row=row, surviving=True, witness=witness))
        else:
            v3 = val_p(row.index, 3)
            witness = {
                "index": row.index,
                "index_three_part_exponent": v3,
                "max_mixed_three_part_exponent": max_mixed,
                "index_coprime_part": row.index // 3**v3,
            }
            out.append(MaxFilterOutcome(row=row, surviving=False, witness=witness))
    return out
