"""Shared test helpers."""

from math import comb

from reecd.elimination import max_v3_mixed
from reecd.exactmath import part_p, val_p
from reecd.lie_data import AlternatingCandidate, sporadic_fact
from reecd.ree import cd_superset, smallest_even_degree


def reverify_outcome(outcome, spec):
    """Recompute the violated relation from the candidate and spec alone.

    Independent of the elimination code path: every quantity is rebuilt
    from first principles and compared against the recorded witness.
    """
    reason, w, cand, k = outcome.reason, outcome.witness, outcome.candidate, outcome.k
    params = spec.params
    f, q = params.f, params.q
    degs = cd_superset(spec)
    even_floor = smallest_even_degree(degs)
    if reason == "prime-power-mismatch":
        return 5**k != q**3
    if reason == "a6-exponent":
        return 2 * k != 3 * f
    if reason == "a7-bound":
        return 6**k < even_floor
    if reason == "even-degree-too-small":
        degree = min(sporadic_fact(w["name"]).witnesses)
        return degree % 2 == 0 and degree < even_floor
    if reason == "sporadic-witness":
        fact = sporadic_fact(w["name"])
        if fact.exceptional:
            return part_p(fact.witnesses[0] * fact.witnesses[1], 2) > 8
        return fact.witnesses[0] % 16 == 0 and 16 > 8
    if reason == "16-divisibility":
        if isinstance(cand, AlternatingCandidate):
            n, r, s = w["n"], w["r"], w["s"]
            degree = comb(n, s) * comb(n - s - 1, r - 1) * (n - 2 * s - r) // (r + s)
            return degree == w["degree"] and degree % 16 == 0
        q0 = cand.q0
        degree = (
            (q0 - 1) ** 2 * (q0 + 1) if cand.family == "PSL"
            else (q0 - 1) * (q0 + 1) ** 2
        )
        return degree == w["degree"] and val_p(degree, 2) >= 4
    if reason == "not-p3":
        return cand.p != 3
    if reason == "k2-parity":
        return k == 2 and (3 * f) % 2 == 1
    if reason == "parity-3f":
        return w["steinberg_exponent"] % 2 == 0 and (3 * f) % 2 == 1
    if reason == "exponent-equation":
        return w["exponent_product"] != 3 * f
    if reason == "psl2-divisibility":
        divisor = w["divisor"]
        return all(v % divisor for v in degs.members)
    if reason == "unipotent-3part-bound":
        if w.get("strict"):
            return w["three_part_exponent"] not in w["mixed_three_part_exponents"]
        return 2 * cand.e * k + 1 < f
    if reason == "psl-psu-rank-bound":
        return cand.m * (cand.m - 1) > 18
    if reason == "psp-rank-bound":
        return cand.m * cand.m >= 7
    if reason == "e7-3part-overflow":
        return 46 * cand.e * k > max_v3_mixed(degs).max_exponent
    if reason == "2g2-k3-bound":
        return 3 ** (2 * f) >= f**3
    raise AssertionError(f"unknown reason {reason}")
