"""The full law-check matrix, one runnable criterion per structural fact.

Every check is exact (no tolerances) and bounded by an explicit
(seed, samples, size_bound); the whole matrix is designed to finish in
well under a minute on a desktop machine.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .content import (
    content,
    cp_mul,
    dedekind_mertens_check,
    gaussian_check,
    gaussian_defect,
    sample_content_polys,
)
from .dvs import (
    DVSStructure,
    carrier_ideal,
    dvs_ideal_of,
    dvs_normal_form,
    euclidean_divide,
    integral_check,
    intersection_probe,
    standard_dvs_structures,
)
from .extended import ExtendedValue
from .fracfield import embed_in_fractions, extend_valuation
from .ideals import (
    fuzzy_ideal_classify,
    ideal_power,
    ideal_product,
    ideals_comparable,
    interval_comparable,
    is_subtractive_bounded,
    make_ideal,
    positive_ideal,
)
from .instances import get_instance
from .laws import probe_mc_entire
from .reports import SampleSpec
from .sampling import stream
from .valuation import (
    REGISTERED_VALUATIONS,
    SEMIFIELD_SURJECTIVE,
    check_min_property,
    check_valuation_axioms,
    get_valuation,
    level_membership,
    units_vs_zeroset,
    valuate,
)

SEED = 1
SIZE = 50
FULL = SampleSpec(SEED, 10_000, SIZE)
MID = SampleSpec(SEED, 1_000, SIZE)
SMALL = SampleSpec(SEED, 300, SIZE)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] criterion {self.number:2d}: {self.title} -- {self.detail}"


def _result(number: int, title: str, passed: bool, detail: str) -> CriterionResult:
    return CriterionResult(number, title, bool(passed), detail)


def _valuation(rule: str, sid: str):
    return get_valuation(rule, get_instance(sid))


def criterion_1() -> CriterionResult:
    """Every registered rule satisfies the valuation axioms."""
    failures = []
    for rule, sid in REGISTERED_VALUATIONS:
        report = check_valuation_axioms(_valuation(rule, sid), FULL)
        if not report.holds:
            failures.append(f"{rule}@{sid}: {report}")
    detail = (f"{len(REGISTERED_VALUATIONS)} rules hold at 10^4 pairs"
              if not failures else "; ".join(failures))
    return _result(1, "valuation axioms for every registered rule",
                   not failures, detail)


MIN_PROPERTY_HOLDS = (
    ("vp:5", "qnn"),
    ("low-order", "monoid(nat,N0)"),
    ("vm-idz:5", "fractions(ideals-z)"),
    ("tropical-id", "tropical-int"),
)


def criterion_2() -> CriterionResult:
    """Min-property dichotomy, with the degree-difference witness (1, X)."""
    problems = []
    for rule, sid in MIN_PROPERTY_HOLDS:
        report = check_min_property(_valuation(rule, sid), FULL)
        if not report.holds:
            problems.append(f"{rule}@{sid} unexpectedly fails: {report}")
    v = _valuation("deg-frac", "fractions(poly(nat))")
    report = check_min_property(v, FULL)
    if report.holds:
        problems.append("deg-frac unexpectedly satisfies the min-property")
    else:
        # the found witness must re-verify by evaluation
        vx, vy = valuate(v, report.x), valuate(v, report.y)
        vs = valuate(v, v.source.add(report.x, report.y))
        if not (vx != vy and vs != min(vx, vy)):
            problems.append("recorded witness does not re-verify")
        # and the canonical pair (1, X) exhibits the same violation
        frs = v.source
        one, x = frs.one, frs.indeterminate()
        v1, vX = valuate(v, one), valuate(v, x)
        vsum = valuate(v, frs.add(one, x))
        if not (v1 == ExtendedValue.fin("Z", 0) and vX == ExtendedValue.fin("Z", 1)
                and vsum == ExtendedValue.fin("Z", 1)):
            problems.append("the pair (1, X) does not re-verify")
    detail = ("four rules hold, deg-frac refuted; witness "
              f"({report.x}, {report.y}) re-verified" if not problems
              else "; ".join(problems))
    return _result(2, "min-property dichotomy", not problems, detail)


def criterion_3() -> CriterionResult:
    """Min-property both ways equals subtractivity of the positive ideal for
    semifield-source surjective rules."""
    problems = []
    holds_count = cex_count = 0
    for rule, sid in SEMIFIELD_SURJECTIVE:
        v = _valuation(rule, sid)
        minp = check_min_property(v, FULL).holds
        subt = is_subtractive_bounded(positive_ideal(v), FULL).holds
        if minp != subt:
            problems.append(f"{rule}@{sid}: min-property {minp} vs subtractive {subt}")
        elif minp:
            holds_count += 1
        else:
            cex_count += 1
    if not problems and (holds_count, cex_count) != (4, 1):
        problems.append(f"expected 4 agreeing holds and 1 agreeing refutation, "
                        f"got {holds_count} and {cex_count}")
    detail = ("verdicts agree on all five rules (4 hold, 1 refuted)"
              if not problems else "; ".join(problems))
    return _result(3, "subtractive positive ideal iff min-property",
                   not problems, detail)


def criterion_4() -> CriterionResult:
    """Units of the nonnegative part versus the zero set of the valuation."""
    problems = []
    for rule, sid in (("vp:5", "qnn"), ("tropical-id", "tropical-int")):
        report = units_vs_zeroset(_valuation(rule, sid), FULL)
        if not report.holds:
            problems.append(f"{rule}@{sid}: {report}")
    lau = get_instance("laurent(nat)")
    v = get_valuation("low-order", lau)
    report = units_vs_zeroset(v, FULL)
    expected = lau.add(lau.one, lau.indeterminate())
    if report.holds:
        problems.append("low-order@laurent(nat) unexpectedly agrees")
    elif not lau.eq(report.witness[0], expected):
        problems.append(f"gap witness is {report.witness[0]}, expected 1 + X")
    detail = ("agreement on both semifields; polynomial gap witnessed by 1 + X"
              if not problems else "; ".join(problems))
    return _result(4, "unit set equals zero set exactly on semifields",
                   not problems, detail)


def criterion_5() -> CriterionResult:
    """Extending the 5-adic rule on nat to fractions is again a valuation and
    restricts correctly along z -> z/1."""
    nat = get_instance("nat")
    v = get_valuation("vp:5", nat)
    ext = extend_valuation(v)
    problems = []
    report = check_valuation_axioms(ext, FULL)
    if not report.holds:
        problems.append(str(report))
    frs = ext.source
    for z in stream(nat, MID, salt="embed"):
        lifted = valuate(ext, embed_in_fractions(frs, z))
        base = valuate(v, z)
        if lifted.is_inf != base.is_inf or (not base.is_inf
                                            and lifted.value != base.value):
            problems.append(f"embedding mismatch at {z}")
            break
    detail = ("axioms hold at 10^4 fraction pairs; 10^3 embeddings agree"
              if not problems else "; ".join(problems))
    return _result(5, "valuation extension to the fraction semifield",
                   not problems, detail)


def _dvs_battery(D: DVSStructure) -> list[str]:
    problems = []
    amb = D.ambient
    v = D.valuation

    # (a) sampled finitely generated ideal pairs are comparable
    gens_pool = D.sample_carrier(SampleSpec(SEED, 120, 12), salt="ideals",
                                 nonzero=True)
    ideals = []
    for i in range(0, min(len(gens_pool), 90), 3):
        ideals.append(carrier_ideal(D, gens_pool[i: i + 3]))
    count = 0
    for i in range(len(ideals)):
        for j in range(i + 1, len(ideals)):
            if count >= 300:
                break
            count += 1
            if not ideals_comparable(ideals[i], ideals[j]).holds:
                problems.append(f"incomparable ideal pair #{i},{j}")
                break
    # (b) every nonzero ideal is a uniformizer power, verified by inclusion
    for I in ideals[:60]:
        if I.is_zero():
            continue
        n = dvs_ideal_of(D, I)
        if n != min(valuate(v, g).value for g in I.generators):
            problems.append(f"ideal exponent mismatch for {I}")
            break
    # (c) normal forms round-trip exactly
    for x in D.sample_carrier(FULL, salt="nf", nonzero=True):
        unit, n = dvs_normal_form(D, x)
        if valuate(v, unit) != ExtendedValue.fin("Z", 0):
            problems.append(f"normal-form unit of {x} has nonzero value")
            break
        if not amb.eq(amb.mul(unit, amb.power(D.uniformizer, n)), x):
            problems.append(f"normal form of {x} does not multiply back")
            break
    # (d) division with remainder is exact
    xs = D.sample_carrier(FULL, salt="div-a")
    ys = D.sample_carrier(FULL, salt="div-b", nonzero=True)
    for a, b in zip(xs, ys):
        q, r = euclidean_divide(D, a, b)
        if not amb.eq(amb.add(amb.mul(q, b), r), a):
            problems.append(f"a != qb + r at ({a}, {b})")
            break
        if not (r.is_zero() or valuate(v, r) < valuate(v, b)):
            problems.append(f"remainder too large at ({a}, {b})")
            break
    # (e) uniformizer powers shrink to zero: escape at exactly v(x) + 1
    for x in D.sample_carrier(MID, salt="chain", nonzero=True):
        n = valuate(v, x).value
        report = intersection_probe(D, x, n + 1)
        if not report.holds or report.detail != f"escapes at n={n + 1}":
            problems.append(f"chain probe failed at {x}: {report}")
            break
    return problems


def criterion_6() -> CriterionResult:
    """The discrete-structure battery on all four carriers."""
    problems = []
    for D in standard_dvs_structures():
        for p in _dvs_battery(D):
            problems.append(f"{D.name}: {p}")
    detail = ("comparability, ideal exponents, normal forms, division and "
              "chain probes pass on all four carriers"
              if not problems else "; ".join(problems))
    return _result(6, "discrete valuation structure battery", not problems, detail)


def criterion_7() -> CriterionResult:
    """(X) and (X+1) are incomparable over the Boolean polynomials."""
    bp = get_instance("bool-poly")
    x = bp.indeterminate()
    x1 = bp.add(x, bp.one)
    report = ideals_comparable(make_ideal(bp, [x]), make_ideal(bp, [x1]), SMALL)
    ok = (not report.holds and len(report.witness) == 2
          and bp.eq(report.witness[0], x) and bp.eq(report.witness[1], x1))
    detail = ("incomparable with witnesses X and X + 1" if ok
              else f"unexpected report: {report}")
    return _result(7, "incomparable principal ideals over bool-poly", ok, detail)


def criterion_8() -> CriterionResult:
    """The fuzzy instance: cancellation fails, entirety holds, and interval
    ideals are totally ordered."""
    fuzzy = get_instance("fuzzy")
    mc, entire = probe_mc_entire(fuzzy, FULL)
    problems = []
    if mc.holds:
        problems.append("no cancellation counterexample found")
    else:
        a, b, c = mc.witness
        if not (fuzzy.eq(fuzzy.mul(a, b), fuzzy.mul(a, c)) and not fuzzy.eq(b, c)
                and not a.is_zero()):
            problems.append("cancellation witness does not re-verify")
    if not entire.holds:
        problems.append(f"zero divisors reported: {entire}")
    rng = random.Random(f"{SEED}:interval-ideals")
    for _ in range(1000):
        A = fuzzy_ideal_classify([fuzzy.sample(rng, SIZE)])
        B = fuzzy_ideal_classify([(Fraction(rng.randint(0, 8), 8), rng.random() < 0.5)])
        if not interval_comparable(A, B):
            problems.append(f"incomparable intervals {A}, {B}")
            break
    detail = ("cancellation refuted, entirety holds, 10^3 interval pairs "
              "comparable" if not problems else "; ".join(problems))
    return _result(8, "fuzzy instance structure", not problems, detail)


def criterion_9() -> CriterionResult:
    """Content multiplicativity holds on the subtractive carriers and fails
    on the degree-difference carrier."""
    problems = []
    structures = standard_dvs_structures()
    qnn5, deg = structures[0], structures[2]
    for carrier, label in ((qnn5, "qnn at 5"), (get_instance("ideals-z"), "ideals-z")):
        report = gaussian_check(carrier, MID)
        if not report.holds:
            problems.append(f"{label}: {report}")
    report = gaussian_check(deg, MID, max_degree=2)
    if report.holds:
        problems.append("degree-difference carrier unexpectedly multiplicative")
    else:
        f, g = report.witness[0], report.witness[1]
        redo = gaussian_defect(f, g, deg)
        if redo.holds:
            problems.append("recorded pair does not re-verify")
    detail = ("holds on qnn at 5 and ideals-z; counterexample found and "
              "re-verified on degree-bounded fractions"
              if not problems else "; ".join(problems))
    return _result(9, "content multiplicativity iff subtractive", not problems,
                   detail)


def _brute_nat_member(x: int, gens: list[int]) -> bool:
    # independent oracle: breadth-first reachable sums up to x
    gens = [g for g in gens if 0 < g <= x]
    seen = [False] * (x + 1)
    seen[0] = True
    stack = [0]
    while stack:
        s = stack.pop()
        for g in gens:
            t = s + g
            if t <= x and not seen[t]:
                seen[t] = True
                stack.append(t)
    return seen[x]


def criterion_10() -> CriterionResult:
    """The content identity c(f)^(m+1) c(g) = c(f)^m c(fg) on sampled pairs.

    Over the naturals this identity genuinely fails: it needs subtractive
    coefficient ideals, and nat has non-subtractive ideals such as (2,3).
    A found violation is re-verified with an independent brute-force
    membership oracle so a failure here reports mathematics, not a bug.
    """
    problems = []
    for sid in ("nat", "ideals-z"):
        instance = get_instance(sid)
        polys = sample_content_polys(instance, SampleSpec(SEED, 2000, SIZE))
        half = len(polys) // 2
        checked = 0
        for f, g in zip(polys[:half], polys[half:]):
            if checked >= 1000:
                break
            checked += 1
            report = dedekind_mertens_check(f, g)
            if not report.holds:
                note = ""
                if sid == "nat" and len(report.witness) == 3:
                    escaped = report.witness[2].payload
                    m = g.degree()
                    other = (content(cp_mul(f, g))
                             if "left" in report.detail else content(g))
                    base = content(f)
                    side = ideal_product(ideal_power(base, m if "left" in
                                                     report.detail else m + 1),
                                         other)
                    if escaped <= 1_000_000:
                        outside = not _brute_nat_member(
                            escaped, [gen.payload for gen in side.generators])
                        note = (" (re-verified by brute force: the identity "
                                "needs subtractive coefficients)" if outside
                                else " (brute force disagrees: implementation bug)")
                problems.append(f"{sid}: {report}{note}")
                break
    detail = ("identity holds on 10^3 pairs over nat and over ideals-z"
              if not problems else "; ".join(problems))
    return _result(10, "Dedekind-Mertens content identity", not problems, detail)


def criterion_11() -> CriterionResult:
    """Bounded integrality search on the 5-adic carrier: no witness for
    outside elements, the trivial witness for inside ones."""
    D = standard_dvs_structures()[0]
    qnn = D.ambient
    pool = [qnn.element(v) for v in (0, 1, 2, 5, Fraction(1, 2), 3)]
    problems = []
    outside = stream(qnn, SampleSpec(SEED, 100, SIZE), salt="outside",
                     keep=lambda x: not x.is_zero() and not D.contains(x))
    for u in outside:
        report = integral_check(D, u, 3, pool)
        if not report.holds:
            problems.append(f"unexpected witness for {u}: {report}")
            break
    inside = D.sample_carrier(SampleSpec(SEED, 100, SIZE), salt="inside",
                              nonzero=True)
    for u in inside:
        report = integral_check(D, u, 3, pool)
        if report.holds or "degree 1" not in report.detail:
            problems.append(f"missing trivial witness for {u}")
            break
    detail = ("100 outside elements yield no witness; 100 carrier elements "
              "yield the degree-1 witness" if not problems
              else "; ".join(problems))
    return _result(11, "integral closure probe", not problems, detail)


def criterion_12() -> CriterionResult:
    """Principal ideals match value level sets on the semifield carrier, and
    the inclusion is strict on plain nat."""
    D = standard_dvs_structures()[0]
    qnn = D.ambient
    v = D.valuation
    problems = []
    xs = D.sample_carrier(SampleSpec(SEED, 1000, SIZE), salt="cyclic-x",
                          nonzero=True)
    ys = D.sample_carrier(SampleSpec(SEED, 25, SIZE), salt="cyclic-y")
    for x in xs:
        alpha = valuate(v, x)
        for y in ys:
            in_principal = D.contains(qnn.div(y, x))
            in_level = level_membership(v, y, alpha, strict=False, within_sv=True)
            if in_principal != in_level:
                problems.append(f"(x) vs level set differ at x={x}, y={y}")
                break
        if problems:
            break
    nat = get_instance("nat")
    v5 = get_valuation("vp:5", nat)
    two, three = nat.element(2), nat.element(3)
    ideal_two = make_ideal(nat, [two])
    alpha = valuate(v5, two)
    if ideal_two.contains(three):
        problems.append("3 unexpectedly lies in (2)")
    if not level_membership(v5, three, alpha, strict=False, within_sv=True):
        problems.append("3 escapes the value level set of v(2)")
    detail = ("10^3 carrier elements: (x) equals the level set; on nat the "
              "witness x=2 separates via 3" if not problems
              else "; ".join(problems))
    return _result(12, "principal ideals are value level sets on semifields",
                   not problems, detail)


ALL_CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
    criterion_11, criterion_12,
)


def run_all() -> list[CriterionResult]:
    return [fn() for fn in ALL_CRITERIA]
