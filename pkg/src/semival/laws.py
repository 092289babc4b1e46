"""Bounded law checkers for the semiring axioms and structural probes."""

from __future__ import annotations

from .reports import LawReport, SampleSpec, law_counterexample, law_holds
from .sampling import pair_stream, triple_stream
from .semiring import Semiring


def check_semiring_axioms(instance: Semiring, spec: SampleSpec) -> LawReport:
    """Sampled check of the semiring axioms: commutative monoids (S,+,0) and
    (S,*,1) with 1 != 0, distributivity, and a*0 = 0."""
    law = f"semiring-axioms[{instance.sid}]"
    zero, one = instance.zero, instance.one
    if instance.eq(zero, one):
        return law_counterexample(law, (zero, one), spec, "1 = 0")
    eq, add, mul = instance.eq, instance.add, instance.mul
    for a, b, c in triple_stream(instance, spec, salt="axioms"):
        if not eq(add(a, b), add(b, a)):
            return law_counterexample(law, (a, b), spec, "a+b != b+a")
        if not eq(add(add(a, b), c), add(a, add(b, c))):
            return law_counterexample(law, (a, b, c), spec, "(a+b)+c != a+(b+c)")
        if not eq(add(a, zero), a):
            return law_counterexample(law, (a,), spec, "a+0 != a")
        if not eq(mul(a, b), mul(b, a)):
            return law_counterexample(law, (a, b), spec, "a*b != b*a")
        if not eq(mul(mul(a, b), c), mul(a, mul(b, c))):
            return law_counterexample(law, (a, b, c), spec, "(a*b)*c != a*(b*c)")
        if not eq(mul(a, one), a):
            return law_counterexample(law, (a,), spec, "a*1 != a")
        if not eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))):
            return law_counterexample(law, (a, b, c), spec, "a*(b+c) != a*b+a*c")
        if not eq(mul(a, zero), zero):
            return law_counterexample(law, (a,), spec, "a*0 != 0")
    return law_holds(law, spec)


def probe_mc_entire(instance: Semiring,
                    spec: SampleSpec) -> tuple[LawReport, LawReport]:
    """Sampled searches for cancellation failures and zero divisors.

    Semifields are cancellative and entire by construction, so their
    verdicts are returned analytically without sampling.
    """
    mc_law = f"mc[{instance.sid}]"
    entire_law = f"entire[{instance.sid}]"
    if instance.caps.semifield:
        return (law_holds(mc_law, spec, "semifield", analytic=True),
                law_holds(entire_law, spec, "semifield", analytic=True))
    eq, mul, zero = instance.eq, instance.mul, instance.zero
    mc = None
    for a, b, c in triple_stream(instance, spec, salt="mc"):
        if eq(a, zero) or eq(b, c):
            continue
        if eq(mul(a, b), mul(a, c)):
            mc = law_counterexample(mc_law, (a, b, c), spec,
                                    "a*b = a*c with a != 0, b != c")
            break
    if mc is None:
        mc = law_holds(mc_law, spec)
    entire = None
    for a, b in pair_stream(instance, spec, salt="entire"):
        if eq(a, zero) or eq(b, zero):
            continue
        if eq(mul(a, b), zero):
            entire = law_counterexample(entire_law, (a, b), spec,
                                        "a*b = 0 with a, b != 0")
            break
    if entire is None:
        entire = law_holds(entire_law, spec)
    return mc, entire
