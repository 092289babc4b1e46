"""Deterministic element streams per instance.

Streams are keyed by (seed, instance id, salt, size bound); identical
specs yield identical streams.  Each stream starts with the instance's
fixed preamble so known witnesses are always visited first, then continues
with pseudo-random elements.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator

from .instances import get_instance
from .reports import SampleSpec
from .semiring import Element, Semiring


def _rng(spec: SampleSpec, sid: str, salt: str) -> random.Random:
    # string seeding hashes the text itself, so this is stable across runs
    return random.Random(f"{spec.seed}:{sid}:{salt}:{spec.size_bound}")


@lru_cache(maxsize=256)
def _cached_stream(sid: str, seed: int, count: int, size_bound: int,
                   salt: str) -> tuple:
    instance = get_instance(sid)
    spec = SampleSpec(seed, count, size_bound)
    rng = _rng(spec, sid, salt)
    out = list(instance.preamble[:count])
    while len(out) < count:
        out.append(instance.sample(rng, size_bound))
    return tuple(out)


def stream(instance: Semiring, spec: SampleSpec, salt: str = "",
           keep: Callable[[Element], bool] | None = None) -> list[Element]:
    """spec.count elements; filtered generation retries up to a fixed cap."""
    if keep is None:
        return list(_cached_stream(instance.sid, spec.seed, spec.count,
                                   spec.size_bound, salt))
    out = [x for x in instance.preamble if keep(x)][:spec.count]
    rng = _rng(spec, instance.sid, salt)
    attempts = 0
    limit = 40 * spec.count + 200
    while len(out) < spec.count and attempts < limit:
        x = instance.sample(rng, spec.size_bound)
        attempts += 1
        if keep(x):
            out.append(x)
    return out


def pair_stream(instance: Semiring, spec: SampleSpec,
                keep: Callable[[Element], bool] | None = None,
                salt: str = "") -> Iterator[tuple[Element, Element]]:
    """spec.count pairs: the preamble square first, then fresh random pairs."""
    pre = [x for x in instance.preamble if keep is None or keep(x)]
    block = list(product(pre, pre))[: spec.count]
    yield from block
    remaining = spec.count - len(block)
    if remaining <= 0:
        return
    side = SampleSpec(spec.seed, remaining, spec.size_bound)
    xs = stream(instance, side, salt=salt + "pair-a", keep=keep)
    ys = stream(instance, side, salt=salt + "pair-b", keep=keep)
    yield from zip(xs, ys)


def triple_stream(instance: Semiring, spec: SampleSpec,
                  keep: Callable[[Element], bool] | None = None,
                  salt: str = "") -> Iterator[tuple[Element, Element, Element]]:
    pre = [x for x in instance.preamble if keep is None or keep(x)]
    block = list(product(pre, pre, pre))[: spec.count]
    yield from block
    remaining = spec.count - len(block)
    if remaining <= 0:
        return
    side = SampleSpec(spec.seed, remaining, spec.size_bound)
    xs = stream(instance, side, salt=salt + "tri-a", keep=keep)
    ys = stream(instance, side, salt=salt + "tri-b", keep=keep)
    zs = stream(instance, side, salt=salt + "tri-c", keep=keep)
    yield from zip(xs, ys, zs)


def nonzero_stream(instance: Semiring, spec: SampleSpec,
                   salt: str = "") -> list[Element]:
    return stream(instance, spec, salt=salt, keep=lambda x: not x.is_zero())
