"""Shared test fixtures: explicit curves from the worked examples, and
random generators used across the property suites."""

import random

from gmpy2 import mpq

from hyperred.valfield import (
    GaussRat,
    RationalAtP,
    RootPair,
    ValuedElement,
)


def ve_poly(*pairs):
    """ValuedElement polynomial in pi from (exponent, int-coeff) pairs."""
    return ValuedElement({e: GaussRat(c) for e, c in pairs})


def ex316_roots():
    """Roots of the running star-shaped example: two close twin pairs near 0
    (depths 5 and 7 inside a depth-2 cluster) and a twin at 1 (depth 1)."""
    return [
        RootPair.finite(ve_poly((2, -1), (5, 1))),    # -p^2 + p^5
        RootPair.finite(ve_poly((2, -1), (5, -1))),   # -p^2 - p^5
        RootPair.finite(ve_poly((3, -1), (7, -1))),   # -p^3 - p^7
        RootPair.finite(ve_poly((3, -1), (7, 1))),    # -p^3 + p^7
        RootPair.finite(ve_poly((0, 1))),             # 1
        RootPair.finite(ve_poly((0, 1), (1, 1))),     # 1 + p
    ]


def rational_roots(values, p):
    return [RootPair.finite(RationalAtP(v, p)) for v in values]


def random_unit(rng, e=1):
    """A valuation-0 element 1 + (small stuff of positive valuation)."""
    f = {0: GaussRat(rng.randint(1, 5))}
    for _ in range(rng.randint(0, 2)):
        f[rng.randint(1, 6)] = GaussRat(rng.randint(-4, 4))
    return ValuedElement(f, None, e)


def random_cluster_roots(rng, d=6, e=1, max_depth=4):
    """d distinct roots with a random nested-disc structure, exact over e."""
    roots = []

    def emit(count, center, depth):
        # split count roots below a center at the given depth
        groups = []
        remaining = count
        while remaining:
            take = rng.randint(1, remaining)
            groups.append(take)
            remaining -= take
        used = set()
        for g in groups:
            u = rng.randint(1, 9)
            while u in used:
                u = rng.randint(1, 9)
            used.add(u)
            offset = ValuedElement({depth * e: GaussRat(u)}, None, e)
            c2 = center.add(offset)
            if g == 1 or depth >= max_depth:
                for k in range(g):
                    if k == 0:
                        roots.append(c2)
                    else:
                        bump = ValuedElement(
                            {(depth + 1 + k) * e: GaussRat(rng.randint(1, 5))},
                            None, e)
                        roots.append(c2.add(bump))
            else:
                emit(g, c2, depth + rng.randint(1, 2))

    emit(d, ValuedElement.zero(e), 0)
    # retry on accidental collisions
    seen = set()
    for r in roots:
        key = (frozenset(r.num.items()), frozenset(r.den.items()))
        if key in seen:
            return random_cluster_roots(rng, d, e, max_depth)
        seen.add(key)
    return [RootPair.finite(r) for r in roots]
