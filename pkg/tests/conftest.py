"""Shared fixtures and generators for the test suite."""

import pytest

from sepaut.polyio import make_canonical_form, parse_separated

# running example used across the suite and in the README
FLAGSHIP = "X1^10*X2^11 + Y1^10 + Y2^10 + Y3^10"


@pytest.fixture
def flagship():
    return parse_separated(FLAGSHIP)


def random_canonical_form(rng, max_vars=6, max_exp=6):
    """Random separated canonical form with at least two monomials.

    Variable names stay single-digit-suffixed so lexicographic order matches
    construction order for any max_vars <= 10.
    """
    assert max_vars <= 10
    while True:
        budget = rng.randint(2, max_vars)
        pool = [f"v{k}" for k in range(budget)]
        rng.shuffle(pool)
        mixed, pure, monomials = [], [], 0
        i = 0
        while i < len(pool):
            remaining = len(pool) - i
            if remaining >= 2 and rng.random() < 0.5:
                size = rng.randint(2, min(3, remaining))
                block = pool[i : i + size]
                i += size
                mixed.append((block, [rng.randint(1, max_exp) for _ in block]))
            else:
                pure.append((rng.randint(1, max_exp), [pool[i]]))
                i += 1
            monomials += 1
        if monomials >= 2:
            return make_canonical_form(mixed, pure)


def generated_group(generators, n, cap=20000):
    """BFS closure of a permutation generator set inside S_n."""
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for g in frontier:
            for h in generators:
                composed = tuple(h[g[i]] for i in range(n))
                if composed not in seen:
                    if len(seen) >= cap:
                        raise RuntimeError("closure cap exceeded")
                    seen.add(composed)
                    new.append(composed)
        frontier = new
    return seen


def random_unimodular(rng, d):
    """Random product of elementary integer row operations (det = +-1)."""
    m = [[int(i == j) for j in range(d)] for i in range(d)]
    if d == 1:
        return [[rng.choice([1, -1])]]
    for _ in range(3 * d):
        op = rng.randrange(3)
        i, j = rng.sample(range(d), 2)
        if op == 0:
            m[i], m[j] = m[j], m[i]
        elif op == 1:
            c = rng.randint(-2, 2)
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        else:
            m[i] = [-a for a in m[i]]
    return m


def block_shape(cf):
    """Renaming-invariant signature of a canonical form."""
    return (
        tuple((len(b.variables), b.exponents) for b in cf.mixed_blocks),
        tuple((b.exponent, len(b.variables)) for b in cf.pure_blocks),
    )
