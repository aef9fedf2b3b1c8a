"""The permutation group of the polynomial: variable permutations fixing F.

For a separated polynomial with unit coefficients a permutation preserves F
exactly when it maps each monomial onto a monomial with the same exponent
data.  Pure powers of equal exponent can be permuted freely (a symmetric
factor per pure block); within a mixed block only variables of equal
exponent may move, and whole mixed blocks can swap when their exponent
multisets coincide, which yields a wreath-type factor per class of
identical blocks.  The group is the direct product of those factors, so its
order has a closed formula and a short generator list; `brute_force_perm_order`
double-checks the order by trying all n! permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby, permutations
from math import factorial, prod

from .polyio import CanonicalForm

__all__ = [
    "TooManyVariablesError",
    "PureFactor",
    "MixedClassFactor",
    "PermGroupDescription",
    "permutation_group",
    "brute_force_perm_order",
    "permute_vector",
    "cycle_notation",
]

BRUTE_FORCE_LIMIT = 8


class TooManyVariablesError(ValueError):
    """Brute force over n! permutations is limited to n <= 8."""


def permute_vector(perm: tuple[int, ...], vec) -> tuple[int, ...]:
    """Move entry v to slot perm[v] (the action of the permutation on
    exponent vectors and diagonal coordinates)."""
    out = [0] * len(vec)
    for v, x in enumerate(vec):
        out[perm[v]] = x
    return tuple(out)


def cycle_notation(perm: tuple[int, ...], names) -> str:
    """Render a permutation in cycle notation over variable names."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(names[v])
            v = perm[v]
        cycles.append("(" + " ".join(cyc) + ")")
    return "".join(cycles) if cycles else "()"


@dataclass(frozen=True)
class PureFactor:
    """Full symmetric group on the variables of one pure block."""

    exponent: int
    variables: tuple[str, ...]


@dataclass(frozen=True)
class MixedClassFactor:
    """Class of mixed blocks with identical exponent data.

    The factor is W^c : S_c (wreath type) where c is the class size and W is
    the product of symmetric groups on the equal-exponent runs inside one
    block.
    """

    block_indices: tuple[int, ...]
    exponents: tuple[int, ...]
    inner_multiplicities: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.block_indices)

    @property
    def inner_order(self) -> int:
        return prod(factorial(m) for m in self.inner_multiplicities)


@dataclass(frozen=True)
class PermGroupDescription:
    pure_factors: tuple[PureFactor, ...]
    mixed_classes: tuple[MixedClassFactor, ...]
    order: int
    generators: tuple[tuple[int, ...], ...]
    structure: str


def _transposition(a: int, b: int, n: int) -> tuple[int, ...]:
    perm = list(range(n))
    perm[a], perm[b] = b, a
    return tuple(perm)


def _cycle(points: list[int], n: int) -> tuple[int, ...]:
    perm = list(range(n))
    for a, b in zip(points, points[1:] + points[:1]):
        perm[a] = b
    return tuple(perm)


def _symmetric_generators(points: list[int], n: int) -> list[tuple[int, ...]]:
    # transposition plus full cycle generate the symmetric group on `points`
    if len(points) < 2:
        return []
    gens = [_transposition(points[0], points[1], n)]
    if len(points) >= 3:
        gens.append(_cycle(points, n))
    return gens


def _pointwise_map(columns: list[list[int]], n: int) -> tuple[int, ...]:
    # block k position i maps to block k+1 position i, cyclically
    perm = list(range(n))
    for src, dst in zip(columns, columns[1:] + columns[:1]):
        for a, b in zip(src, dst):
            perm[a] = b
    return tuple(perm)


def permutation_group(cf: CanonicalForm) -> PermGroupDescription:
    """Factor structure, exact order, and generators of the group."""
    n = cf.variable_count
    idx = cf.variable_index
    blocks = cf.mixed_blocks
    gens: list[tuple[int, ...]] = []

    # canonical sorting puts identically shaped mixed blocks next to each other
    classes: list[MixedClassFactor] = []
    i = 0
    while i < len(blocks):
        j = i
        shape = (len(blocks[i].variables), blocks[i].exponents)
        while j < len(blocks) and (len(blocks[j].variables), blocks[j].exponents) == shape:
            j += 1
        mults = tuple(len(list(g)) for _, g in groupby(blocks[i].exponents))
        classes.append(
            MixedClassFactor(
                block_indices=tuple(range(i, j)),
                exponents=blocks[i].exponents,
                inner_multiplicities=mults,
            )
        )
        i = j

    for cls in classes:
        for b in cls.block_indices:
            vars_ = blocks[b].variables
            start = 0
            for _, g in groupby(blocks[b].exponents):
                run = len(list(g))
                points = [idx[v] for v in vars_[start : start + run]]
                gens.extend(_symmetric_generators(points, n))
                start += run
        if cls.size >= 2:
            columns = [[idx[v] for v in blocks[b].variables] for b in cls.block_indices]
            gens.append(_pointwise_map(columns[:2], n))
            if cls.size >= 3:
                gens.append(_pointwise_map(columns, n))

    pure_factors = []
    for b in cf.pure_blocks:
        pure_factors.append(PureFactor(b.exponent, b.variables))
        gens.extend(_symmetric_generators([idx[v] for v in b.variables], n))

    order = 1
    for cls in classes:
        order *= factorial(cls.size) * cls.inner_order**cls.size
    for p in pure_factors:
        order *= factorial(len(p.variables))

    return PermGroupDescription(
        pure_factors=tuple(pure_factors),
        mixed_classes=tuple(classes),
        order=order,
        generators=tuple(gens),
        structure=_structure(classes, pure_factors),
    )


def _structure(classes: list[MixedClassFactor], pure_factors: list[PureFactor]) -> str:
    parts = []
    for cls in classes:
        inner = [f"S{m}" for m in cls.inner_multiplicities if m >= 2]
        if not inner:
            if cls.size >= 2:
                parts.append(f"S{cls.size}")
        elif cls.size == 1:
            parts.extend(inner)
        else:
            core = " × ".join(inner)
            if len(inner) > 1:
                core = f"({core})"
            parts.append(f"{core} wr S{cls.size}")
    for p in pure_factors:
        if len(p.variables) >= 2:
            parts.append(f"S{len(p.variables)}")
    return " × ".join(parts) if parts else "1"


def brute_force_perm_order(cf: CanonicalForm) -> int:
    """Count permutations with F o tau = F by trying all n! of them."""
    n = cf.variable_count
    if n > BRUTE_FORCE_LIMIT:
        raise TooManyVariablesError(
            f"{n} variables: brute force is limited to n <= {BRUTE_FORCE_LIMIT}"
        )
    chars = set(cf.monomial_vectors)
    count = 0
    for perm in permutations(range(n)):
        if {permute_vector(perm, chi) for chi in chars} == chars:
            count += 1
    return count
