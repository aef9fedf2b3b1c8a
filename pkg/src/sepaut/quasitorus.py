"""Structure of the diagonal symmetries preserving the hypersurface.

A diagonal map x_v -> t_v x_v preserves the zero set of a separated
polynomial exactly when it multiplies every monomial by one common scalar,
i.e. when all monomial exponent vectors (characters) agree on it.  The group
of such maps is a quasitorus H: a torus times a finite abelian group.  Its
character group is Z^n modulo the lattice spanned by the pairwise character
differences, so the Smith normal form of the difference matrix D hands us
the torus rank, the torsion invariants, and explicit generators.

`count_torsion_points_mod` is the independent cross-check: it counts the
solutions of D e == 0 (mod N) by sheer enumeration of all N^n candidates,
with no Smith normal form anywhere near it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .intlat import IntMatrix, kernel_basis, smith_normal_form
from .polyio import CanonicalForm

__all__ = [
    "SingleMonomialError",
    "EnumerationTooLargeError",
    "CharacterData",
    "TorsionGenerator",
    "QuasitorusDescription",
    "character_matrix",
    "quasitorus_structure",
    "count_torsion_points_mod",
    "torsion_count_formula",
]

ENUMERATION_LIMIT = 10_000_000


class SingleMonomialError(ValueError):
    """A one-monomial polynomial cuts out a union of coordinate hyperplane
    intersections; the semidirect-product description does not apply."""


class EnumerationTooLargeError(ValueError):
    """The brute-force count N^n would exceed the enumeration guard."""


@dataclass(frozen=True)
class CharacterData:
    """Monomial characters and their differences against a base monomial."""

    var_order: tuple[str, ...]
    characters: tuple[tuple[int, ...], ...]
    difference_matrix: IntMatrix
    base: int = 0

    @property
    def variable_count(self) -> int:
        return len(self.var_order)

    @property
    def monomial_count(self) -> int:
        return len(self.characters)


@dataclass(frozen=True)
class TorsionGenerator:
    """Diagonal map x_v -> zeta^e_v x_v with zeta a primitive root of unity.

    Held purely arithmetically as (order, exponent vector); membership and
    order checks are integer congruences, no cyclotomic numbers involved.
    """

    order: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class QuasitorusDescription:
    torus_rank: int
    torsion: tuple[int, ...]
    cocharacter_basis: tuple[tuple[int, ...], ...]
    torsion_generators: tuple[TorsionGenerator, ...]


def character_matrix(cf: CanonicalForm, base: int = 0) -> CharacterData:
    """Characters of all monomials and the matrix of differences.

    Rows of the difference matrix are chi_i - chi_base over the canonical
    monomial order (mixed blocks first, then pure powers).  Because monomial
    supports are pairwise disjoint, the rows are linearly independent: the
    matrix always has full row rank M - 1.
    """
    chars = cf.monomial_vectors
    m = len(chars)
    if m < 2:
        raise SingleMonomialError(
            "need at least two monomials to cut out a hypersurface with "
            "diagonal symmetry structure"
        )
    if not 0 <= base < m:
        raise ValueError(f"base monomial index {base} out of range")
    rows = [
        [x - b for x, b in zip(chars[i], chars[base])]
        for i in range(m)
        if i != base
    ]
    return CharacterData(
        var_order=cf.var_order,
        characters=chars,
        difference_matrix=IntMatrix.from_rows(rows, cols=cf.variable_count),
        base=base,
    )


def quasitorus_structure(cd: CharacterData) -> QuasitorusDescription:
    """Torus rank, torsion invariants and explicit generators of H.

    The cokernel of the difference matrix D (as a map on character lattices)
    is Z^d + sum of Z/d_i with d = n - rank(D) and d_i the nontrivial Smith
    divisors.  Each torsion generator comes from the column of the Smith
    column transform paired with its divisor: D v_k = d_k * (integer vector),
    so v_k mod d_k defines a diagonal map of exact order d_k preserving the
    hypersurface (columns of a unimodular matrix are primitive).
    """
    d_matrix = cd.difference_matrix
    snf = smith_normal_form(d_matrix)
    n = cd.variable_count
    if snf.rank != d_matrix.rows:
        raise AssertionError("difference matrix lost rank; input not separated?")
    generators = []
    torsion = []
    for k, dk in enumerate(snf.divisors):
        if dk > 1:
            torsion.append(dk)
            col = snf.V.column(k)
            generators.append(
                TorsionGenerator(order=dk, exponents=tuple(c % dk for c in col))
            )
    return QuasitorusDescription(
        torus_rank=n - snf.rank,
        torsion=tuple(torsion),
        cocharacter_basis=kernel_basis(d_matrix),
        torsion_generators=tuple(generators),
    )


def count_torsion_points_mod(cd: CharacterData, modulus: int) -> int:
    """Count e in (Z/N)^n with D e == 0 (mod N) by full enumeration.

    Every one of the N^n candidate vectors is evaluated against every row of
    D (vectorized, but literally exhaustive).  Guarded by N^n <= 10^7.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    n = cd.variable_count
    total = modulus**n
    if total > ENUMERATION_LIMIT:
        raise EnumerationTooLargeError(
            f"N^n = {modulus}^{n} = {total} exceeds the enumeration guard "
            f"{ENUMERATION_LIMIT}"
        )
    keep = np.ones(total, dtype=bool)
    base = np.arange(modulus, dtype=np.int32)
    for row in cd.difference_matrix.to_rows():
        acc = np.zeros(1, dtype=np.int32)
        for coeff in row:
            step = (coeff % modulus) * base % modulus
            acc = (acc[:, None] + step[None, :]).reshape(-1) % modulus
        keep &= acc == 0
    return int(np.count_nonzero(keep))


def torsion_count_formula(cd: CharacterData, modulus: int) -> int:
    """Closed form for the same count: N^(n-r) * prod gcd(d_i, N).

    This is the Smith-divisor side of the dual check whose other side is
    `count_torsion_points_mod`.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    snf = smith_normal_form(cd.difference_matrix)
    free = cd.variable_count - snf.rank
    count = modulus**free
    for dk in snf.divisors:
        count *= math.gcd(dk, modulus)
    return count
