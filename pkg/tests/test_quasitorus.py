import math
import random

import pytest

from conftest import random_canonical_form
from sepaut.autassembly import fermat_form
from sepaut.polyio import make_canonical_form, parse_separated
from sepaut.quasitorus import (
    EnumerationTooLargeError,
    SingleMonomialError,
    character_matrix,
    count_torsion_points_mod,
    quasitorus_structure,
    torsion_count_formula,
)


def test_flagship_characters_and_differences(flagship):
    cd = character_matrix(flagship)
    assert cd.characters == (
        (11, 10, 0, 0, 0),
        (0, 0, 10, 0, 0),
        (0, 0, 0, 10, 0),
        (0, 0, 0, 0, 10),
    )
    assert cd.difference_matrix.to_rows() == [
        [-11, -10, 10, 0, 0],
        [-11, -10, 0, 10, 0],
        [-11, -10, 0, 0, 10],
    ]


def test_fermat_difference_matrix():
    cd = character_matrix(fermat_form(3, 3))
    assert cd.difference_matrix.to_rows() == [[-3, 3, 0], [-3, 0, 3]]


def test_two_pure_powers_difference():
    # canonical order puts the higher pure exponent first: (y, x)
    cd = character_matrix(parse_separated("x^2 + y^3"))
    assert cd.var_order == ("y", "x")
    assert cd.difference_matrix.to_rows() == [[-3, 2]]


def test_single_monomial_rejected():
    with pytest.raises(SingleMonomialError):
        character_matrix(parse_separated("x*y"))
    with pytest.raises(SingleMonomialError):
        character_matrix(parse_separated("x^5"))


def test_flagship_structure(flagship):
    q = quasitorus_structure(character_matrix(flagship))
    assert q.torus_rank == 2
    assert q.torsion == (10, 10)
    assert len(q.cocharacter_basis) == 2


def test_two_pure_powers_structure():
    q = quasitorus_structure(character_matrix(parse_separated("x^2 + y^3")))
    assert q.torus_rank == 1
    assert q.torsion == ()
    assert q.torsion_generators == ()


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("alpha", range(2, 8))
def test_fermat_family_structure(n, alpha):
    q = quasitorus_structure(character_matrix(fermat_form(n, alpha)))
    assert q.torus_rank == 1
    assert q.torsion == (alpha,) * (n - 1)


def test_torsion_generators_are_valid(flagship):
    rng = random.Random(44)
    for cf in [flagship] + [random_canonical_form(rng) for _ in range(25)]:
        cd = character_matrix(cf)
        q = quasitorus_structure(cd)
        for gen in q.torsion_generators:
            residues = [
                sum(a * e for a, e in zip(row, gen.exponents)) % gen.order
                for row in cd.difference_matrix.to_rows()
            ]
            assert residues == [0] * cd.difference_matrix.rows
            # exact order: no smaller modulus works
            assert math.gcd(gen.order, *gen.exponents) == 1


def test_count_modulus_one():
    cd = character_matrix(parse_separated("x^2 + y^3"))
    assert count_torsion_points_mod(cd, 1) == 1


def test_count_fermat_all_solutions():
    cd = character_matrix(fermat_form(3, 3))
    # D is divisible by 3, so every vector of (Z/3)^3 solves D e == 0 mod 3
    assert count_torsion_points_mod(cd, 3) == 27
    assert torsion_count_formula(cd, 3) == 27


def test_count_flagship_mod_ten(flagship):
    cd = character_matrix(flagship)
    assert count_torsion_points_mod(cd, 10) == 10000
    assert torsion_count_formula(cd, 10) == 10000


def test_count_guard():
    names = [f"a{k}" for k in range(9)]
    cd = character_matrix(make_canonical_form([], [(2, names)]))
    with pytest.raises(EnumerationTooLargeError):
        count_torsion_points_mod(cd, 10)


def test_count_matches_formula_randomized():
    rng = random.Random(11)
    for _ in range(12):
        cf = random_canonical_form(rng, max_vars=4, max_exp=6)
        cd = character_matrix(cf)
        for modulus in range(2, 13):
            assert count_torsion_points_mod(cd, modulus) == torsion_count_formula(
                cd, modulus
            )


def test_structure_independent_of_base_monomial(flagship):
    rng = random.Random(12)
    forms = [flagship] + [random_canonical_form(rng) for _ in range(10)]
    for cf in forms:
        reference = None
        for base in range(cf.monomial_count):
            q = quasitorus_structure(character_matrix(cf, base=base))
            key = (q.torus_rank, q.torsion)
            if reference is None:
                reference = key
            assert key == reference


def test_torus_rank_identity_random():
    rng = random.Random(13)
    for _ in range(40):
        cf = random_canonical_form(rng)
        q = quasitorus_structure(character_matrix(cf))
        n = cf.variable_count
        m_count = cf.monomial_count
        by_blocks = sum(len(b.variables) - 1 for b in cf.mixed_blocks) + 1
        assert q.torus_rank == n - m_count + 1 == by_blocks


def test_difference_matrix_always_full_rank():
    rng = random.Random(14)
    for _ in range(30):
        cf = random_canonical_form(rng)
        cd = character_matrix(cf)
        q = quasitorus_structure(cd)
        assert len(q.cocharacter_basis) == cf.variable_count - cd.difference_matrix.rows
