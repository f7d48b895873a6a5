import random

import pytest

from charvar.errors import NotSurjective, RelatorNotKilled, ZeroMap
from charvar.parser import parse_presentation
from charvar.presentations import (abelianize, induced_on_free_part,
                                   validate_epimorphism)
from charvar.constructions import direct_product, free_group, surface_group
from charvar.words import Word
from conftest import random_word


def test_abelianize_genus_two():
    data = abelianize(surface_group(2))
    assert data.torsion_free_rank == 4
    assert data.torsion_invariants == ()


def test_abelianize_torsion():
    p = parse_presentation("gens a; rel a^2;")
    data = abelianize(p)
    assert data.torsion_free_rank == 0
    assert data.torsion_invariants == (2,)


def test_abelianize_free_group():
    data = abelianize(free_group(2))
    assert data.torsion_free_rank == 2
    assert data.torsion_invariants == ()


def test_projection_kills_relators_exactly():
    p = parse_presentation("gens a,b,c; rel a^2 b^-3 c; rel [a,b] c^5;")
    data = abelianize(p)
    for r in p.relators:
        assert data.project(r.exponent_vector(3)) == (0,) * data.torsion_free_rank


def test_projection_section_identity():
    p = parse_presentation("gens a,b,c; rel a^2 b^4;")
    data = abelianize(p)
    m = data.torsion_free_rank
    # projection composed with section is the identity on Z^m
    for j in range(m):
        col = [data.section[i][j] for i in range(3)]
        assert data.project(col) == tuple(1 if l == j else 0 for l in range(m))


def test_validate_bb_diagonal():
    p = direct_product([free_group(2), free_group(2)])
    nu = validate_epimorphism(p, [(1,)] * 4)
    assert nu.target_rank == 1


def test_validate_genus_two_pattern():
    p = surface_group(2)
    nu = validate_epimorphism(p, [(1, 0), (0, 1), (0, 0), (0, 0)])
    assert nu.of_word(p.relators[0]) == (0, 0)


def test_not_surjective_reports_recoordinatization():
    p = surface_group(1)
    with pytest.raises(NotSurjective) as err:
        validate_epimorphism(p, [(2,), (0,)])
    assert err.value.recoordinatize is not None
    # composing with the reported matrix rescales the image onto Z
    t = err.value.recoordinatize
    assert t[0][0] * 2 == 1


def test_rank_deficient_images_rejected_without_matrix():
    p = surface_group(2)
    with pytest.raises(NotSurjective) as err:
        validate_epimorphism(p, [(1, 0), (2, 0), (0, 0), (0, 0)])
    assert err.value.recoordinatize is None


def test_zero_map_rejected():
    with pytest.raises(ZeroMap):
        validate_epimorphism(surface_group(1), [(0,), (0,)])


def test_relator_not_killed():
    p = parse_presentation("gens a,b; rel a b;")
    with pytest.raises(RelatorNotKilled) as err:
        validate_epimorphism(p, [(1,), (1,)])
    assert err.value.index == 0


def test_normal_closure_maps_to_zero():
    # products of conjugates of relators always die under a valid map
    p = surface_group(2)
    nu = validate_epimorphism(p, [(1,), (0,), (0, ), (0,)])
    rng = random.Random(23)
    for _ in range(100):
        w = Word.identity()
        for _ in range(rng.randint(1, 4)):
            u = random_word(rng, 4, 8)
            r = p.relators[0] if rng.random() < 0.5 else p.relators[0].inverse()
            w = w * r.conjugate_by(u)
        assert nu.of_word(w) == (0,)


def test_induced_map_on_free_part():
    p = surface_group(2)
    nu = validate_epimorphism(p, [(1, 0), (0, 1), (0, 0), (0, 0)])
    data = abelianize(p)
    nubar = induced_on_free_part(nu, data)
    assert len(nubar) == 2 and len(nubar[0]) == 4


def test_product_abelianization_is_blockwise():
    p = direct_product([surface_group(1), surface_group(1)])
    data = abelianize(p)
    assert data.torsion_free_rank == 4
    assert data.projection == ((1, 0, 0, 0), (0, 1, 0, 0),
                               (0, 0, 1, 0), (0, 0, 0, 1))
