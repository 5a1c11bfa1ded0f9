import itertools
import random

import pytest

from seifertq import (
    AmbientPoly,
    NotInKernelError,
    ParseError,
    ThetaElement,
    ambient_op,
    augment,
    canonical_orbit_triples,
    generator_element,
    membership,
    minimal_rank_generators,
    orbit_canonical,
    orbit_images,
    project,
    realize_decompose,
    recombine,
    window_rank_gap,
)

ONE = AmbientPoly.one()


def var(i, power=1):
    return AmbientPoly.variable(i, power)


def oracle_canonical(triple):
    # independent orbit enumeration: all permutations, both inversion
    # states, each shifted to minimum zero
    images = []
    for base in (triple, tuple(-x for x in triple)):
        for perm in itertools.permutations(base):
            m = min(perm)
            images.append(tuple(x - m for x in perm))
    return min(images)


def random_triple(rng, width=5):
    return tuple(rng.randint(-width, width) for _ in range(3))


def test_defining_relation():
    assert var(1) * (var(2) * var(3)) == ONE
    assert AmbientPoly({(1, 1, 1): 1}) == ONE


def test_ambient_mul_example():
    lhs = (var(1) - ONE) * (var(2, -1) - ONE)
    expected = (
        AmbientPoly({(1, -1, 0): 1})
        - var(1)
        - var(2, -1)
        + ONE
    )
    assert lhs == expected


def test_ambient_parse_examples():
    assert AmbientPoly.parse("1*t1^1 + -1") == var(1) - ONE
    assert AmbientPoly.parse("2*t1^2*t3^-1") == AmbientPoly({(2, 0, -1): 2})
    assert AmbientPoly.parse("t2") == var(2)
    assert ambient_op("from_terms", text="1*t1^1 + -1") == var(1) - ONE
    assert ambient_op("mul", var(1), var(2) * var(3)) == ONE
    assert ambient_op("add", var(1), -var(1)) == AmbientPoly.zero()


def test_ambient_parse_errors():
    with pytest.raises(ParseError):
        AmbientPoly.parse("1*t4")
    with pytest.raises(ParseError) as err:
        AmbientPoly.parse("1*t1^x")
    assert err.value.position == 5


def test_ambient_text_round_trip():
    rng = random.Random(12)
    for _ in range(100):
        terms = [
            (random_triple(rng, 3), rng.randint(-5, 5))
            for _ in range(rng.randint(0, 5))
        ]
        p = AmbientPoly(terms)
        assert AmbientPoly.parse(p.to_text()) == p or not p


def test_project_examples():
    assert project(var(1, -1) - ONE) == project(var(1) - ONE)
    assert project(var(1) * var(2) - var(2)) == ThetaElement.zero()
    assert project(var(1) * var(2) * var(3)) == project(ONE)


def test_project_sym3():
    assert (
        project(var(1) - ONE)
        == project(var(2) - ONE)
        == project(var(3) - ONE)
    )


def test_orbit_soundness_random():
    rng = random.Random(34)
    for _ in range(1000):
        triple = random_triple(rng)
        assert orbit_canonical(triple) == oracle_canonical(triple)
        images = orbit_images(triple)
        assert len(images) == 12
        sigma = rng.choice(images)
        assert project(AmbientPoly({triple: 1})) == project(AmbientPoly({sigma: 1}))


def test_canonical_triples_have_normal_shape():
    rng = random.Random(45)
    for _ in range(500):
        a, b, c = orbit_canonical(random_triple(rng))
        assert a == 0
        assert 0 <= 2 * b <= c


def test_projection_section_round_trip():
    rng = random.Random(56)
    for _ in range(100):
        terms = [
            (random_triple(rng, 4), rng.randint(-5, 5))
            for _ in range(rng.randint(0, 6))
        ]
        x = ThetaElement(terms)
        assert project(x.section()) == x


def test_augment_examples():
    assert augment(project(var(1) - ONE)) == 0
    assert augment(project(AmbientPoly.constant(3))) == 3
    assert augment(project((var(1) - ONE) * (var(2) - ONE))) == 0


def test_augment_factors_through_projection():
    rng = random.Random(67)
    for _ in range(100):
        terms = [
            (random_triple(rng, 4), rng.randint(-5, 5))
            for _ in range(rng.randint(0, 6))
        ]
        p = AmbientPoly(terms)
        assert augment(project(p)) == p.eval_all_one()


def test_generators():
    g1, g2, g3 = minimal_rank_generators()
    assert g1 == project(var(1) - ONE)
    for g in (g1, g2, g3):
        assert augment(g) == 0
    assert all(
        all(0 <= e <= 2 for e in triple) for triple, _ in g3.sorted_terms()
    )


def test_membership_witness_examples():
    g1, g2, g3 = minimal_rank_generators()
    gens = [g1, g2, g3]
    assert membership(g2, gens) == [0, 1, 0]
    assert membership(ThetaElement.zero(), gens) == [0, 0, 0]
    witness = membership(2 * g1 - 3 * g3, gens)
    assert witness == [2, 0, -3]


def test_membership_sign_variants():
    # all 14 products with inverted variables stay inside the span
    g1, g2, g3 = minimal_rank_generators()
    gens = [g1, g2, g3]
    variants = []
    for e1 in (1, -1):
        variants.append(var(1, e1) - ONE)
        for e2 in (1, -1):
            variants.append((var(1, e1) - ONE) * (var(2, e2) - ONE))
            for e3 in (1, -1):
                variants.append(
                    (var(1, e1) - ONE) * (var(2, e2) - ONE) * (var(3, e3) - ONE)
                )
    assert len(variants) == 14
    for v in variants:
        witness = membership(project(v), gens)
        assert witness is not None
        check = sum((c * g for c, g in zip(witness, gens)), ThetaElement.zero())
        assert check == project(v)


def test_membership_detects_outside():
    gens = list(minimal_rank_generators())
    assert membership(generator_element(3, 0), gens) is None
    # torsion-sensitive: 2*g1 is inside the doubled lattice, g1 is not
    g1 = gens[0]
    assert membership(g1, [2 * g1]) is None
    assert membership(2 * g1, [2 * g1]) == [1]


def test_membership_witness_recombines():
    rng = random.Random(78)
    gens = list(minimal_rank_generators())
    for _ in range(50):
        coeffs = [rng.randint(-4, 4) for _ in gens]
        x = sum((c * g for c, g in zip(coeffs, gens)), ThetaElement.zero())
        witness = membership(x, gens)
        assert witness is not None
        check = sum((c * g for c, g in zip(witness, gens)), ThetaElement.zero())
        assert check == x


def test_realize_decompose_examples():
    assert realize_decompose(project(var(1) - ONE)) == [(1, 0, 0)]
    assert realize_decompose(ThetaElement.zero()) == []
    with pytest.raises(NotInKernelError):
        realize_decompose(project(ONE))


def test_realize_decompose_round_trip():
    rng = random.Random(89)
    triples = canonical_orbit_triples(4)[1:]
    for _ in range(100):
        terms = {}
        for triple in rng.sample(triples, rng.randint(1, 6)):
            terms[triple] = rng.randint(-5, 5)
        x = ThetaElement(terms.items())
        x = x - augment(x) * ThetaElement({(0, 0, 0): 1})
        assert augment(x) == 0
        assert recombine(realize_decompose(x)) == x


def test_canonical_orbit_triples_window():
    # independent count: canonicalize every shifted triple in the box
    for width in (2, 3, 4, 5):
        brute = set()
        for a in range(width + 1):
            for b in range(width + 1):
                for c in range(width + 1):
                    if min(a, b, c) == 0:
                        brute.add(oracle_canonical((a, b, c)))
        assert sorted(brute) == canonical_orbit_triples(width)


def test_window_rank_gap_strictly_increasing():
    gaps = [window_rank_gap(w) for w in (2, 3, 4, 5)]
    assert gaps == sorted(set(gaps))
    assert all(b > a for a, b in zip(gaps, gaps[1:]))


def test_theta_json_round_trip():
    x = generator_element(2, 1) - 3 * generator_element(0, 0)
    assert ThetaElement.from_json_obj(x.to_json_obj()) == x
    assert x.to_text() == ThetaElement.from_json_obj(x.to_json_obj()).to_text()
