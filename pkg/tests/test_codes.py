import itertools
import math

import numpy as np
import pytest

import oracles
from ru4.codes import (
    CanonicalGens,
    CRTProfile,
    canonical_form,
    count_codes,
    enumerate_all,
    from_canonical,
    from_crt_profile,
    from_generators,
    min_lee_weight,
    min_lee_weight_by_ball,
    nakayama_count,
    paper_rank,
    residue_code,
    torsion_code,
    vector_to_word,
)
from ru4.errors import DivisibilityViolated, EvenLength, NoCanonicalForm, ProfileLengthMismatch, TooLarge
from ru4.poly import factorize, parse_generators, z4_mul, z4_xn1
from ru4.ring import ELEMENTS, IdealLabel, RElem, ideal_elements


def code(n, text):
    return from_generators(n, parse_generators(text))


@pytest.fixture(scope="module")
def codes3():
    return list(enumerate_all(3))


@pytest.fixture(scope="module")
def full3():
    return list(enumerate_all(3, full=True))


def as_key_set(c):
    words = np.array([[x.packed for x in vector_to_word(v, c.n)] for v in c.codeword_vectors()], dtype=np.uint8)
    return oracles.ideal_key(words)


def test_generator_examples():
    assert code(3, "0").log2_size == 0
    assert code(3, "2 ; 0:3").log2_size == 9
    assert code(3, "1").log2_size == 12
    with pytest.raises(EvenLength):
        code(4, "1")


def test_size_matches_oracle_closure():
    c = code(3, "2 ; 0:3")
    assert c.z4_basis.size == len(oracles.ideal_closure([[2], [12]], 3))


def test_profile_examples():
    fact = factorize(3)
    whole = from_crt_profile(CRTProfile(3, (IdealLabel.ONE,) * 2), fact)
    zero = from_crt_profile(CRTProfile(3, (IdealLabel.ZERO,) * 2), fact)
    assert whole.log2_size == 12 and zero.log2_size == 0
    # e_1 * <2, u> has 8 elements (oracle closure of e_1*2 and e_1*u)
    small = from_crt_profile(CRTProfile(3, (IdealLabel.TWO_AND_U, IdealLabel.ZERO)), fact)
    assert small.log2_size == 3
    with pytest.raises(ProfileLengthMismatch):
        from_crt_profile(CRTProfile(3, (IdealLabel.ONE,)), fact)


def test_profile_tags_round_trip():
    p = CRTProfile(7, (IdealLabel.TWO_PLUS_U, IdealLabel.U, IdealLabel.TWO_PLUS_U), (1, 1, 5))
    assert CRTProfile.from_tags(7, p.tags()) == p
    assert not p.is_labelled


def test_counts(codes3):
    assert len(list(enumerate_all(1))) == 7
    assert len(codes3) == 49
    assert len({c for _, c in codes3}) == 49
    assert count_codes(7) == 343
    assert count_codes(3, full=True) == 63
    assert count_codes(7, full=True) == 7 * 13 * 13


def test_budget():
    with pytest.raises(TooLarge):
        list(enumerate_all(7, max_codes=100))


def test_codes_are_ideals(full3):
    for _, c in full3:
        assert c.is_cyclic()
        assert c.is_ideal()


def test_full_enumeration_matches_brute_force(full3, codes3):
    ideals = oracles.all_ideals(3)
    assert len(ideals) == 63
    found = {as_key_set(c) for _, c in full3}
    assert found == set(ideals)
    labelled = {as_key_set(c) for _, c in codes3}
    assert len(labelled) == 49 and labelled <= found


def test_missing_ideals_are_the_extra_component_ideals(full3):
    extra = [p for p, _ in full3 if not p.is_labelled]
    assert len(extra) == 14
    assert all(IdealLabel.TWO_PLUS_U in p.choices for p in extra)


def test_residue_and_torsion_examples():
    u_code = code(3, "0:1")
    assert residue_code(u_code).log2_size == 0
    assert torsion_code(u_code).log2_size == 6
    two_plus_u = code(1, "2:1")
    res = residue_code(two_plus_u)
    assert res.contains((2,)) and not res.contains((1,))
    assert res.log2_size == 1
    assert {x for x in ideal_elements(IdealLabel.TWO_PLUS_U)} == {RElem(0), RElem(0, 2), RElem(2, 1), RElem(2, 3)}


def test_exact_sequence(full3):
    for _, c in full3:
        res, tor = residue_code(c), torsion_code(c)
        assert res.is_shift_closed() and tor.is_shift_closed()
        assert c.log2_size == res.log2_size + tor.log2_size


def test_from_canonical_examples():
    n = 3
    c = from_canonical(n, CanonicalGens(z4_xn1(n), (1,), (1,), (1,)))
    assert c == code(3, "2 ; 0:3")
    zero = from_canonical(n, CanonicalGens((), (), (), ()))
    assert zero.log2_size == 0
    g1, g2, _ = factorize(7).z4_lifts
    shaped = from_canonical(7, CanonicalGens(z4_mul(g1, g2), g1, g1, (1,)))
    assert paper_rank(canonical_form(shaped), 7) == 6


def test_divisibility_checked():
    g1, g2 = factorize(3).z4_lifts
    with pytest.raises(DivisibilityViolated):
        from_canonical(3, CanonicalGens(g1, g2, (1,), (1,)))
    with pytest.raises(DivisibilityViolated):
        from_canonical(3, CanonicalGens((1,), (1,), g1, g2))


def test_canonical_recovery_round_trip(full3):
    for _, c in full3:
        canon = canonical_form(c)
        assert from_generators(3, canon.generators()) == c


def test_canonical_recovery_length_seven():
    for _, c in enumerate_all(7):
        assert from_generators(7, canonical_form(c).generators()) == c


def test_odd_u_term_only_for_two_plus_u_components(full3):
    for p, c in full3:
        canon = canonical_form(c)
        if IdealLabel.TWO_PLUS_U in p.choices:
            assert canon.f13
            with pytest.raises(NoCanonicalForm):
                paper_rank(canon, 3)
        else:
            assert not canon.f13


def test_paper_rank_examples():
    g1, g2 = factorize(3).z4_lifts
    assert paper_rank(CanonicalGens(z4_xn1(3), (1,), g2, (1,)), 3) == 1
    l1, l2, l3 = factorize(7).z4_lifts
    assert paper_rank(CanonicalGens(z4_xn1(7), z4_mul(l1, l2), (1,), (1,)), 7) == 7
    assert paper_rank(CanonicalGens(z4_mul(l1, l2), l2, l2, (1,)), 7) == 4
    assert paper_rank(canonical_form(code(3, "0")), 3) == 0


def _min_generators_brute_force(ideal):
    """Fewest elements of R whose R-span is ``ideal``."""
    for k in range(3):
        for gens in itertools.combinations(sorted(ideal, key=lambda x: x.packed), k):
            span = {RElem()}
            for g in gens:
                span = {s + r * g for s in span for r in ELEMENTS}
            if span == set(ideal):
                return k
    raise AssertionError("no generating set of size <= 2")


@pytest.mark.parametrize("label", list(IdealLabel))
def test_nakayama_matches_brute_force_on_length_one(label):
    c = from_crt_profile(CRTProfile(1, (label,)))
    assert nakayama_count(c) == _min_generators_brute_force(ideal_elements(label))


def test_nakayama_examples():
    assert nakayama_count(code(1, "0:1")) == 1
    assert nakayama_count(code(1, "2 ; 0:1")) == 2
    assert nakayama_count(code(3, "0")) == 0


def test_min_lee_weight_examples():
    assert math.isinf(min_lee_weight(code(7, "0")))
    assert min_lee_weight(code(3, "2 ; 0:3")) == 2
    assert min_lee_weight(code(7, "0:2")) == 4


def test_min_lee_weight_matches_oracle(codes3):
    for _, c in codes3:
        words = np.array([[x.packed for x in vector_to_word(v, 3)] for v in c.codeword_vectors()], dtype=np.uint8)
        assert min_lee_weight(c) == oracles.min_lee_weight(words)


def test_ball_search_agrees_with_scan(codes3):
    for _, c in codes3:
        assert min_lee_weight_by_ball(c) == min_lee_weight(c)


def test_ball_search_budget():
    with pytest.raises(TooLarge):
        min_lee_weight_by_ball(code(7, "2,2,2,2,2,2,2"), budget_bits=4)


def test_scan_falls_back_above_cap():
    c = code(7, "3,1,2,1 ; 0:1")
    assert c.log2_size > 12
    assert min_lee_weight(c, cap=12) == min_lee_weight(c)


def test_worker_count_does_not_change_result():
    c = code(7, "3,1 ; 0:2")
    assert min_lee_weight(c, workers=2) == min_lee_weight(c, workers=1)
