from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from freiman import intlinalg
from freiman.isomorphism import (
    affine_dimension,
    find_isomorphism,
    freiman_dimension,
    is_isomorphic,
    oracle_dimension,
    quadruple_pattern,
    relation_lattice,
    universal_model,
)
from freiman.sets import IntSet, LatticeSet, affine_image, normalized_sets
from oracles import brute_identities


def S(*xs):
    return IntSet(xs)


def _pattern_as_sets(pat):
    return {frozenset(eq) for eq in pat.equalities}


def fraction_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


small_sets = st.lists(st.integers(0, 30), min_size=1, max_size=7, unique=True).map(IntSet.of)


# --- integer linear algebra -------------------------------------------------


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), max_size=6))
def test_bareiss_rank_matches_rational_elimination(rows):
    assert intlinalg.rank(rows) == fraction_rank(rows)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=1, max_size=4))
def test_integer_kernel_is_saturated_basis(rows):
    ker = intlinalg.integer_kernel(rows, 5)
    assert len(ker) == 5 - fraction_rank(rows)
    for v in ker:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    if ker:
        assert intlinalg.rank(ker) == len(ker)
    # saturation: every small integer kernel vector is an integer combination
    for x in _small_kernel_vectors(rows, 5):
        assert _in_integer_span(ker, x)


def _small_kernel_vectors(rows, n):
    from itertools import product

    for x in product(range(-1, 2), repeat=n):
        if any(x) and all(sum(a * b for a, b in zip(r, x)) == 0 for r in rows):
            yield list(x)


def _in_integer_span(basis, x):
    # solve over Q, then check the coefficients are integral
    n = len(basis)
    aug = [[Fraction(basis[i][j]) for i in range(n)] + [Fraction(x[j])] for j in range(len(x))]
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        aug[r] = [v / aug[r][c] for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
    if any(row[-1] for row in aug[r:]):
        return False
    return all(aug[i][-1].denominator == 1 for i in range(r))


def test_unimodular_echelon_identity():
    a = [[2, 4, 6], [3, 5, 7], [1, 1, 1], [4, 8, 12]]
    h, u, r = intlinalg.row_echelon_unimodular(a)
    prod = [[sum(u[i][t] * a[t][j] for t in range(4)) for j in range(3)] for i in range(4)]
    assert prod == h
    assert r == fraction_rank(a)
    assert abs(_det(u)) == 1


def _det(m):
    m = [[Fraction(x) for x in r] for r in m]
    n, det = len(m), Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


# --- quadruple patterns ----------------------------------------------------


def test_pattern_examples():
    assert len(quadruple_pattern(S(0, 1, 3))) == 0
    assert quadruple_pattern(S(0, 1, 2)).equalities == (((0, 2), (1, 1)),)
    assert quadruple_pattern(S(0, 1, 2, 3)).equalities == (
        ((0, 2), (1, 1)),
        ((0, 3), (1, 2)),
        ((1, 3), (2, 2)),
    )


@given(small_sets)
def test_pattern_matches_brute_force(a):
    assert _pattern_as_sets(quadruple_pattern(a)) == brute_identities(a.elements)


@given(small_sets, st.integers(-9, 9).filter(bool), st.integers(-50, 50))
def test_pattern_is_affine_invariant(a, p, q):
    b = affine_image(a, p, q)
    if p > 0:
        assert quadruple_pattern(a) == quadruple_pattern(b)
    else:
        assert len(quadruple_pattern(a)) == len(quadruple_pattern(b))


def test_relation_lattice_rows_sum_to_zero():
    for a in normalized_sets(5, 9):
        lat = relation_lattice(a)
        assert all(sum(r) == 0 for r in lat.basis)
        assert 0 <= lat.rank <= lat.k - 1


# --- isomorphism -------------------------------------------------------------


def test_iso_examples():
    assert find_isomorphism(S(0, 1, 2), S(10, 13, 16)) == (0, 1, 2)
    assert not is_isomorphic(S(0, 1, 2), S(0, 1, 3))
    assert is_isomorphic(S(0, 1, 3), S(0, 1, 5))


def test_witness_is_lexicographically_first():
    # every bijection between two Sidon triples is an isomorphism
    assert find_isomorphism(S(0, 1, 3), S(0, 1, 5)) == (0, 1, 2)
    # reflection: the identity map fails on {0,1,3} -> {0,2,3}
    w = find_isomorphism(S(0, 1, 3, 7), S(0, 4, 6, 7))
    assert w is not None
    assert _is_valid_witness(S(0, 1, 3, 7), S(0, 4, 6, 7), w)


def _is_valid_witness(a, b, w):
    img = [b[j] for j in w]
    return brute_identities(a.elements) == brute_identities(img)


def _brute_isomorphic(a, b):
    from itertools import permutations

    if len(a) != len(b):
        return False
    ia = brute_identities(a.elements)
    return any(brute_identities([b[j] for j in perm]) == ia for perm in permutations(range(len(b))))


def test_iso_matches_permutation_brute_force():
    sets = list(normalized_sets(4, 9)) + list(normalized_sets(5, 8))[:40]
    for a, b in combinations(sets, 2):
        if len(a) != len(b):
            continue
        w = find_isomorphism(a, b)
        assert (w is not None) == _brute_isomorphic(a, b), (a, b)
        if w is not None:
            assert _is_valid_witness(a, b, w)


def test_iso_equivalence_relation():
    sets = list(normalized_sets(5, 9))
    iso = {(a, b): is_isomorphic(a, b) for a in sets for b in sets}
    for a in sets:
        assert iso[a, a]
    for a in sets:
        for b in sets:
            assert iso[a, b] == iso[b, a]
            if iso[a, b]:
                for c in sets:
                    if iso[b, c]:
                        assert iso[a, c]


@given(small_sets, st.integers(-20, 20).filter(bool), st.integers(-100, 100))
def test_affine_images_are_isomorphic(a, p, q):
    b = affine_image(a, p, q)
    assert is_isomorphic(a, b)
    assert freiman_dimension(a) == freiman_dimension(b)


# --- dimension ---------------------------------------------------------------


@pytest.mark.parametrize(
    "a, d",
    [(S(5), 0), (S(0, 1), 1), (S(0, 1, 2, 3, 4, 5), 1), (S(0, 1, 3), 2), (S(0, 1, 2, 4), 1),
     (S(0, 1, 2, 5), 2), (S(0, 1, 3, 7, 15), 4)],
)
def test_dimension_examples(a, d):
    assert freiman_dimension(a) == d


@pytest.mark.parametrize("k", range(2, 10))
def test_progressions_have_dimension_one(k):
    assert freiman_dimension(IntSet(tuple(range(k)))) == 1


@pytest.mark.parametrize("a", [S(0, 1, 2), S(0, 1, 3), S(0, 1, 2, 5), S(0, 1, 3, 4)])
def test_oracle_dimension_examples(a):
    assert oracle_dimension(a) == freiman_dimension(a)


def test_oracle_dimension_k4_exhaustive():
    for a in normalized_sets(4, 8):
        assert oracle_dimension(a) == freiman_dimension(a), a


def test_lattice_set_dimension():
    simplex = LatticeSet(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert freiman_dimension(simplex) == 3
    square = LatticeSet(2, ((0, 0), (1, 0), (0, 1), (1, 1)))
    assert freiman_dimension(square) == 2


# --- universal model ------------------------------------------------------------


def test_model_examples():
    m = universal_model(S(0, 1, 2))
    assert m.dim == 1 and sorted(p[0] for p in m.points) in ([0, 1, 2], [-2, -1, 0])
    m = universal_model(S(0, 1, 3))
    assert m.dim == 2 and affine_dimension(m.points) == 2
    m = universal_model(S(0, 1, 2, 5))
    assert m.dim == 2 and affine_dimension(m.points) == 2


@settings(max_examples=150)
@given(st.lists(st.integers(0, 40), min_size=2, max_size=7, unique=True).map(IntSet.of))
def test_model_pattern_and_dimension(a):
    model = universal_model(a)
    d = freiman_dimension(a)
    assert model.dim == d
    assert affine_dimension(model.points) == d
    w = find_isomorphism(a, model)
    assert w is not None
    img = [model.points[j] for j in w]
    assert brute_identities(img) == brute_identities(a.elements)
