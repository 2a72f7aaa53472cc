import json
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

import pytest

from artinforge.reptheory import (
    ClassFunction,
    GradedClassFunction,
    Permutation,
    conjugacy_classes,
    cycle_type,
    half_powerset_character,
    partitions,
    powerset_character,
    subset_character,
    trivial_character,
    xn_character,
)


# ---------------------------------------------------------------------------
# permutations and conjugacy classes

def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(3)) == (1, 1, 1)
    assert cycle_type(Permutation.from_cycles(3, [[0, 1]])) == (2, 1)
    assert cycle_type(Permutation.from_cycles(3, [[0, 1, 2]])) == (3,)


def test_permutation_validation_and_group_ops():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    sigma = Permutation.from_cycles(4, [[0, 1, 2]])
    assert sigma * sigma.inverse() == Permutation.identity(4)
    assert sigma.extend(6).image == sigma.image + (4, 5)


def test_conjugacy_classes_n3():
    classes = conjugacy_classes(3)
    assert [(lam, size) for lam, size, _ in classes] == [
        ((1, 1, 1), 1),
        ((2, 1), 3),
        ((3,), 2),
    ]
    for lam, _, rep in classes:
        assert cycle_type(rep) == lam


def test_class_sizes_sum_to_group_order():
    for n in range(1, 8):
        assert sum(size for _, size, _ in conjugacy_classes(n)) == factorial(n)
    assert len(conjugacy_classes(4)) == 5
    assert len(conjugacy_classes(1)) == 1


def test_class_sizes_against_enumeration():
    for n in range(1, 6):
        counts = {lam: 0 for lam in partitions(n)}
        for image in permutations(range(n)):
            counts[cycle_type(Permutation(image))] += 1
        for lam, size, _ in conjugacy_classes(n):
            assert counts[lam] == size


# ---------------------------------------------------------------------------
# subset characters, with enumeration oracles

def count_fixed_subsets(sigma: Permutation, k: int) -> int:
    return sum(
        1
        for subset in combinations(range(sigma.n), k)
        if {sigma(i) for i in subset} == set(subset)
    )


def test_subset_character_n3_k1():
    cf = subset_character(3, 1)
    assert [cf(lam) for lam in partitions(3)] == [3, 1, 0]


def test_subset_character_matches_enumeration():
    for n in range(1, 6):
        for k in range(n + 1):
            cf = subset_character(n, k)
            for lam, _, rep in conjugacy_classes(n):
                assert cf(lam) == count_fixed_subsets(rep, k)


def test_subset_character_trivial_and_range():
    assert subset_character(4, 0) == trivial_character(4)
    with pytest.raises(ValueError):
        subset_character(3, 4)


def test_subset_characters_sum_to_powerset():
    for n in range(2, 7):
        total = subset_character(n, 0)
        for k in range(1, n + 1):
            total = total + subset_character(n, k)
        assert total == powerset_character(n)


def test_subset_complementation():
    for n in range(2, 7):
        for k in range(n + 1):
            assert subset_character(n, k) == subset_character(n, n - k)


def test_powerset_and_half_values_n3():
    assert [powerset_character(3)(lam) for lam in partitions(3)] == [8, 4, 2]
    assert [half_powerset_character(3)(lam) for lam in partitions(3)] == [4, 2, 1]
    # dimension at the identity class
    assert half_powerset_character(3)((1, 1, 1)) == 2 ** (3 - 1)


def test_half_powerset_matches_enumeration():
    for n in (3, 5):
        cf = half_powerset_character(n)
        for lam, _, rep in conjugacy_classes(n):
            cycles = rep.cycles()
            count = sum(
                1
                for pick in product((0, 1), repeat=len(cycles))
                if sum(len(c) for c, p in zip(cycles, pick) if p) % 2 == 0
            )
            assert cf(lam) == count


def test_half_powerset_rejects_even_n():
    with pytest.raises(ValueError):
        half_powerset_character(4)


# ---------------------------------------------------------------------------
# the point-set character

def count_fixed_points(sigma: Permutation, n: int) -> int:
    """Enumeration oracle on the (k, eps) point model."""
    total = 1  # the origin
    for k in range(n - 2):
        parity = 1 if k % 2 == 0 else -1
        for eps in product((1, -1), repeat=n):
            prod = 1
            for e in eps:
                prod *= e
            if prod != parity:
                continue
            if all(eps[sigma(i)] == eps[i] for i in range(n)):
                total += 1
    return total


def test_xn_character_n3_values():
    assert [xn_character(3)(lam) for lam in partitions(3)] == [5, 3, 2]


def test_xn_character_spot_values():
    assert xn_character(4)((2, 2)) == 5
    for n in range(2, 8):
        assert xn_character(n)((1,) * n) == 1 + (n - 2) * 2 ** (n - 1)


def test_xn_character_closed_form_and_enumeration():
    for n in range(2, 8):
        cf = xn_character(n)
        for lam, _, rep in conjugacy_classes(n):
            assert cf(lam) == 1 + (n - 2) * 2 ** (len(lam) - 1)
            if n <= 6:
                assert cf(lam) == count_fixed_points(rep, n)


def test_point_character_identities():
    # odd n: chi = [1] + (n-2) * half powerset; all n: 2 chi = 2[1] + (n-2) P
    for n in range(2, 8):
        chi = xn_character(n)
        assert 2 * chi == 2 * trivial_character(n) + (n - 2) * powerset_character(n)
        if n % 2 == 1:
            assert chi == trivial_character(n) + (n - 2) * half_powerset_character(n)
    assert xn_character(3) == trivial_character(3) + half_powerset_character(3)


# ---------------------------------------------------------------------------
# class function arithmetic and serialisation

def test_inner_product_orthonormality():
    assert trivial_character(4).inner_product(trivial_character(4)) == 1


def orbit_count_on_subsets(n: int) -> int:
    points = [frozenset(s) for k in range(n + 1) for s in combinations(range(n), k)]
    seen = set()
    orbits = 0
    group = [Permutation(img) for img in permutations(range(n))]
    for pt in points:
        if pt in seen:
            continue
        orbits += 1
        for g in group:
            seen.add(frozenset(g(i) for i in pt))
    return orbits


def test_inner_product_with_trivial_counts_orbits():
    # Burnside: <powerset character, trivial> equals the orbit count (4 when
    # n = 3: one orbit per subset size)
    for n in range(2, 6):
        got = powerset_character(n).inner_product(trivial_character(n))
        assert got == orbit_count_on_subsets(n)
    assert powerset_character(3).inner_product(trivial_character(3)) == 4


def test_self_inner_product_positive_integer():
    for n in (3, 4, 5):
        for cf in (powerset_character(n), subset_character(n, 1), xn_character(n)):
            ip = cf.inner_product(cf)
            assert isinstance(ip, int) and ip > 0


def test_classfunction_validation_and_arithmetic():
    with pytest.raises(ValueError):
        ClassFunction(3, {(3,): 1})
    with pytest.raises(ValueError):
        trivial_character(3) + trivial_character(4)
    cf = subset_character(3, 1)
    assert (cf - cf) == 0 * cf
    half = Fraction(1, 2) * powerset_character(4)
    assert half((1, 1, 1, 1)) == 8


def test_classfunction_json_roundtrip():
    cf = Fraction(1, 3) * subset_character(4, 2)
    data = json.loads(json.dumps(cf.to_dict()))
    assert ClassFunction.from_dict(data) == cf


def test_graded_classfunction():
    terms = tuple(
        (d, subset_character(3, d)) for d in range(3)
    )
    g = GradedClassFunction(3, terms)
    assert g.identity_vector() == [1, 3, 3]
    assert g.at_t1() == subset_character(3, 0) + subset_character(3, 1) + subset_character(3, 2)
    with pytest.raises(ValueError):
        GradedClassFunction(3, ((0, trivial_character(2)),))
