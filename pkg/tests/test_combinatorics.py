"""
Tests for combinatorics: permutations, partitions and multiset constants.
"""

from fractions import Fraction
from math import factorial

import pytest

from src.combinatorics import (
    Partition,
    Permutation,
    all_permutations,
    multinomial,
    partitions_of,
    sign,
    z_of,
)
from src.utils.errors import InvalidArgument


class TestPermutation:
    """Test suite for Permutation and sign."""

    def test_signs(self):
        """Test sign of identity, a transposition and a 3-cycle."""
        assert sign(Permutation.identity(3)) == 1
        assert sign(Permutation([2, 1, 3])) == -1
        assert sign(Permutation([2, 3, 1])) == 1

    def test_sign_is_multiplicative(self):
        """Test sign(p then q) = sign(p) sign(q) on all of S_4."""
        perms = list(all_permutations(4))
        for p in perms[::5]:
            for q in perms:
                assert sign(p.then(q)) == sign(p) * sign(q)

    def test_sign_sum_vanishes(self):
        """Test that signs over S_r sum to zero for r >= 2."""
        for r in range(2, 6):
            perms = list(all_permutations(r))
            assert len(perms) == factorial(r)
            assert sum(sign(p) for p in perms) == 0

    def test_then_applies_left_first(self):
        """Test the diagram reading order of composition."""
        p = Permutation([2, 1, 3])
        q = Permutation([1, 3, 2])
        assert p.then(q)(1) == q(p(1)) == 3

    def test_inverse_and_cycle_type(self):
        """Test inverse and cycle type."""
        p = Permutation([3, 1, 2])
        assert p.then(p.inverse()) == Permutation.identity(3)
        assert p.cycle_type() == [3]
        assert Permutation([2, 1, 4, 3]).cycle_type() == [2, 2]

    def test_invalid_images(self):
        """Test that non-bijective images and size mismatches raise InvalidArgument."""
        with pytest.raises(InvalidArgument):
            Permutation([1, 1, 2])
        with pytest.raises(InvalidArgument):
            Permutation([0, 1])
        with pytest.raises(InvalidArgument):
            Permutation([2, 1]).then(Permutation.identity(3))

    def test_text_form(self):
        """Test one-line printing."""
        assert str(Permutation([2, 1, 3])) == "[2,1,3]"


class TestPartitions:
    """Test suite for partitions and their constants."""

    def test_counts(self):
        """Test partition counts for small weights."""
        assert partitions_of(0) == [Partition()]
        assert len(partitions_of(4)) == 5
        assert len(partitions_of(5)) == 7

    def test_lexicographic_order(self):
        """Test that partitions are sorted as tuples."""
        assert partitions_of(3) == [Partition([1, 1, 1]), Partition([2, 1]), Partition([3])]

    def test_negative_weight(self):
        """Test that a negative weight is rejected."""
        with pytest.raises(InvalidArgument):
            partitions_of(-1)

    def test_partition_validation(self):
        """Test that unsorted or non-positive parts are rejected."""
        with pytest.raises(InvalidArgument):
            Partition([1, 2])
        with pytest.raises(InvalidArgument):
            Partition([2, 0])

    def test_multinomial(self):
        """Test multinomial coefficients."""
        assert multinomial(4, [2, 2]) == 6
        assert multinomial(6, [2, 2, 2]) == 90
        with pytest.raises(InvalidArgument):
            multinomial(5, [2, 2])

    def test_z_of(self):
        """Test centralizer orders."""
        assert z_of(Partition([2, 1])) == 2
        assert z_of(Partition([1, 1, 1])) == 6
        assert z_of(Partition([2, 2])) == 8

    def test_class_sizes_sum_to_factorial(self):
        """Test sum over cycle types of r!/z equals r!."""
        for r in range(1, 8):
            assert sum(Fraction(factorial(r)) / z_of(p) for p in partitions_of(r)) == factorial(r)

    def test_class_sizes_match_enumeration(self):
        """Test r!/z against counting permutations by cycle type."""
        counts = {}
        for p in all_permutations(5):
            key = Partition(p.cycle_type())
            counts[key] = counts.get(key, 0) + 1
        for lam in partitions_of(5):
            assert counts[lam] == factorial(5) / z_of(lam)

    def test_conjugate_and_dominance(self):
        """Test conjugation and dominance order."""
        assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])
        assert Partition([3]).dominates(Partition([2, 1]))
        assert not Partition([2, 1]).dominates(Partition([3]))
        assert str(Partition([3, 1, 1])) == "[3,1,1]"
