from __future__ import annotations

import pytest
from helpers import gray_code_degree_map, nonincreasing_tuples

from kmc4 import (DegreeSequence, InputError, LimitError, degree_sum,
                  enumerate_graphical_sequences,
                  graphical_sequences_with_sum, is_graphical, make_sequence)


class TestDegreeSequence:
    def test_sorts_descending(self):
        assert DegreeSequence((1, 3, 2)) == (3, 2, 1)

    def test_n(self):
        assert DegreeSequence((2, 2, 2)).n == 3

    def test_rejects_empty(self):
        with pytest.raises(InputError):
            DegreeSequence(())

    def test_rejects_negative(self):
        with pytest.raises(InputError):
            DegreeSequence((2, -1))

    def test_rejects_non_integer(self):
        with pytest.raises(InputError):
            DegreeSequence((2.5, 1))

    def test_make_sequence(self):
        assert make_sequence([0, 4, 2]) == (4, 2, 0)


class TestTextForms:
    def test_comma_form(self):
        assert DegreeSequence.from_text("4,2,2,2,2") == (4, 2, 2, 2, 2)

    def test_power_form(self):
        assert DegreeSequence.from_text("5,3^5") == (5, 3, 3, 3, 3, 3)

    def test_mixed_form(self):
        assert DegreeSequence.from_text("5^2,2^3,1") == (5, 5, 2, 2, 2, 1)

    def test_whitespace_tolerated(self):
        assert DegreeSequence.from_text(" 3, 2 ,1 ") == (3, 2, 1)

    @pytest.mark.parametrize("bad", ["", "a,b", "3^0", "3^-1", "2^x", "^4"])
    def test_bad_text(self, bad):
        with pytest.raises(InputError):
            DegreeSequence.from_text(bad)

    def test_to_text_plain(self):
        assert DegreeSequence((4, 2, 2)).to_text() == "4,2,2"

    def test_to_text_power(self):
        assert DegreeSequence((5, 3, 3, 3, 3, 3)).to_text(power=True) == "5,3^5"

    def test_text_round_trip(self):
        seq = DegreeSequence((7, 7, 2, 2, 2, 2, 2, 2))
        assert DegreeSequence.from_text(seq.to_text(power=True)) == seq
        assert DegreeSequence.from_text(seq.to_text()) == seq


class TestIsGraphical:
    def test_known_negative(self):
        # the two 3s would each need the other plus both 1s
        assert not is_graphical((3, 3, 1, 1))

    def test_known_positive(self):
        assert is_graphical((2, 1, 1))
        assert is_graphical((3, 3, 3, 3))

    def test_single_vertex(self):
        assert is_graphical((0,))
        assert not is_graphical((1,))

    def test_odd_sum(self):
        assert not is_graphical((2, 2, 1))

    def test_degree_too_large(self):
        assert not is_graphical((3, 1, 1))

    def test_empty_raises(self):
        with pytest.raises(InputError):
            is_graphical(())

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_agrees_with_exhaustive_realization_search(self, n):
        # ground truth: the set of degree tuples that actually occur over
        # every labeled graph on n vertices
        realizable = set(gray_code_degree_map(n))
        for t in nonincreasing_tuples(n, n):
            assert is_graphical(t) == (t in realizable), t


class TestDegreeSum:
    def test_sum(self):
        assert degree_sum((4, 2, 2, 2, 2)) == 12


class TestEnumerationBySum:
    def test_two_vertices_all_levels(self):
        seqs = {tuple(s) for s in enumerate_graphical_sequences(2)}
        assert seqs == {(0, 0), (1, 1)}

    def test_three_vertices_min_sum_four(self):
        seqs = {tuple(s) for s in enumerate_graphical_sequences(3, min_sum=4)}
        assert seqs == {(2, 2, 2), (2, 1, 1)}

    def test_min_sum_is_inclusive(self):
        seqs = {tuple(s) for s in enumerate_graphical_sequences(2, min_sum=2)}
        assert seqs == {(1, 1)}

    def test_sum_major_descending_then_lex_descending(self):
        out = [tuple(s) for s in enumerate_graphical_sequences(4, min_sum=8)]
        sums = [sum(s) for s in out]
        assert sums == sorted(sums, reverse=True)
        for level in set(sums):
            block = [s for s in out if sum(s) == level]
            assert block == sorted(block, reverse=True)

    def test_single_level(self):
        seqs = [tuple(s) for s in graphical_sequences_with_sum(4, 6)]
        assert seqs == sorted(seqs, reverse=True)
        assert (2, 2, 1, 1) in seqs and (3, 1, 1, 1) in seqs

    def test_odd_sum_is_empty(self):
        assert list(graphical_sequences_with_sum(4, 5)) == []

    def test_sum_out_of_range(self):
        with pytest.raises(InputError):
            list(graphical_sequences_with_sum(4, 14))
        with pytest.raises(InputError):
            list(graphical_sequences_with_sum(4, -2))

    def test_vertex_guard(self):
        with pytest.raises(LimitError):
            list(graphical_sequences_with_sum(13, 0, limit=12))

    def test_every_level_complete_against_oracle(self):
        # per-level slices must partition the realizable tuples
        realizable = set(gray_code_degree_map(5))
        for total in range(0, 21, 2):
            got = {tuple(s) for s in graphical_sequences_with_sum(5, total)}
            want = {t for t in realizable if sum(t) == total}
            assert got == want, total
