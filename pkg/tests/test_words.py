import random

import pytest

from koszulsign import (
    DimensionError,
    DomainError,
    GradedSequence,
    ParseError,
    Permutation,
    decompose_adjacent,
    kappa,
    kappa_word,
    parse_word,
    project,
    reduce_word,
    relators,
    render_word,
    symmetric_group,
)
from koszulsign.words import Generator, Word, random_word


def seq(*degrees):
    return GradedSequence.from_degrees(degrees)


def word(n, *letters):
    return Word(tuple(Generator(i, e) for i, e in letters), n)


class TestWord:
    def test_letter_out_of_range(self):
        with pytest.raises(DomainError):
            Word((Generator(3),), 3)

    def test_bad_exponent(self):
        with pytest.raises(DomainError):
            Generator(1, 2)

    def test_inverse_reverses_and_flips(self):
        w = word(3, (1, 1), (2, -1))
        assert w.inverse() == word(3, (2, 1), (1, -1))

    def test_concat_mismatch(self):
        with pytest.raises(DimensionError):
            Word.empty(3) * Word.empty(4)


class TestReduce:
    def test_inverse_pair_cancels(self):
        assert reduce_word(word(2, (1, 1), (1, -1))) == Word.empty(2)

    def test_nested_cancellation(self):
        w = word(3, (1, 1), (2, 1), (2, -1), (1, 1))
        assert reduce_word(w) == word(3, (1, 1), (1, 1))

    def test_empty(self):
        assert reduce_word(Word.empty(4)) == Word.empty(4)

    def test_s1_s1_is_reduced(self):
        # the group relation s1^2 = e is not free cancellation
        w = word(2, (1, 1), (1, 1))
        assert reduce_word(w) == w
        assert w.is_reduced()

    def test_idempotent_and_projection_stable(self):
        rng = random.Random(3)
        for _ in range(100):
            w = random_word(4, rng)
            r = reduce_word(w)
            assert reduce_word(r) == r
            assert r.is_reduced()
            assert project(r) == project(w)


class TestProject:
    def test_single_generator(self):
        assert project(word(4, (1, 1))).images == (2, 1, 3, 4)

    def test_square_is_identity(self):
        assert project(word(3, (1, 1), (1, 1))).is_identity()

    def test_braid_relation(self):
        lhs = project(word(3, (1, 1), (2, 1), (1, 1)))
        rhs = project(word(3, (2, 1), (1, 1), (2, 1)))
        assert lhs == rhs

    def test_leftmost_applied_last(self):
        # s2 s1 means s2 o s1 = [3,1,2]
        assert project(word(3, (2, 1), (1, 1))).images == (3, 1, 2)


class TestKappaWord:
    def test_empty_word(self):
        assert kappa_word(Word.empty(3), seq(1, 1, 1)) == 1

    def test_generator_and_inverse_same_sign(self):
        g = seq(1, 1, 0)
        assert kappa_word(word(3, (1, 1)), g) == -1
        assert kappa_word(word(3, (1, -1)), g) == -1

    def test_square_is_plus_one(self):
        for i in (1, 2):
            for g in (seq(1, 1, 1), seq(1, 0, 1), seq(3, -5, 2)):
                assert kappa_word(word(3, (i, 1), (i, 1)), g) == 1

    def test_braid_exponent(self):
        rng = random.Random(11)
        for _ in range(50):
            d = [rng.randint(-9, 9) for _ in range(4)]
            g = GradedSequence.from_degrees(d)
            for i in (1, 2):
                expect = (-1) ** (
                    d[i] * d[i + 1] + d[i - 1] * d[i + 1] + d[i - 1] * d[i]
                )
                assert kappa_word(word(4, (i, 1), (i + 1, 1), (i, 1)), g) == expect

    def test_product_rule_arbitrary_words(self):
        rng = random.Random(5)
        g = seq(1, 0, 1, 1)
        for _ in range(100):
            x = random_word(4, rng)
            y = random_word(4, rng)
            gy = g
            for letter in reversed(y.letters):
                i = letter.index
                gy = gy.swap_adjacent(i)
            assert kappa_word(x * y, g) == kappa_word(x, gy) * kappa_word(y, g)

    def test_matches_kappa_of_projection(self):
        rng = random.Random(9)
        for n in (2, 3, 4):
            for _ in range(50):
                w = random_word(n, rng)
                d = [rng.randint(-5, 5) for _ in range(n)]
                g = GradedSequence.from_degrees(d)
                assert kappa_word(w, g) == kappa(project(w), g)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            kappa_word(Word.empty(3), seq(1, 1))


class TestDecomposeAdjacent:
    def test_identity(self):
        assert decompose_adjacent(Permutation.identity(3)) == Word.empty(3)

    def test_single_swap(self):
        assert decompose_adjacent(Permutation((2, 1))) == word(2, (1, 1))

    def test_three_cycle(self):
        p = Permutation((3, 1, 2))
        w = decompose_adjacent(p)
        assert len(w) == 2
        assert project(w) == p

    def test_minimal_length_everywhere(self):
        for p in symmetric_group(5):
            w = decompose_adjacent(p)
            assert project(w) == p
            assert len(w) == p.inversion_count()


class TestRelators:
    def test_n2(self):
        assert relators(2) == [word(2, (1, 1), (1, 1))]

    def test_n3_count_and_shapes(self):
        rels = relators(3)
        assert len(rels) == 3  # two squares plus one braid word, no commutators
        assert rels[0] == word(3, (1, 1), (1, 1))
        assert rels[1] == word(3, (2, 1), (2, 1))
        assert len(rels[2]) == 6

    def test_n4_has_commutator(self):
        rels = relators(4)
        assert any(len(r) == 4 for r in rels)

    def test_all_project_to_identity(self):
        for n in (2, 3, 4, 5):
            for r in relators(n):
                assert project(r).is_identity()

    def test_all_evaluate_to_plus_one(self):
        rng = random.Random(13)
        for n in (2, 3, 4, 5):
            for _ in range(5):
                g = GradedSequence.from_degrees(
                    [rng.randint(-9, 9) for _ in range(n)]
                )
                for r in relators(n):
                    assert kappa_word(r, g) == 1

    def test_domain_error(self):
        with pytest.raises(DomainError):
            relators(1)


class TestConjugationInvariance:
    def test_conjugated_relators_trivial(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.choice((2, 3, 4))
            g = GradedSequence.from_degrees([rng.randint(-9, 9) for _ in range(n)])
            x = random_word(n, rng, max_len=12)
            r = rng.choice(relators(n))
            assert kappa_word(x * r * x.inverse(), g) == 1

    def test_relator_products_absorbed(self):
        rng = random.Random(19)
        for _ in range(200):
            n = rng.choice((2, 3, 4))
            g = GradedSequence.from_degrees([rng.randint(-9, 9) for _ in range(n)])
            w = random_word(n, rng, max_len=12)
            a = Word.empty(n)
            for _ in range(rng.randint(1, 3)):
                x = random_word(n, rng, max_len=6)
                a = a * (x * rng.choice(relators(n)) * x.inverse())
            assert kappa_word(a * w, g) == kappa_word(w, g)

    def test_equal_projections_equal_signs(self):
        rng = random.Random(23)
        for _ in range(100):
            n = rng.choice((3, 4))
            g = GradedSequence.from_degrees([rng.randint(-9, 9) for _ in range(n)])
            w1 = random_word(n, rng, max_len=10)
            x = random_word(n, rng, max_len=6)
            w2 = (x * rng.choice(relators(n)) * x.inverse()) * w1
            assert project(w1) == project(w2)
            assert kappa_word(w1, g) == kappa_word(w2, g)


class TestWordGrammar:
    def test_parse_plain_and_inverse(self):
        w = parse_word("s2 s1^-1", 3)
        assert w == word(3, (2, 1), (1, -1))

    def test_prime_alias(self):
        assert parse_word("s1'", 2) == word(2, (1, -1))

    def test_empty_text(self):
        assert parse_word("", 3) == Word.empty(3)

    def test_render_round_trip(self):
        rng = random.Random(29)
        for _ in range(100):
            w = random_word(4, rng)
            assert parse_word(render_word(w), 4) == w

    def test_render_empty(self):
        assert render_word(Word.empty(3)) == "e"

    def test_bad_token(self):
        with pytest.raises(ParseError):
            parse_word("t1", 3)
        with pytest.raises(ParseError):
            parse_word("s1^2", 3)

    def test_index_out_of_range(self):
        with pytest.raises(ParseError):
            parse_word("s3", 3)
