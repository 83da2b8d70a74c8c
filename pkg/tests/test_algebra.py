import itertools
import os
import pickle
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqfst.algebra import NATURAL, PRODUCT, RATIONAL, STRUCTURES, WORDS, combine, get_structure, leq, left_residual, meet
from seqfst.axioms import ALL_LAWS, DERIVED_LAWS, STRUCTURE_LAWS, check_axioms, check_derived_properties
from seqfst.errors import InvalidArgument, NotAPrefixError

SEQUENTIABLE = [WORDS, RATIONAL, NATURAL]


def all_words(letters, max_len):
    for n in range(max_len + 1):
        for t in itertools.product(letters, repeat=n):
            yield bytes(t)


def small_rationals(bound):
    return sorted({Fraction(p, q) for p in range(bound + 1) for q in range(1, bound + 1)})


class TestLeq:
    def test_words_prefix(self):
        assert leq(WORDS, b"ab", b"abc")
        assert not leq(WORDS, b"b", b"ab")

    def test_rational_reflexive(self):
        assert leq(RATIONAL, Fraction(3, 2), Fraction(3, 2))

    def test_structure_mismatch(self):
        with pytest.raises(InvalidArgument):
            leq(WORDS, b"a", Fraction(1))
        with pytest.raises(InvalidArgument):
            leq(RATIONAL, Fraction(-1), Fraction(1))


class TestResidual:
    def test_words(self):
        assert left_residual(WORDS, b"ab", b"abc") == b"c"

    def test_rational(self):
        assert left_residual(RATIONAL, Fraction(1, 3), Fraction(5, 6)) == Fraction(1, 2)

    @pytest.mark.parametrize("S", list(STRUCTURES.values()), ids=lambda S: S.kind)
    def test_identity_residual(self, S):
        rng = random.Random(3)
        for _ in range(50):
            b = S.sample(rng)
            assert left_residual(S, S.identity(), b) == b

    def test_not_a_prefix(self):
        with pytest.raises(NotAPrefixError):
            left_residual(WORDS, b"b", b"ab")
        with pytest.raises(NotAPrefixError):
            left_residual(RATIONAL, Fraction(2), Fraction(1))


class TestMeet:
    def test_words_lcp(self):
        assert meet(WORDS, b"xy", b"xz") == b"x"

    def test_rational_min(self):
        assert meet(RATIONAL, Fraction(3), Fraction(5)) == 3

    @pytest.mark.parametrize("S", list(STRUCTURES.values()), ids=lambda S: S.kind)
    def test_idempotent(self, S):
        rng = random.Random(5)
        for _ in range(50):
            a = S.sample(rng)
            assert meet(S, a, a) == a

    def test_words_against_commonprefix(self):
        # oracle: the standard library's common-prefix routine
        words = list(all_words(b"ab", 3))
        for a, b in itertools.product(words, repeat=2):
            expected = os.path.commonprefix([a.decode(), b.decode()]).encode()
            assert WORDS.meet(a, b) == expected

    def test_product_componentwise(self):
        a, b = (b"xy", Fraction(1)), (b"xz", Fraction(1, 2))
        assert meet(PRODUCT, a, b) == (b"x", Fraction(1, 2))

    def test_fold_meet_empty_is_none(self):
        assert WORDS.fold_meet([]) is None
        assert WORDS.fold_meet([b"abc", b"abd", b"ab"]) == b"ab"


class TestCombineAndNorm:
    def test_rational_int_inputs(self):
        assert combine(RATIONAL, 1, Fraction(1, 2)) == Fraction(3, 2)
        assert RATIONAL.contains(2) and not RATIONAL.contains(True)

    def test_norms(self):
        assert WORDS.norm(b"abc") == 3
        assert RATIONAL.norm(Fraction(5, 2)) == Fraction(5, 2)
        assert PRODUCT.norm((b"xy", Fraction(1, 2))) == Fraction(5, 2)

    def test_get_structure(self):
        assert get_structure("words") is WORDS
        with pytest.raises(InvalidArgument):
            get_structure("reals")

    def test_pickle_round_trip_keeps_singleton(self):
        for S in STRUCTURES.values():
            assert pickle.loads(pickle.dumps(S)) is S


class TestExhaustiveLeftCancellation:
    """a.b = a.c implies b = c, over every triple of a small universe."""

    def test_words_up_to_four(self):
        words = list(all_words(b"ab", 4))
        law = STRUCTURE_LAWS["left_cancellation"].check
        for a, b, c in itertools.product(words, repeat=3):
            assert law(WORDS, a, b, c) is not False

    def test_rationals_up_to_eight(self):
        values = small_rationals(8)
        law = STRUCTURE_LAWS["left_cancellation"].check
        # a + b = a + c is only possible for b = c, so check the sums directly
        for a in values:
            sums = {}
            for b in values:
                s = RATIONAL.combine(a, b)
                assert s not in sums
                sums[s] = b
        for a, b in itertools.product(values[:20], repeat=2):
            assert law(RATIONAL, a, b, b) is True


class TestCheckAxioms:
    @pytest.mark.parametrize("S", SEQUENTIABLE, ids=lambda S: S.kind)
    def test_sequentiable_instances_pass(self, S):
        report = check_axioms(S, seed=11, trials=300)
        assert report.ok, report.format_text(S)
        assert set(report.verdicts) == set(STRUCTURE_LAWS)

    def test_product_fails_monotone_disjointness(self):
        report = check_axioms(PRODUCT, seed=0, trials=1000)
        bad = report.verdicts["monotone_disjointness"]
        assert not bad.passed
        a, b, c, d = bad.counterexample
        # re-derive the violation independently
        assert PRODUCT.is_identity(PRODUCT.meet(a, b))
        assert PRODUCT.leq(a, c) and PRODUCT.leq(b, d)
        assert not PRODUCT.is_identity(PRODUCT.meet(c, d))
        assert not bad.replay(PRODUCT, ALL_LAWS)

    def test_product_directed_probe(self):
        a, b = (b"x", Fraction(0)), (b"", Fraction(1))
        c = d = (b"x", Fraction(1))
        assert STRUCTURE_LAWS["monotone_disjointness"].check(PRODUCT, a, b, c, d) is False
        report = check_axioms(PRODUCT, seed=0, trials=1, sweep=[a, b, c])
        assert not report.verdicts["monotone_disjointness"].passed

    def test_product_other_laws_hold(self):
        report = check_axioms(PRODUCT, seed=2, trials=200)
        assert [v.law for v in report.failures] == ["monotone_disjointness"]

    def test_random_search_alone_finds_product_counterexample(self):
        report = check_axioms(PRODUCT, seed=7, trials=5000, sweep=False)
        assert not report.verdicts["monotone_disjointness"].passed

    def test_same_seed_same_report(self):
        r1 = check_axioms(PRODUCT, seed=4, trials=200, sweep=False)
        r2 = check_axioms(PRODUCT, seed=4, trials=200, sweep=False)
        assert r1.to_dict(PRODUCT) == r2.to_dict(PRODUCT)

    def test_custom_sampler(self):
        calls = []

        def sampler(rng):
            calls.append(1)
            return bytes(rng.choice(b"q") for _ in range(rng.randint(0, 2)))

        report = check_axioms(WORDS, seed=1, trials=10, sweep=False, sampler=sampler)
        assert report.ok and calls

    def test_invalid_trials(self):
        with pytest.raises(ValueError):
            check_axioms(WORDS, trials=0)

    def test_broken_structure_is_caught(self):
        class Backwards(type(WORDS)):
            kind = "broken"

            def meet(self, a, b):
                return a  # not commutative

        report = check_axioms(Backwards(), seed=0, trials=100)
        assert not report.verdicts["meet_commutative"].passed


class TestDerivedProperties:
    def test_rational_levy(self):
        law = DERIVED_LAWS["levy_factorization"].check
        a1, a2, b1, b2 = map(Fraction, (2, 5, 3, 4))
        assert law(RATIONAL, a1, a2, b1, b2) is True
        c = RATIONAL.residual(a1, b1)
        assert c == 1 and a1 + c == b1 and c + b2 == a2

    def test_words_right_cancellation_vacuous(self):
        assert DERIVED_LAWS["right_cancellation"].check(WORDS, b"x", b"y", b"z") is None

    def test_words_levy(self):
        assert DERIVED_LAWS["levy_factorization"].check(WORDS, b"a", b"bc", b"ab", b"c") is True
        assert WORDS.residual(b"a", b"ab") == b"b"

    @pytest.mark.parametrize("S", SEQUENTIABLE, ids=lambda S: S.kind)
    def test_instances_pass(self, S):
        report = check_derived_properties(S, seed=3, trials=300)
        assert report.ok, report.format_text(S)
        # the directed generator must actually reach the hypotheses
        for name in ("prefix_bound", "levy_factorization"):
            assert report.verdicts[name].hits > 50

    def test_product_violates_prefix_bound(self):
        report = check_derived_properties(PRODUCT, seed=0, trials=1000)
        assert not report.verdicts["prefix_bound"].passed


words_st = st.binary(max_size=6).map(lambda b: bytes(c % 3 + 120 for c in b))
rationals_st = st.fractions(min_value=0, max_value=20, max_denominator=12)


class TestProperties:
    @settings(max_examples=200, deadline=None)
    @given(words_st, words_st, words_st)
    def test_words_levy(self, a1, a2, c):
        # a1 a2 = b1 b2 with b1 = a1 c whenever c is a prefix of a2
        k = len(c)
        if a2[:k] != c:
            return
        b1, b2 = a1 + c, a2[k:]
        assert DERIVED_LAWS["levy_factorization"].check(WORDS, a1, a2, b1, b2) is True

    @settings(max_examples=200, deadline=None)
    @given(words_st, words_st)
    def test_words_meet_is_prefix(self, a, b):
        m = WORDS.meet(a, b)
        assert a.startswith(m) and b.startswith(m)
        assert len(m) == len(a) or len(m) == len(b) or a[len(m)] != b[len(m)]

    @settings(max_examples=200, deadline=None)
    @given(rationals_st, rationals_st)
    def test_rational_residual(self, a, b):
        lo, hi = min(a, b), max(a, b)
        assert RATIONAL.residual(lo, hi) == hi - lo
        assert RATIONAL.norm(RATIONAL.combine(a, b)) == a + b

    @settings(max_examples=200, deadline=None)
    @given(st.sampled_from(SEQUENTIABLE), st.integers(0, 2**32))
    def test_every_law_on_random_tuples(self, S, seed):
        rng = random.Random(seed)
        for law in ALL_LAWS.values():
            args = [S.sample(rng) for _ in range(law.arity)]
            assert law.check(S, *args) is not False, (law.name, args)
