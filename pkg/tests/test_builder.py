import random
from fractions import Fraction

import pytest

from seqfst import builder
from seqfst.algebra import NATURAL, RATIONAL, WORDS
from seqfst.builder import (
    SampleTable,
    from_table,
    is_onward,
    merge_equivalent,
    minimize,
    potentials,
    push_outputs,
)
from seqfst.corpus import corpus, random_transducer
from seqfst.errors import InvalidArgument, InvalidInputError, NormalizationFailure
from seqfst.fst import Transducer, delta_star, empty_transducer, equivalent_bounded, output, trim, validate

WORD_TABLE = SampleTable(WORDS, {"ab": b"xy", "ac": b"xz"})


def oracle_classes(tab):
    """Number of distinct residual behaviours among prefixes with a
    non-empty continuation set: the expected size of the minimal machine.

    Written directly from the definition: for a prefix u collect the
    continuations w with u.w in the table, strip the largest common factor of
    their values, and compare what remains.
    """
    S = tab.structure

    def common(values):
        if S.kind == "words":
            first = values[0]
            k = 0
            while all(len(v) > k and v[k] == first[k] for v in values):
                k += 1
            return first[:k]
        return min(values)

    def strip(m, v):
        return v[len(m):] if S.kind == "words" else v - m

    seen = set()
    prefixes = {w[:i] for w in tab.entries for i in range(len(w) + 1)}
    for u in prefixes:
        cont = {w[len(u):]: v for w, v in tab.entries.items() if w.startswith(u)}
        m = common(list(cont.values()))
        seen.add(frozenset((w, strip(m, v)) for w, v in cont.items()))
    return len(seen)


class TestFromTable:
    def test_word_trie(self):
        T = from_table(WORD_TABLE)
        assert T.n_states == 4
        ab, ac = delta_star(T, 0, "ab"), delta_star(T, 0, "ac")
        assert T.finals == {ab, ac}
        assert T.psi[ab] == b"xy" and T.psi[ac] == b"xz"
        assert validate(T) == []

    def test_single_empty_word(self):
        T = from_table(SampleTable(RATIONAL, {"": Fraction(3, 2)}))
        assert T.n_states == 1 and T.finals == {0} and T.psi[0] == Fraction(3, 2)

    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            from_table(SampleTable(WORDS, {}))

    def test_duplicate_pair_rejected(self):
        with pytest.raises(InvalidInputError):
            SampleTable.from_pairs(WORDS, [("a", b"x"), ("a", b"y")])

    def test_non_element_rejected(self):
        with pytest.raises(InvalidInputError):
            SampleTable(RATIONAL, {"a": Fraction(-1)})

    def test_trie_reproduces_table(self):
        for tab in corpus(RATIONAL, 30, seed=2):
            T = from_table(tab)
            for w, v in tab.items():
                assert output(T, w) == v


class TestPush:
    def test_word_trie(self):
        P = push_outputs(from_table(WORD_TABLE))
        assert P.iota == b"x"
        a = delta_star(P, 0, "a")
        assert P.lam[(0, "a")] == b""
        assert P.lam[(a, "b")] == b"y" and P.lam[(a, "c")] == b"z"
        assert all(v == b"" for v in P.psi.values())

    def test_rational_trie(self):
        tab = SampleTable(RATIONAL, {"a": Fraction(3), "b": Fraction(5)})
        T = from_table(tab)
        P = push_outputs(T)
        assert P.iota == 3
        assert P.lam[(0, "a")] == 0 and P.lam[(0, "b")] == 2
        assert all(v == 0 for v in P.psi.values())
        assert equivalent_bounded(T, P, 3).equivalent

    def test_onward_and_idempotent(self):
        for S in (WORDS, RATIONAL, NATURAL):
            for tab in corpus(S, 25, seed=5):
                P = push_outputs(from_table(tab))
                assert is_onward(P)
                assert all(p is None or S.is_identity(p) for p in potentials(P))
                assert push_outputs(P) == P

    def test_acyclic_and_fixpoint_agree(self):
        for S in (WORDS, RATIONAL):
            for tab in corpus(S, 25, seed=6):
                T = from_table(tab)
                assert potentials(T, "acyclic") == potentials(T, "fixpoint")
                assert push_outputs(T, "acyclic") == push_outputs(T, "fixpoint")

    def test_acyclic_refuses_cycle(self):
        T = Transducer(WORDS, ("a",), 1, 0, frozenset({0}), {(0, "a"): 0}, {(0, "a"): b"x"}, b"", {0: b"y"})
        with pytest.raises(InvalidArgument):
            potentials(T, "acyclic")
        # the loop outputs x and the exit outputs y: nothing is common
        assert potentials(T) == [b""]

    def test_cyclic_rational(self):
        # q0 -a/1-> q1 -a/2-> q0, both final with psi 5 and 1
        T = Transducer(RATIONAL, ("a",), 2, 0, frozenset({0, 1}), {(0, "a"): 1, (1, "a"): 0},
                       {(0, "a"): Fraction(1), (1, "a"): Fraction(2)}, Fraction(0),
                       {0: Fraction(5), 1: Fraction(1)})
        assert potentials(T) == [2, 1]
        P = push_outputs(T)
        assert is_onward(P)
        assert equivalent_bounded(T, P, 8).equivalent

    def test_needs_trim(self):
        T = Transducer(WORDS, ("a",), 2, 0, frozenset({0}), {(0, "a"): 1}, {(0, "a"): b"x"}, b"", {0: b""})
        with pytest.raises(InvalidArgument):
            push_outputs(T)

    def test_non_convergence(self, monkeypatch):
        T = Transducer(RATIONAL, ("a",), 2, 0, frozenset({1}), {(0, "a"): 1, (1, "a"): 0},
                       {(0, "a"): Fraction(1), (1, "a"): Fraction(1)}, Fraction(0), {1: Fraction(0)})
        monkeypatch.setattr(builder, "iteration_bound", lambda T: 1)
        with pytest.raises(NormalizationFailure) as info:
            potentials(T, "fixpoint")
        assert info.value.cycle
        assert set(info.value.cycle) <= {0, 1}


class TestMerge:
    def test_word_table_finals_merge(self):
        M = merge_equivalent(push_outputs(from_table(WORD_TABLE)))
        assert M.n_states == 3
        assert oracle_classes(WORD_TABLE) == 3

    def test_distinct_states_unchanged(self):
        T = Transducer(WORDS, ("a",), 2, 0, frozenset({1}), {(0, "a"): 1}, {(0, "a"): b"x"}, b"", {1: b""})
        assert merge_equivalent(T) == T

    @pytest.mark.parametrize("seed", range(15))
    def test_duplicate_branches_merge(self, seed):
        rng = random.Random(seed)
        S = [WORDS, RATIONAL, NATURAL][seed % 3]
        base = trim(random_transducer(rng, S, alphabet="ab", density=0.8, final_prob=0.6))
        while not base.finals:
            base = trim(random_transducer(rng, S, alphabet="ab", density=0.8, final_prob=0.6))
        n = base.n_states
        # root state 2n: two symbols lead into two identical copies of base
        delta, lam = {}, {}
        for (q, a), t in base.delta.items():
            for off in (0, n):
                delta[(q + off, a)] = t + off
                lam[(q + off, a)] = base.lam[(q, a)]
        root = 2 * n
        m = base.iota
        delta[(root, "a")], lam[(root, "a")] = base.initial, m
        delta[(root, "b")], lam[(root, "b")] = base.initial + n, m
        finals = frozenset(base.finals) | {q + n for q in base.finals}
        psi = {**base.psi, **{q + n: v for q, v in base.psi.items()}}
        T = Transducer(S, ("a", "b"), 2 * n + 1, root, finals, delta, lam, S.identity(), psi)
        M = minimize(T)
        assert M.delta[(M.initial, "a")] == M.delta[(M.initial, "b")]
        assert equivalent_bounded(T, M, 6).equivalent


class TestMinimize:
    def test_word_table(self):
        M = minimize(from_table(WORD_TABLE))
        assert M.n_states == 3 and M.iota == b"x"

    def test_empty_function(self):
        assert minimize(empty_transducer(WORDS, "ab")).n_states == 1

    @pytest.mark.parametrize("S", [WORDS, RATIONAL, NATURAL], ids=lambda S: S.kind)
    def test_against_class_oracle(self, S):
        for tab in corpus(S, 80, seed=9, mode="mixed"):
            T = from_table(tab)
            M = minimize(T)
            assert M.n_states == oracle_classes(tab), tab
            assert equivalent_bounded(T, M, tab.max_len + 2).equivalent
            assert minimize(M) == M

    def test_random_cyclic_machines(self):
        rng = random.Random(12)
        for _ in range(60):
            S = rng.choice([WORDS, RATIONAL, NATURAL])
            T = random_transducer(rng, S)
            M = minimize(T)
            assert equivalent_bounded(T, M, 6).equivalent
            assert M.n_states <= max(trim(T).n_states, 1)
            assert minimize(M) == M
