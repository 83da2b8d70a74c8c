"""Seeded random sample tables and machines for tests and acceptance runs."""

import random
from fractions import Fraction

from .algebra import WORDS
from .builder import SampleTable
from .fst import Transducer, output, shortlex_words

ALPHABET = "abc"
OUTPUT_LETTERS = b"xy"


def random_element(rng, S, max_word=4, max_den=6):
    if S.kind == "words":
        return bytes(rng.choice(OUTPUT_LETTERS) for _ in range(rng.randint(0, max_word)))
    if S.kind == "rational":
        return Fraction(rng.randint(0, 12), rng.randint(1, max_den))
    if S.kind == "natural":
        return rng.randint(0, 8)
    if S.kind == "product":
        return (random_element(rng, WORDS, max_word, max_den), Fraction(rng.randint(0, 4), rng.randint(1, 2)))
    raise ValueError(S.kind)


def random_transducer(rng, S, n_states=None, alphabet=None, density=0.6, final_prob=0.4):
    """A random deterministic machine; may be cyclic and need not be trim."""
    alphabet = alphabet or ALPHABET[:rng.randint(1, 3)]
    n = n_states or rng.randint(1, 5)
    delta, lam = {}, {}
    for q in range(n):
        for a in alphabet:
            if rng.random() < density:
                delta[(q, a)] = rng.randrange(n)
                lam[(q, a)] = random_element(rng, S, max_word=2)
    finals = frozenset(q for q in range(n) if rng.random() < final_prob)
    psi = {q: random_element(rng, S, max_word=2) for q in sorted(finals)}
    return Transducer(S, tuple(alphabet), n, 0, finals, delta, lam, random_element(rng, S, max_word=1), psi)


def random_table(rng, S, alphabet_size=None, max_word_len=5, max_entries=12, mode="independent"):
    """A random finite function: |alphabet| in 1..3, words of length <= 5,
    at most 12 entries.

    mode "independent" draws each value on its own (words of length <= 4,
    rationals with denominator <= 6). mode "mixed" takes half of the tables
    from a random machine instead, so that many prefixes share behaviour;
    those values may be longer.
    """
    k = alphabet_size or rng.randint(1, 3)
    alphabet = ALPHABET[:k]
    universe = list(shortlex_words(alphabet, max_word_len))
    size = rng.randint(1, min(max_entries, len(universe)))
    words = rng.sample(universe, size)
    if mode == "mixed" and rng.random() < 0.5:
        T = random_transducer(rng, S, alphabet=alphabet, density=0.9, final_prob=0.7)
        values = {}
        for w in words:
            v = output(T, w)
            if v is not None:
                values[w] = v
        if values:
            return SampleTable(S, values, alphabet)
    return SampleTable(S, {w: random_element(rng, S) for w in words}, alphabet)


def corpus(S, count, seed=0, mode="independent"):
    rng = random.Random(seed)
    return [random_table(rng, S, mode=mode) for _ in range(count)]
