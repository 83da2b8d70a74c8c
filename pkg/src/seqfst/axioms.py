"""Executable axiom checking for sequentiable structures.

Every law is a predicate over a small tuple of elements returning True
(holds), False (violated) or None (hypothesis unmet, a vacuous pass).
Laws are evaluated on a fixed exhaustive sweep of small elements and on
seeded random tuples. Random tuples are built *towards* each law's
hypothesis where plain sampling would almost never satisfy it.

Passing is probabilistic outside the sweep: no counterexample found is not
a proof.
"""

import itertools
import random
from dataclasses import dataclass, field

from .literals import format_element


@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    check: object  # (S, *elements) -> bool
    description: str = ""


@dataclass
class Verdict:
    law: str
    passed: bool = True
    counterexample: tuple = None
    checked: int = 0
    # tuples on which the law's hypothesis actually held
    hits: int = 0

    def replay(self, S, laws):
        """Re-evaluate the stored counterexample; True means it now passes."""
        if self.counterexample is None:
            return True
        return laws[self.law].check(S, *self.counterexample) is not False


@dataclass
class AxiomReport:
    structure: str
    verdicts: dict = field(default_factory=dict)
    seed: int = None
    trials: int = 0

    @property
    def ok(self):
        return all(v.passed for v in self.verdicts.values())

    @property
    def failures(self):
        return [v for v in self.verdicts.values() if not v.passed]

    def to_dict(self, S):
        return {
            "structure": self.structure,
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "laws": [
                {
                    "law": v.law,
                    "passed": v.passed,
                    "checked": v.checked,
                    "hits": v.hits,
                    "counterexample": (None if v.counterexample is None else
                                       [format_element(S, x) for x in v.counterexample]),
                }
                for v in self.verdicts.values()
            ],
        }

    def format_text(self, S):
        lines = ["structure: %s  seed: %s  trials: %d" % (self.structure, self.seed, self.trials)]
        for v in self.verdicts.values():
            status = "pass" if v.passed else "FAIL"
            line = "  %-24s %s  (%d checked, %d hypothesis hits)" % (v.law, status, v.checked, v.hits)
            if not v.passed:
                line += "\n      counterexample: " + ", ".join(format_element(S, x) for x in v.counterexample)
            lines.append(line)
        lines.append("result: %s" % ("all laws pass" if self.ok else "%d law(s) violated" % len(self.failures)))
        return "\n".join(lines)


# -- structure laws ---------------------------------------------------------

def _associativity(S, a, b, c):
    return S.combine(S.combine(a, b), c) == S.combine(a, S.combine(b, c))


def _identity(S, a):
    e = S.identity()
    return S.combine(e, a) == a == S.combine(a, e)


def _left_cancellation(S, a, b, c):
    if S.combine(a, b) != S.combine(a, c):
        return None
    return b == c


def _residual_roundtrip(S, a, c):
    b = S.combine(a, c)
    return S.leq(a, b) and S.residual(a, b) == c


def _order_reflexive(S, a):
    return S.leq(a, a)


def _order_antisymmetric(S, a, b):
    if S.leq(a, b) and S.leq(b, a):
        return a == b
    return None


def _order_transitive(S, a, b, c):
    if S.leq(a, b) and S.leq(b, c):
        return S.leq(a, c)
    return None


def _meet_lower_bound(S, a, b):
    m = S.meet(a, b)
    return S.leq(m, a) and S.leq(m, b)


def _meet_greatest(S, a, b, c):
    if S.leq(c, a) and S.leq(c, b):
        return S.leq(c, S.meet(a, b))
    return None


def _meet_commutative(S, a, b):
    return S.meet(a, b) == S.meet(b, a)


def _meet_idempotent(S, a):
    return S.meet(a, a) == a


def _meet_associative(S, a, b, c):
    return S.meet(S.meet(a, b), c) == S.meet(a, S.meet(b, c))


def _norm_homomorphism(S, a, b):
    return S.norm(S.combine(a, b)) == S.norm(a) + S.norm(b)


def _norm_zero_identity(S, a):
    n = S.norm(a)
    if n < 0:
        return False
    return (n == 0) == S.is_identity(a)


def _monotone_disjointness(S, a, b, c, d):
    if any(S.is_identity(x) for x in (a, b, c, d)):
        return None
    if S.leq(a, c) and S.leq(b, d) and S.is_identity(S.meet(a, b)):
        return S.is_identity(S.meet(c, d))
    return None


STRUCTURE_LAWS = {law.name: law for law in (
    Law("associativity", 3, _associativity),
    Law("identity", 1, _identity),
    Law("left_cancellation", 3, _left_cancellation),
    Law("residual_roundtrip", 2, _residual_roundtrip),
    Law("order_reflexive", 1, _order_reflexive),
    Law("order_antisymmetric", 2, _order_antisymmetric),
    Law("order_transitive", 3, _order_transitive),
    Law("meet_lower_bound", 2, _meet_lower_bound),
    Law("meet_greatest", 3, _meet_greatest),
    Law("meet_commutative", 2, _meet_commutative),
    Law("meet_idempotent", 1, _meet_idempotent),
    Law("meet_associative", 3, _meet_associative),
    Law("norm_homomorphism", 2, _norm_homomorphism),
    Law("norm_zero_identity", 1, _norm_zero_identity),
    Law("monotone_disjointness", 4, _monotone_disjointness),
)}


# -- consequences of the axioms (right cancellation and friends) ------------

def _prefix_bound(S, a, b, c):
    """||a|| <= ||b|| and a <= bc imply a <= b."""
    if S.norm(a) <= S.norm(b) and S.leq(a, S.combine(b, c)):
        return S.leq(a, b)
    return None


def _right_cancellation(S, a, b, c):
    if S.combine(a, c) != S.combine(b, c):
        return None
    return a == b


def _levy_factorization(S, a1, a2, b1, b2):
    """a1 a2 = b1 b2 with ||b1|| >= ||a1||: some c has a1 c = b1 and c b2 = a2."""
    if S.combine(a1, a2) != S.combine(b1, b2) or S.norm(b1) < S.norm(a1):
        return None
    if not S.leq(a1, b1):
        return False
    c = S.residual(a1, b1)
    return S.combine(a1, c) == b1 and S.combine(c, b2) == a2


DERIVED_LAWS = {law.name: law for law in (
    Law("prefix_bound", 3, _prefix_bound),
    Law("right_cancellation", 3, _right_cancellation),
    Law("levy_factorization", 4, _levy_factorization),
)}


def _directed_tuple(name, arity, S, draw):
    """Random tuple for a law, steered into its hypothesis where needed."""
    if name == "meet_greatest":
        c = draw()
        return (S.combine(c, draw()), S.combine(c, draw()), c)
    if name == "order_transitive":
        a = draw()
        b = S.combine(a, draw())
        return (a, b, S.combine(b, draw()))
    if name == "monotone_disjointness":
        a, b = draw(), draw()
        m = S.meet(a, b)
        a, b = S.residual(m, a), S.residual(m, b)
        return (a, b, S.combine(a, draw()), S.combine(b, draw()))
    if name == "prefix_bound":
        b, c = draw(), draw()
        return (S.meet(S.combine(b, c), draw()), b, c)
    if name == "levy_factorization":
        a1, a2 = draw(), draw()
        t = S.combine(a1, a2)
        if draw.rng.random() < 0.5:
            b1 = S.meet(t, S.combine(a1, draw()))
        else:
            b1 = S.meet(t, draw())
        return (a1, a2, b1, S.residual(b1, t))
    return tuple(draw() for _ in range(arity))


def _guarded_tuple(law, S, draw):
    """Directed tuple, or a plain one if steering itself breaks (which only
    happens for structures that already violate some law)."""
    try:
        return _directed_tuple(law.name, law.arity, S, draw)
    except Exception:
        return tuple(draw() for _ in range(law.arity))


def _sweep_tuples(name, arity, S, elements):
    if name == "monotone_disjointness":
        # only pairs with trivial meet can trigger the law
        nonid = [x for x in elements if not S.is_identity(x)]
        for a, b in itertools.product(nonid, repeat=2):
            if not S.is_identity(S.meet(a, b)):
                continue
            above_a = [c for c in nonid if S.leq(a, c)]
            above_b = [d for d in nonid if S.leq(b, d)]
            for c in above_a:
                for d in above_b:
                    yield (a, b, c, d)
        return
    yield from itertools.product(elements, repeat=arity)


class _Draw:
    def __init__(self, S, rng, sampler):
        self.rng = rng
        self._sample = sampler or S.sample

    def __call__(self):
        return self._sample(self.rng)


def _run(S, laws, seed, trials, sweep, sampler):
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = AxiomReport(structure=S.kind, seed=seed, trials=trials)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    draw = _Draw(S, rng, sampler)
    if sweep is True:
        sweep = S.sweep()
    for law in laws.values():
        verdict = Verdict(law.name)
        report.verdicts[law.name] = verdict
        sources = []
        if sweep:
            sources.append(_sweep_tuples(law.name, law.arity, S, sweep))
        sources.append(_guarded_tuple(law, S, draw) for _ in range(trials))
        for args in itertools.chain.from_iterable(sources):
            verdict.checked += 1
            try:
                result = law.check(S, *args)
            except Exception:
                # an operation refusing its own output (say, a residual of
                # the meet) is a violation, not a crash of the checker
                result = False
            if result is None:
                continue
            verdict.hits += 1
            if not result:
                verdict.passed = False
                verdict.counterexample = tuple(args)
                break
    return report


def check_axioms(S, seed=0, trials=1000, sweep=True, sampler=None):
    """Evaluate every structure law on the sweep set plus ``trials`` random tuples.

    ``sweep`` may be True (the structure's default sweep set), a list of
    elements, or a falsy value to rely on random trials alone. The first
    counterexample found for each law is kept.
    """
    return _run(S, STRUCTURE_LAWS, seed, trials, sweep, sampler)


def check_derived_properties(S, seed=0, trials=1000, sweep=True, sampler=None):
    """Same as check_axioms but for prefix bound, right cancellation and the
    Levy-style factorisation, which follow from the axioms."""
    return _run(S, DERIVED_LAWS, seed, trials, sweep, sampler)


ALL_LAWS = {**STRUCTURE_LAWS, **DERIVED_LAWS}
