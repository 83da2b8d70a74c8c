"""Subsequential transducers with outputs in a sequentiable structure.

A machine has dense integer states ``0..n_states-1``, a partial transition
function ``delta[(q, a)] -> q'`` with outputs ``lam[(q, a)]`` on exactly the
same keys, an initial output ``iota`` and final outputs ``psi`` on the final
states. The represented function is

    output(w) = iota . lam*(q0, w) . psi(delta*(q0, w))

defined iff ``delta*(q0, w)`` is final. Undefined transitions are simply
absent; no sink state is materialised.

Input words are ``str`` whose characters are alphabet symbols.
"""

from collections import deque
from dataclasses import dataclass

from .errors import InvalidArgument, InvalidInputError, SizeError


@dataclass(frozen=True)
class Transducer:
    structure: object
    alphabet: tuple
    n_states: int
    initial: int
    finals: frozenset
    delta: dict
    lam: dict
    iota: object
    psi: dict

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(sorted(self.alphabet)))
        object.__setattr__(self, "finals", frozenset(self.finals))

    @property
    def states(self):
        return range(self.n_states)

    def arcs(self):
        """(q, a, target, output) in state-then-symbol order."""
        for (q, a) in sorted(self.delta):
            yield q, a, self.delta[(q, a)], self.lam[(q, a)]

    def out_arcs(self, q):
        for a in self.alphabet:
            t = self.delta.get((q, a))
            if t is not None:
                yield a, t, self.lam[(q, a)]

    def replace(self, **changes):
        kw = dict(structure=self.structure, alphabet=self.alphabet, n_states=self.n_states,
                  initial=self.initial, finals=self.finals, delta=self.delta, lam=self.lam,
                  iota=self.iota, psi=self.psi)
        kw.update(changes)
        return Transducer(**kw)

    def __call__(self, word):
        return output(self, word)


@dataclass
class RunResult:
    end_state: object
    # lam* along the consumed prefix; the full word's value when end_state is defined
    accumulated: object
    accepted: bool
    output: object = None


def empty_transducer(structure, alphabet=()):
    """The canonical machine for the nowhere-defined function: one non-final state."""
    return Transducer(structure, tuple(alphabet), 1, 0, frozenset(), {}, {},
                      structure.identity(), {})


def _check_word(T, word):
    bad = [c for c in word if c not in T.alphabet]
    if bad:
        raise InvalidInputError("symbol %r is not in the alphabet %s" % (bad[0], " ".join(T.alphabet)))


def delta_star(T, q, word):
    _check_word(T, word)
    for a in word:
        q = T.delta.get((q, a))
        if q is None:
            return None
    return q


def lambda_star(T, q, word):
    _check_word(T, word)
    S = T.structure
    acc = S.identity()
    for a in word:
        key = (q, a)
        if key not in T.delta:
            return None
        acc = S.combine(acc, T.lam[key])
        q = T.delta[key]
    return acc


def run(T, word):
    _check_word(T, word)
    S = T.structure
    q = T.initial
    acc = S.identity()
    for a in word:
        key = (q, a)
        if key not in T.delta:
            return RunResult(None, acc, False)
        acc = S.combine(acc, T.lam[key])
        q = T.delta[key]
    if q not in T.finals:
        return RunResult(q, acc, False)
    out = S.combine(S.combine(T.iota, acc), T.psi[q])
    return RunResult(q, acc, True, out)


def output(T, word):
    """O_T(word), or None where the function is undefined."""
    return run(T, word).output


def validate(T):
    """List of human-readable invariant violations; empty for a well-formed machine."""
    S = T.structure
    problems = []
    if not isinstance(T.n_states, int) or T.n_states < 1:
        problems.append("state count must be a positive integer")
        return problems
    states = set(T.states)
    if len(set(T.alphabet)) != len(T.alphabet):
        problems.append("alphabet has duplicate symbols")
    for a in T.alphabet:
        if not isinstance(a, str) or len(a) != 1:
            problems.append("alphabet symbol %r is not a single character" % (a,))
    if T.initial not in states:
        problems.append("initial state %r not in Q" % (T.initial,))
    if not T.finals <= states:
        problems.append("final states %s not in Q" % sorted(T.finals - states))
    if set(T.psi) != set(T.finals):
        extra = sorted(set(T.psi) - set(T.finals))
        missing = sorted(set(T.finals) - set(T.psi))
        if extra:
            problems.append("psi defined on non-final states %s" % extra)
        if missing:
            problems.append("psi missing on final states %s" % missing)
    if set(T.delta) != set(T.lam):
        problems.append("dom mismatch: lambda and delta defined on different (state, symbol) pairs")
    for key, target in T.delta.items():
        if not (isinstance(key, tuple) and len(key) == 2):
            problems.append("malformed transition key %r" % (key,))
            continue
        q, a = key
        if q not in states:
            problems.append("transition from unknown state %r" % (q,))
        if a not in T.alphabet:
            problems.append("transition on symbol %r outside the alphabet" % (a,))
        if isinstance(target, (set, frozenset, list, tuple)):
            problems.append("transition (%r, %r) is nondeterministic" % (q, a))
        elif target not in states:
            problems.append("transition (%r, %r) targets unknown state %r" % (q, a, target))
    for key, value in T.lam.items():
        if not S.contains(value):
            problems.append("lambda%r = %r is not an element of %s" % (key, value, S.kind))
    for q, value in T.psi.items():
        if not S.contains(value):
            problems.append("psi(%r) = %r is not an element of %s" % (q, value, S.kind))
    if not S.contains(T.iota):
        problems.append("iota = %r is not an element of %s" % (T.iota, S.kind))
    return problems


def reachable(T):
    seen = {T.initial}
    queue = deque([T.initial])
    while queue:
        q = queue.popleft()
        for _, t, _ in T.out_arcs(q):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def coreachable(T):
    preds = {q: set() for q in T.states}
    for (q, _), t in T.delta.items():
        preds[t].add(q)
    seen = set(T.finals)
    queue = deque(T.finals)
    while queue:
        q = queue.popleft()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


def restrict(T, keep):
    """Sub-machine on the states in ``keep`` (must contain the initial state),
    renumbered densely in increasing old-id order."""
    order = sorted(keep)
    new_id = {q: i for i, q in enumerate(order)}
    delta, lam = {}, {}
    for (q, a), t in T.delta.items():
        if q in new_id and t in new_id:
            delta[(new_id[q], a)] = new_id[t]
            lam[(new_id[q], a)] = T.lam[(q, a)]
    finals = frozenset(new_id[q] for q in T.finals if q in new_id)
    psi = {new_id[q]: T.psi[q] for q in T.finals if q in new_id}
    return T.replace(n_states=len(order), initial=new_id[T.initial], finals=finals,
                     delta=delta, lam=lam, psi=psi)


def trim(T):
    """Keep only states that are reachable and co-reachable.

    If the initial state cannot reach a final state the function is empty and
    the canonical one-state empty machine is returned.
    """
    useful = reachable(T) & coreachable(T)
    if T.initial not in useful:
        return empty_transducer(T.structure, T.alphabet)
    return restrict(T, useful)


def is_trim(T):
    return len(reachable(T) & coreachable(T)) == T.n_states and (
        T.initial in coreachable(T) or T.n_states == 1)


def shortlex_words(alphabet, max_len):
    """All words up to max_len, shortest first, then lexicographic."""
    level = [""]
    for _ in range(max_len + 1):
        yield from level
        level = [w + a for w in level for a in alphabet]


MAX_BOUNDED_LENGTH = 20
MAX_BOUNDED_ALPHABET = 4


@dataclass
class EquivalenceVerdict:
    equivalent: bool
    counterexample: str = None
    left: object = None
    right: object = None
    # number of words whose outputs were compared
    compared: int = 0


def equivalent_bounded(T1, T2, max_len):
    """Compare O_T1 and O_T2 on every word of length <= max_len.

    Words are visited in shortlex order, so the first mismatch is the
    shortest, lexicographically least counterexample. Branches where both
    machines are already stuck are pruned: nothing below them is defined.
    """
    if T1.structure.kind != T2.structure.kind:
        raise InvalidArgument("structures differ: %s vs %s" % (T1.structure.kind, T2.structure.kind))
    if tuple(T1.alphabet) != tuple(T2.alphabet):
        raise InvalidArgument("alphabets differ: %s vs %s" % (T1.alphabet, T2.alphabet))
    if max_len < 0:
        raise InvalidArgument("length bound must be non-negative")
    if max_len > MAX_BOUNDED_LENGTH and len(T1.alphabet) > MAX_BOUNDED_ALPHABET:
        raise SizeError("refusing to enumerate words up to length %d over %d symbols"
                        % (max_len, len(T1.alphabet)))
    S = T1.structure
    e = S.identity()
    # (word, state1, acc1, state2, acc2); a state of None means stuck
    level = [("", T1.initial, e, T2.initial, e)]
    compared = 0
    for length in range(max_len + 1):
        nxt = []
        for word, q1, acc1, q2, acc2 in level:
            o1 = _finish(T1, q1, acc1)
            o2 = _finish(T2, q2, acc2)
            compared += 1
            if o1 != o2:
                return EquivalenceVerdict(False, word, o1, o2, compared)
            if length == max_len:
                continue
            for a in T1.alphabet:
                n1, m1 = _step(T1, q1, acc1, a)
                n2, m2 = _step(T2, q2, acc2, a)
                if n1 is None and n2 is None:
                    continue
                nxt.append((word + a, n1, m1, n2, m2))
        level = nxt
        if not level:
            break
    return EquivalenceVerdict(True, compared=compared)


def _step(T, q, acc, a):
    if q is None:
        return None, None
    key = (q, a)
    if key not in T.delta:
        return None, None
    return T.delta[key], T.structure.combine(acc, T.lam[key])


def _finish(T, q, acc):
    if q is None or q not in T.finals:
        return None
    S = T.structure
    return S.combine(S.combine(T.iota, acc), T.psi[q])


def is_acyclic(T):
    return topological_order(T) is not None


def topological_order(T):
    """States in topological order, or None if the transition graph has a cycle."""
    indeg = [0] * T.n_states
    succ = [[] for _ in T.states]
    for (q, _), t in sorted(T.delta.items()):
        succ[q].append(t)
        indeg[t] += 1
    queue = deque(q for q in T.states if indeg[q] == 0)
    order = []
    while queue:
        q = queue.popleft()
        order.append(q)
        for t in succ[q]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    return order if len(order) == T.n_states else None


def language(T, limit=100000):
    """The whole function {word: value} of a machine with a finite domain.

    Raises InvalidArgument if the trimmed machine has a cycle (infinite
    domain) or the domain exceeds ``limit`` words.
    """
    U = trim(T)
    if not is_acyclic(U):
        raise InvalidArgument("machine has an infinite domain")
    S = U.structure
    out = {}
    stack = [("", U.initial, U.iota)]
    while stack:
        word, q, acc = stack.pop()
        if q in U.finals:
            out[word] = S.combine(acc, U.psi[q])
            if len(out) > limit:
                raise SizeError("domain exceeds %d words" % limit)
        for a, t, m in U.out_arcs(q):
            stack.append((word + a, t, S.combine(acc, m)))
    return out
