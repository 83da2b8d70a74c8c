"""Build a transducer from a finite sample and minimise it.

minimize = trim -> push_outputs -> merge_equivalent

push_outputs moves every state's common output prefix (the meet of all
outputs readable from it) towards the initial state. After pushing, states
with the same future behaviour have literally the same outgoing outputs, so
a plain partition refinement on (finality, final output, per-symbol target
block and output) merges exactly the equivalent states.
"""

from dataclasses import dataclass

from .errors import InvalidArgument, InvalidInputError, NormalizationFailure
from .fst import (Transducer, coreachable, empty_transducer, topological_order,
                  trim)


@dataclass(frozen=True)
class SampleTable:
    """A finite partial function from input words to elements."""

    structure: object
    entries: dict
    alphabet: tuple = None

    def __post_init__(self):
        S = self.structure
        used = sorted({c for w in self.entries for c in w})
        alphabet = used if self.alphabet is None else sorted(set(self.alphabet))
        missing = set(used) - set(alphabet)
        if missing:
            raise InvalidInputError("table uses symbols outside the alphabet: %s" % " ".join(sorted(missing)))
        for w, value in self.entries.items():
            if not isinstance(w, str):
                raise InvalidInputError("table word %r is not a string" % (w,))
            if not S.contains(value):
                raise InvalidInputError("value %r for %r is not an element of %s" % (value, w, S.kind))
        object.__setattr__(self, "alphabet", tuple(alphabet))

    @classmethod
    def from_pairs(cls, structure, pairs, alphabet=None):
        entries = {}
        for w, value in pairs:
            if w in entries:
                raise InvalidInputError("duplicate word %r in sample table" % w)
            entries[w] = value
        return cls(structure, entries, alphabet)

    @property
    def max_len(self):
        return max((len(w) for w in self.entries), default=0)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, word):
        return word in self.entries

    def get(self, word):
        return self.entries.get(word)

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def prefixes(self):
        """Every prefix of every sample word, in shortlex order."""
        seen = {w[:i] for w in self.entries for i in range(len(w) + 1)}
        return sorted(seen, key=lambda w: (len(w), w))


def from_table(tab):
    """Prefix-tree transducer: one state per prefix, identity outputs on the
    arcs, and the sampled value as the final output of each sample word."""
    if not tab.entries:
        raise InvalidInputError("cannot build a transducer from an empty table")
    S = tab.structure
    prefixes = tab.prefixes()
    ids = {p: i for i, p in enumerate(prefixes)}
    e = S.identity()
    delta, lam = {}, {}
    for p in prefixes:
        if p:
            key = (ids[p[:-1]], p[-1])
            delta[key] = ids[p]
            lam[key] = e
    finals = frozenset(ids[w] for w in tab.entries)
    psi = {ids[w]: v for w, v in tab.entries.items()}
    return Transducer(S, tab.alphabet, len(prefixes), ids[""], finals, delta, lam, e, psi)


def iteration_bound(T):
    S = T.structure
    values = list(T.lam.values()) + list(T.psi.values())
    top = max((S.norm(v).numerator for v in values), default=0)
    return 2 * T.n_states * (1 + top)


def potentials(T, method="auto"):
    """Per-state meet of all outputs readable from that state.

    ``method`` is "acyclic" (one backward pass in topological order),
    "fixpoint" (iteration from the undefined value) or "auto". A state with
    no accepting continuation gets None.
    """
    order = topological_order(T) if method in ("auto", "acyclic") else None
    if method == "acyclic" and order is None:
        raise InvalidArgument("machine has a cycle; the acyclic pass does not apply")
    if order is not None:
        p = [None] * T.n_states
        for q in reversed(order):
            p[q] = _local_meet(T, q, p)
        return p
    return _fixpoint(T)


def _local_meet(T, q, p):
    S = T.structure
    acc = T.psi[q] if q in T.finals else None
    for _, t, m in T.out_arcs(q):
        if p[t] is None:
            continue
        term = S.combine(m, p[t])
        acc = term if acc is None else S.meet(acc, term)
    return acc


def _fixpoint(T):
    bound = iteration_bound(T)
    p = [None] * T.n_states
    for _ in range(bound):
        new = [_local_meet(T, q, p) for q in T.states]
        if new == p:
            return p
        changed = [q for q in T.states if new[q] != p[q]]
        p = new
    raise NormalizationFailure(
        "output pushing did not converge within %d rounds" % bound,
        _find_cycle(T, set(changed)) or changed)


def _find_cycle(T, among):
    """Some cycle inside the states ``among``, as a list of states, or None."""
    color = {}

    def visit(q, path):
        color[q] = 1
        path.append(q)
        for _, t, _ in T.out_arcs(q):
            if t not in among:
                continue
            if color.get(t) == 1:
                return path[path.index(t):]
            if t not in color:
                found = visit(t, path)
                if found:
                    return found
        path.pop()
        color[q] = 2
        return None

    for q in sorted(among):
        if q not in color:
            found = visit(q, [])
            if found:
                return found
    return None


def push_outputs(T, method="auto"):
    """Onward form of a trim machine; the represented function is unchanged."""
    useful = coreachable(T)
    if len(useful) != T.n_states:
        if T.n_states == 1 and not T.finals and not T.delta:
            return T
        raise InvalidArgument("push_outputs needs a trim machine")
    S = T.structure
    p = potentials(T, method)
    lam = {}
    for (q, a), t in T.delta.items():
        lam[(q, a)] = S.residual(p[q], S.combine(T.lam[(q, a)], p[t]))
    psi = {q: S.residual(p[q], T.psi[q]) for q in T.finals}
    return T.replace(lam=lam, psi=psi, iota=S.combine(T.iota, p[T.initial]))


def is_onward(T):
    """Whether at every state the meet of outgoing outputs (and the final
    output, if any) is the identity."""
    S = T.structure
    for q in T.states:
        family = [m for _, _, m in T.out_arcs(q)]
        if q in T.finals:
            family.append(T.psi[q])
        m = S.fold_meet(family)
        if m is not None and not S.is_identity(m):
            return False
    return True


def _number(keys):
    """Dense ids by first occurrence, so ties go to the lowest state id."""
    ids = {}
    return [ids.setdefault(k, len(ids)) for k in keys], len(set(keys))


def merge_equivalent(T):
    """Quotient by the coarsest partition compatible with finality, final
    outputs, and per-symbol (target block, output) pairs.

    States of the result are numbered breadth first from the initial state.
    """
    finals = T.finals
    block, count = _number([(q in finals, T.psi.get(q)) for q in T.states])
    while True:
        sigs = []
        for q in T.states:
            sigs.append((block[q],) + tuple((a, block[t], m) for a, t, m in T.out_arcs(q)))
        new_block, new_count = _number(sigs)
        block = new_block
        if new_count == count:
            break
        count = new_count

    rep = {}
    for q in T.states:
        rep.setdefault(block[q], q)
    # breadth-first renumbering for a canonical result
    order = [block[T.initial]]
    seen = {order[0]}
    i = 0
    while i < len(order):
        q = rep[order[i]]
        i += 1
        for _, t, _ in T.out_arcs(q):
            if block[t] not in seen:
                seen.add(block[t])
                order.append(block[t])
    order += [b for b in sorted(rep) if b not in seen]
    new_id = {b: i for i, b in enumerate(order)}

    delta, lam = {}, {}
    for b, q in rep.items():
        for a, t, m in T.out_arcs(q):
            delta[(new_id[b], a)] = new_id[block[t]]
            lam[(new_id[b], a)] = m
    new_finals = frozenset(new_id[block[q]] for q in finals)
    psi = {new_id[block[q]]: T.psi[q] for q in finals}
    return T.replace(n_states=len(order), initial=new_id[block[T.initial]],
                     finals=new_finals, delta=delta, lam=lam, psi=psi)


def minimize(T, method="auto"):
    U = trim(T)
    if not U.finals:
        return empty_transducer(T.structure, T.alphabet)
    return merge_equivalent(push_outputs(U, method))
