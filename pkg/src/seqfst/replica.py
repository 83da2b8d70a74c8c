"""Step-by-step construction of the minimal transducer of a finite function
from its Myhill-Nerode classes, checking every intermediate fact on the way.

Pipeline for a sample table ``tab`` (a finite partial function f):

1. ``compute_classes``   group explored prefixes by residual profile;
                          pick shortest representatives; slice each class to
                          words of length <= 2n; build uniform witnesses.
2. ``build_norm_graph``  class graph weighted by norm differences of the
                          uniform suffix functions.
3. ``assert_no_negative_cycles`` / ``compute_argmin_potentials``.
4. ``build_hat_s``       shifted suffix functions and the arc elements.
5. ``assemble_transducer`` and ``verify_replica``.

Words that are not a prefix of any sample word form the error class; it is
kept in the class count but excluded from the graph and from the machine.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .builder import from_table, minimize
from .errors import InternalConsistencyError, InvalidArgument, LemmaViolation, NotAPrefixError
from .fst import Transducer, empty_transducer, language, validate
from .literals import format_element

SCHEMA_VERSION = 1


def _shortlex(w):
    return (len(w), w)


@dataclass(frozen=True)
class ResidualProfile:
    prefix: str
    domain: frozenset
    factor: object
    suffix_fn: dict
    essential: bool

    def key(self):
        """Hashable form of the suffix function; None for non-essential prefixes."""
        if not self.essential:
            return None
        return tuple(sorted(self.suffix_fn.items(), key=lambda kv: _shortlex(kv[0])))


def residual_profile(tab, u):
    """Canonical factor m_u = meet of all f(u.w) and suffix function
    s_u(w) = m_u^-1 f(u.w)."""
    S = tab.structure
    n = len(u)
    values = {w[n:]: v for w, v in tab.entries.items() if w.startswith(u)}
    if not values:
        return ResidualProfile(u, frozenset(), S.identity(), {}, False)
    m = S.fold_meet(values[w] for w in sorted(values, key=_shortlex))
    s = {w: S.residual(m, v) for w, v in values.items()}
    return ResidualProfile(u, frozenset(values), m, s, True)


def equivalent_prefixes(p1, p2):
    if not p1.essential and not p2.essential:
        return True
    if p1.essential != p2.essential:
        return False
    return p1.domain == p2.domain and p1.suffix_fn == p2.suffix_fn


@dataclass
class Witness:
    """<m_alpha, m_beta, s> with f(alpha.w) = m_alpha s(w) and f(beta.w) = m_beta s(w)."""

    alpha: str
    beta: str
    m_alpha: object
    m_beta: object
    s: dict

    def failures(self, tab):
        """Suffixes on which the defining equations do not hold."""
        S = tab.structure
        bad = []
        dom_alpha = {w[len(self.alpha):] for w in tab.entries if w.startswith(self.alpha)}
        if dom_alpha != set(self.s):
            bad.append(None)
        for w, value in self.s.items():
            fa = tab.get(self.alpha + w)
            fb = tab.get(self.beta + w)
            if fa != S.combine(self.m_alpha, value) or fb != S.combine(self.m_beta, value):
                bad.append(w)
        return bad

    def replays(self, tab):
        return not self.failures(tab)


@dataclass
class ClassInfo:
    index: int
    representative: str
    essential: bool
    members: list = field(default_factory=list)
    # A_i: members of length <= 2n
    slice: list = field(default_factory=list)
    profile: ResidualProfile = None
    # beta -> witness for beta == representative, canonical factors
    witnesses: dict = field(default_factory=dict)
    chosen: str = None            # beta_i
    uniform_s: dict = None        # s_i
    uniform_factor: object = None  # m_i''
    corrections: dict = field(default_factory=dict)   # beta -> b_beta
    uniform_witnesses: dict = field(default_factory=dict)


@dataclass
class ClassSystem:
    table: object
    classes: list
    class_of: dict
    transitions: dict
    error: int = None
    profiles: dict = field(default_factory=dict)

    @property
    def n(self):
        return len(self.classes)

    @property
    def essential(self):
        return [c.index for c in self.classes if c.essential]

    def profile(self, u):
        p = self.profiles.get(u)
        if p is None:
            p = self.profiles[u] = residual_profile(self.table, u)
        return p

    def classify(self, u):
        """Class index of an arbitrary word, or None for an unseen profile."""
        if u in self.class_of:
            return self.class_of[u]
        key = self.profile(u).key()
        for c in self.classes:
            if c.profile.key() == key:
                return c.index
        return None

    def summary(self):
        k = len(self.essential)
        text = "%d essential class%s" % (k, "" if k == 1 else "es")
        if self.error is not None:
            text += " (+1 error class)"
        return text


def compute_classes(tab):
    """Explore prefixes breadth first and group them into R_f classes.

    Essential prefixes are exactly the prefixes of sample words; every one of
    them is explored, plus each one-symbol extension. Past the first
    non-essential word everything is non-essential, so the error class is
    only expanded from its representative.
    """
    cs = ClassSystem(tab, [], {}, {})
    by_key = {}
    queue = deque([""])
    queued = {""}
    while queue:
        u = queue.popleft()
        prof = cs.profile(u)
        key = prof.key()
        if key not in by_key:
            info = ClassInfo(len(cs.classes), u, prof.essential, profile=prof)
            cs.classes.append(info)
            by_key[key] = info.index
            if not prof.essential:
                cs.error = info.index
        i = by_key[key]
        cs.class_of[u] = i
        cs.classes[i].members.append(u)
        if prof.essential or cs.classes[i].representative == u:
            for a in tab.alphabet:
                if u + a not in queued:
                    queued.add(u + a)
                    queue.append(u + a)

    for c in cs.classes:
        for a in tab.alphabet:
            cs.transitions[(c.index, a)] = by_key[cs.profile(c.representative + a).key()]

    n = cs.n
    for c in cs.classes:
        if len(c.representative) >= n:
            raise LemmaViolation("representative bound", "class %d has representative %r of length >= %d"
                                 % (c.index, c.representative, n))
        c.slice = [b for b in c.members if len(b) <= 2 * n]
        if c.essential:
            uniform_witness(cs, c.index)
    return cs


def check_right_invariance(cs):
    """(u, v, a) triples with u == v but u.a and v.a in different classes."""
    bad = []
    for c in cs.classes:
        rep = c.representative
        for a in cs.table.alphabet:
            target = cs.classify(rep + a)
            for u in c.members:
                if u == rep:
                    continue
                if cs.classify(u + a) != target:
                    bad.append((rep, u, a))
    return bad


def uniform_witness(cs, i):
    """One suffix function s_i serving every member of the slice A_i.

    The member whose witness has the largest representative-side factor is
    chosen; every other member's factor then extends to it by a correction
    b_beta, and the resulting witnesses are replayed.
    """
    tab = cs.table
    S = tab.structure
    c = cs.classes[i]
    if not c.essential:
        raise InvalidArgument("class %d is the error class" % i)
    alpha = c.representative
    rep_factor = cs.profile(alpha).factor
    for beta in c.slice:
        prof = cs.profile(beta)
        w = Witness(beta, alpha, prof.factor, rep_factor, prof.suffix_fn)
        if not w.replays(tab):
            raise LemmaViolation("witness", "no witness for %r == %r" % (beta, alpha))
        c.witnesses[beta] = w
    chosen = min(c.slice, key=lambda b: (-S.norm(c.witnesses[b].m_beta), len(b), b))
    c.chosen = chosen
    c.uniform_s = c.witnesses[chosen].s
    c.uniform_factor = c.witnesses[chosen].m_beta
    for beta in c.slice:
        w = c.witnesses[beta]
        try:
            b = S.residual(w.m_beta, c.uniform_factor)
        except NotAPrefixError:
            raise LemmaViolation("finite_case", "factor of %r does not extend to the chosen factor" % beta) from None
        c.corrections[beta] = b
        uw = Witness(beta, alpha, S.combine(w.m_alpha, b), c.uniform_factor, c.uniform_s)
        if not uw.replays(tab):
            raise LemmaViolation("finite_case", "uniform witness for %r does not replay" % beta)
        c.uniform_witnesses[beta] = uw
    return c.uniform_s, c.uniform_factor


# -- the norm graph -----------------------------------------------------------

@dataclass
class NormGraph:
    nodes: list
    arcs: list                   # (i, symbol, j, Fraction weight)
    anchors: dict = field(default_factory=dict)
    path_bound: int = None       # consider words z with |z| < path_bound
    potentials: dict = None      # i -> Potential

    def __post_init__(self):
        if self.path_bound is None:
            self.path_bound = max(len(self.nodes), 1)

    def out_arcs(self, i):
        return [arc for arc in self.arcs if arc[0] == i]

    def to_dot(self):
        lines = ["digraph G {"]
        for i in self.nodes:
            lines.append('  C%d [label="C%d"];' % (i, i))
        for i, a, j, w in self.arcs:
            lines.append('  C%d -> C%d [label="%s / %s"];' % (i, j, a, _frac(w)))
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Potential:
    source: int
    path: str
    weight: Fraction


def build_norm_graph(cs):
    S = cs.table.structure
    nodes = cs.essential
    anchors = {}
    for i in nodes:
        anchors[i] = min(cs.classes[i].uniform_s, key=_shortlex)
    arcs = []
    for i in nodes:
        s_i = cs.classes[i].uniform_s
        for a in cs.table.alphabet:
            j = cs.transitions[(i, a)]
            if j == cs.error:
                continue
            w_j = anchors[j]
            if a + w_j not in s_i:
                raise InternalConsistencyError(
                    "norm graph", "%r is outside the domain of s_%d" % (a + w_j, i))
            weight = S.norm(s_i[a + w_j]) - S.norm(cs.classes[j].uniform_s[w_j])
            arcs.append((i, a, j, Fraction(weight)))
    return NormGraph(nodes, arcs, anchors, path_bound=cs.n)


@dataclass
class CycleVerdict:
    ok: bool
    cycle: list = None   # arcs (i, a, j, w) of a negative cycle

    @property
    def weight(self):
        return sum((arc[3] for arc in self.cycle), Fraction(0)) if self.cycle else Fraction(0)


def assert_no_negative_cycles(G):
    """Bellman-Ford from a virtual source joined to every node by a 0 arc."""
    if not G.nodes:
        return CycleVerdict(True)
    dist = {v: Fraction(0) for v in G.nodes}
    pred = {v: None for v in G.nodes}
    last = None
    for _ in range(len(G.nodes)):
        last = None
        for arc in G.arcs:
            i, _, j, w = arc
            if dist[i] + w < dist[j]:
                dist[j] = dist[i] + w
                pred[j] = arc
                last = j
        if last is None:
            return CycleVerdict(True)
    # still relaxing after |V| rounds: walk back into the cycle
    v = last
    for _ in range(len(G.nodes)):
        v = pred[v][0]
    cycle = []
    u = v
    while True:
        arc = pred[u]
        cycle.append(arc)
        u = arc[0]
        if u == v:
            break
    cycle.reverse()
    return CycleVerdict(False, cycle)


def compute_argmin_potentials(G):
    """For every node i, the (source j, word z) minimising the path weight
    into i over |z| < path_bound. Ties: lighter, then shorter z, then
    lexicographically smaller z, then smaller j.

    Paths are grown one length at a time keeping only the best path of each
    exact length per end node; appending a symbol preserves the tie order
    among equal-length words, so nothing optimal is discarded.
    """
    best = {i: (Fraction(0), 0, "", i) for i in G.nodes}
    layer = {i: (Fraction(0), "", i) for i in G.nodes}
    for k in range(1, G.path_bound):
        nxt = {}
        for i, a, j, w in G.arcs:
            if i not in layer:
                continue
            W, z, src = layer[i]
            cand = (W + w, z + a, src)
            if j not in nxt or cand < nxt[j]:
                nxt[j] = cand
        if not nxt:
            break
        for j, (W, z, src) in nxt.items():
            key = (W, k, z, src)
            if key < best[j]:
                best[j] = key
        layer = nxt
    G.potentials = {i: Potential(src, z, W) for i, (W, _, z, src) in best.items()}
    return G.potentials


def walk(G, i, z):
    """(end node, accumulated weight) following z from i, or (None, None)."""
    table = {(a_i, a): (j, w) for a_i, a, j, w in G.arcs}
    total = Fraction(0)
    for a in z:
        if (i, a) not in table:
            return None, None
        i, w = table[(i, a)]
        total += w
    return i, total


def simple_paths(G, i, limit=None):
    """All (z, end, weight) for words z with |z| < path_bound starting at i."""
    limit = G.path_bound if limit is None else limit
    out_arcs = {}
    for arc in G.arcs:
        out_arcs.setdefault(arc[0], []).append(arc)
    stack = [("", i, Fraction(0))]
    while stack:
        z, v, W = stack.pop()
        yield z, v, W
        if len(z) + 1 >= limit:
            continue
        for _, a, j, w in reversed(out_arcs.get(v, [])):
            stack.append((z + a, j, W + w))


# -- shifted suffix functions and the machine ----------------------------------

@dataclass
class HatSystem:
    hat_s: dict          # i -> {w: element}
    shifts: dict         # i -> b_i with s_i(w) = b_i hat_s_i(w)
    arc_elements: dict   # (i, a) -> (j, m_iaj)
    hat_witnesses: dict  # i -> {beta: Witness}
    initial_output: object


def build_hat_s(cs, G, potentials=None):
    tab = cs.table
    S = tab.structure
    potentials = potentials or G.potentials
    if potentials is None:
        potentials = compute_argmin_potentials(G)
    hat, shifts, hat_witnesses = {}, {}, {}
    for i in cs.essential:
        c = cs.classes[i]
        pot = potentials[i]
        src = cs.classes[pot.source]
        s_src = src.uniform_s
        h = {}
        for w in c.uniform_s:
            if pot.path + w not in s_src:
                raise LemmaViolation("Nerode-Myhill lemma", "%r not in dom s_%d" % (pot.path + w, pot.source))
            h[w] = s_src[pot.path + w]
            if S.norm(h[w]) > S.norm(c.uniform_s[w]):
                raise LemmaViolation("Nerode-Myhill lemma", "shifted suffix function is heavier at %r" % w)
        hat[i] = h
        beta = src.representative + pot.path
        if cs.class_of.get(beta) != i or len(beta) > 2 * cs.n:
            raise LemmaViolation("Nerode-Myhill lemma", "%r is not in the slice of class %d" % (beta, i))
        m_i = c.uniform_witnesses[beta].m_alpha
        try:
            b_i = S.residual(m_i, src.uniform_factor)
        except NotAPrefixError:
            raise LemmaViolation("right cancellation", "cannot factor s_%d through the shifted function" % i) from None
        for w in c.uniform_s:
            if c.uniform_s[w] != S.combine(b_i, h[w]):
                raise LemmaViolation("right cancellation", "s_%d(%r) != b_%d hat_s_%d(%r)" % (i, w, i, i, w))
        shifts[i] = b_i
        hat_witnesses[i] = {}
        for beta, uw in c.uniform_witnesses.items():
            hw = Witness(beta, c.representative, S.combine(uw.m_alpha, b_i),
                         S.combine(uw.m_beta, b_i), h)
            if not hw.replays(tab):
                raise LemmaViolation("Nerode-Myhill lemma", "shifted witness for %r does not replay" % beta)
            hat_witnesses[i][beta] = hw

    arc_elements = {}
    for i in cs.essential:
        c = cs.classes[i]
        left = S.combine(c.uniform_factor, shifts[i])
        for a in tab.alphabet:
            j = cs.transitions[(i, a)]
            if j == cs.error:
                continue
            beta = c.representative + a
            m = hat_witnesses[j][beta].m_alpha
            try:
                m_iaj = S.residual(left, m)
            except NotAPrefixError:
                raise LemmaViolation("Nerode-Myhill lemma, arc elements",
                                     "no arc element for (%d, %s, %d)" % (i, a, j)) from None
            for w, value in hat[j].items():
                if hat[i].get(a + w) != S.combine(m_iaj, value):
                    raise LemmaViolation("Nerode-Myhill lemma, arc elements",
                                         "hat_s_%d(%r) != m hat_s_%d(%r)" % (i, a + w, j, w))
            arc_elements[(i, a)] = (j, m_iaj)

    initial_output = None
    start = cs.class_of[""]
    if start != cs.error:
        initial_output = hat_witnesses[start][""].m_alpha
    return HatSystem(hat, shifts, arc_elements, hat_witnesses, initial_output)


def assemble_transducer(cs, hs):
    tab = cs.table
    S = tab.structure
    if cs.class_of[""] == cs.error:
        return empty_transducer(S, tab.alphabet)
    order = cs.essential
    state = {i: k for k, i in enumerate(order)}
    delta, lam = {}, {}
    for (i, a), (j, m) in hs.arc_elements.items():
        delta[(state[i], a)] = state[j]
        lam[(state[i], a)] = m
    finals = frozenset(state[i] for i in order if "" in hs.hat_s[i])
    psi = {state[i]: hs.hat_s[i][""] for i in order if "" in hs.hat_s[i]}
    T = Transducer(S, tab.alphabet, len(order), state[cs.class_of[""]], finals, delta, lam,
                   hs.initial_output, psi)
    problems = validate(T)
    if problems:
        raise InternalConsistencyError("assembly", "; ".join(problems))
    return T


# -- verification ---------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexample: object = None
    checked: int = 0


def lex_min_holds(S, witness):
    """For a witness of alpha == alpha.beta: ||m1|| <= ||m2|| and m1 <=_M m2."""
    return S.norm(witness.m_alpha) <= S.norm(witness.m_beta) and S.leq(witness.m_alpha, witness.m_beta)


def check_output_equals_table(tab, T):
    try:
        lang = language(T)
    except (InvalidArgument, ValueError) as exc:
        return Check("a", False, "machine domain is not finite: %s" % exc)
    words = sorted(set(lang) | set(tab.entries), key=_shortlex)
    for w in words:
        if lang.get(w) != tab.get(w):
            return Check("a", False, "output differs from the table", w, len(words))
    return Check("a", True, "O_T equals the table on all %d words" % len(words), checked=len(words))


def check_state_counts(T_replica, T_minimized):
    ok = T_replica.n_states == T_minimized.n_states
    return Check("b", ok, "replica %d states, minimizer %d states" % (T_replica.n_states, T_minimized.n_states),
                 checked=1)


def check_lex_min(cs):
    S = cs.table.structure
    checked = 0
    for u, i in cs.class_of.items():
        if not cs.profile(u).essential:
            continue
        for v in cs.classes[i].members:
            if v == u or not v.startswith(u):
                continue
            checked += 1
            pu, pv = cs.profile(u), cs.profile(v)
            w = Witness(u, v, pu.factor, pv.factor, pu.suffix_fn)
            if not w.replays(cs.table) or not lex_min_holds(S, w):
                return Check("c", False, "lex_min fails for %r == %r" % (u, v), (u, v), checked)
    detail = "%d pumped pair(s) checked" % checked
    if not checked:
        detail += " (none exist: a finite function has no essential pumps)"
    return Check("c", True, detail, checked=checked)


def check_path_weights(cs, G):
    """lambda_R*(C_i, z) = ||s_i(z w)|| - ||s_j(w)|| on every path |z| < n."""
    S = cs.table.structure
    checked = 0
    for i in G.nodes:
        s_i = cs.classes[i].uniform_s
        for z, j, W in simple_paths(G, i):
            s_j = cs.classes[j].uniform_s
            for w in s_j:
                checked += 1
                if z + w not in s_i or W != S.norm(s_i[z + w]) - S.norm(s_j[w]):
                    return Check("d", False, "path weight identity fails on C%d, z=%r, w=%r" % (i, z, w), (i, z, w), checked)
    return Check("d", True, "%d (class, path, suffix) triples checked" % checked, checked=checked)


@dataclass
class Replica:
    table: object
    classes: ClassSystem
    graph: NormGraph
    cycle: CycleVerdict
    hat: HatSystem
    transducer: Transducer
    minimized: Transducer
    checks: list

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return replica_report(self)

    def to_json(self):
        return json.dumps(replica_report(self), indent=2, sort_keys=True) + "\n"

    def to_text(self):
        return format_replica_text(self)


def verify_replica(tab, T_replica, T_minimized, cs=None, G=None):
    checks = [check_output_equals_table(tab, T_replica), check_state_counts(T_replica, T_minimized)]
    if cs is None:
        cs = compute_classes(tab)
    checks.append(check_lex_min(cs))
    if G is None:
        G = build_norm_graph(cs)
    checks.append(check_path_weights(cs, G))
    return checks


def replicate(tab):
    """Run the whole construction and all checks. Raises LemmaViolation if a
    proof step cannot be carried out."""
    cs = compute_classes(tab)
    G = build_norm_graph(cs)
    cycle = assert_no_negative_cycles(G)
    if not cycle.ok:
        raise LemmaViolation("no negative cycles", "negative cycle %s" % (cycle.cycle,))
    compute_argmin_potentials(G)
    hs = build_hat_s(cs, G)
    T = assemble_transducer(cs, hs)
    if tab.entries:
        M = minimize(from_table(tab))
    else:
        M = empty_transducer(tab.structure, tab.alphabet)
    checks = verify_replica(tab, T, M, cs, G)
    checks.append(Check("no_negative_cycle", cycle.ok, "no negative cycle in the norm graph", checked=len(G.arcs)))
    bad = check_right_invariance(cs)
    checks.append(Check("right_invariance", not bad,
                        "%d violation(s)" % len(bad), bad[0] if bad else None, checked=len(cs.class_of)))
    return Replica(tab, cs, G, cycle, hs, T, M, checks)


# -- reports --------------------------------------------------------------------

def _frac(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _word(w):
    return w if w else "ε"


def replica_report(r):
    S = r.table.structure
    cs, G = r.classes, r.graph
    fmt = lambda x: None if x is None else format_element(S, x)
    classes = []
    for c in cs.classes:
        entry = {
            "index": c.index,
            "representative": c.representative,
            "essential": c.essential,
            "explored_members": len(c.members),
            "slice_size": len(c.slice) if c.essential else None,
            "anchor": G.anchors.get(c.index),
            "uniform_factor": fmt(c.uniform_factor),
            "chosen_member": c.chosen,
            "potential": None,
        }
        if G.potentials and c.index in G.potentials:
            p = G.potentials[c.index]
            entry["potential"] = {"source": p.source, "path": p.path, "weight": _frac(p.weight)}
        classes.append(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "structure": S.kind,
        "alphabet": list(r.table.alphabet),
        "entries": len(r.table),
        "index": cs.n,
        "essential_classes": len(cs.essential),
        "error_class": cs.error is not None,
        "classes": classes,
        "arcs": [{"from": i, "symbol": a, "to": j, "weight": _frac(w)} for i, a, j, w in G.arcs],
        "negative_cycle": None if r.cycle.ok else [
            {"from": i, "symbol": a, "to": j, "weight": _frac(w)} for i, a, j, w in r.cycle.cycle],
        "transducer": {"states": r.transducer.n_states, "iota": fmt(r.transducer.iota),
                       "trivial": not r.table.entries},
        "minimized_states": r.minimized.n_states,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail, "checked": c.checked}
                   for c in r.checks],
        "ok": r.ok,
    }


def format_replica_text(r):
    S = r.table.structure
    cs, G = r.classes, r.graph
    out = ["structure %s, %d table entries, alphabet {%s}" % (S.kind, len(r.table), " ".join(r.table.alphabet)),
           "index %d: %s" % (cs.n, cs.summary())]
    if not r.table.entries:
        out.append("empty domain: the trivial one-state machine represents f")
    out.append("classes:")
    for c in cs.classes:
        if not c.essential:
            out.append("  C%d  rep %s  error class (%d explored)" % (c.index, _word(c.representative), len(c.members)))
            continue
        pot = G.potentials[c.index] if G.potentials else None
        out.append("  C%d  rep %s  |A|=%d  anchor %s  m''=%s  chosen %s  potential (C%d, %s, %s)" % (
            c.index, _word(c.representative), len(c.slice), _word(G.anchors[c.index]),
            format_element(S, c.uniform_factor), _word(c.chosen),
            pot.source, _word(pot.path), _frac(pot.weight)))
    out.append("norm graph arcs:")
    for i, a, j, w in G.arcs:
        out.append("  C%d -%s-> C%d  weight %s" % (i, a, j, _frac(w)))
    out.append("negative cycle: %s" % ("none" if r.cycle.ok else r.cycle.cycle))
    out.append("machine: %d states, iota %s; minimizer: %d states" % (
        r.transducer.n_states, format_element(S, r.transducer.iota), r.minimized.n_states))
    out.append("checks:")
    for c in r.checks:
        out.append("  (%s) %s  %s" % (c.name, "pass" if c.passed else "FAIL", c.detail))
    out.append("result: %s" % ("all checks pass" if r.ok else "FAILED"))
    return "\n".join(out) + "\n"
