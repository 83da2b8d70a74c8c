"""Line-oriented file formats for transducers and sample tables.

Transducer::

    STRUCTURE words
    ALPHABET a b c
    STATES 3
    INITIAL 0 IOTA "x"
    FINAL 2 PSI ""
    TRANS 0 a 1 "y"

Sample table: one ``word<TAB>element`` entry per line, ``#`` starts a
comment line. A word may be written raw or double quoted (``""`` is the
empty word).
"""

from .algebra import get_structure
from .builder import SampleTable
from .errors import InvalidArgument, ParseError
from .fst import Transducer, validate
from .literals import format_element, parse_element, parse_input_word, quote_word, tokenize


def _element(S, token, lineno):
    try:
        return parse_element(S, token)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def _int(token, lineno, what="state"):
    if not token.isdigit():
        raise ParseError("expected a %s number, got %r" % (what, token), lineno)
    return int(token)


def loads_transducer(text):
    S = None
    alphabet = None
    n_states = None
    initial = iota = None
    finals, psi, delta, lam = set(), {}, {}, {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = tokenize(line, lineno)
        head, args = tokens[0], tokens[1:]
        if head != "STRUCTURE" and S is None and head in ("INITIAL", "FINAL", "TRANS"):
            raise ParseError("%s before STRUCTURE" % head, lineno)
        if head == "STRUCTURE":
            if len(args) != 1:
                raise ParseError("STRUCTURE takes one argument", lineno)
            try:
                S = get_structure(args[0])
            except InvalidArgument as exc:
                raise ParseError(str(exc), lineno) from None
        elif head == "ALPHABET":
            for a in args:
                if len(a) != 1:
                    raise ParseError("alphabet symbols must be single characters, got %r" % a, lineno)
            if len(set(args)) != len(args):
                raise ParseError("duplicate alphabet symbol", lineno)
            alphabet = tuple(args)
        elif head == "STATES":
            if len(args) != 1:
                raise ParseError("STATES takes one argument", lineno)
            n_states = _int(args[0], lineno, "state count")
        elif head == "INITIAL":
            if len(args) != 3 or args[1] != "IOTA":
                raise ParseError("expected INITIAL <state> IOTA <element>", lineno)
            initial = _int(args[0], lineno)
            iota = _element(S, args[2], lineno)
        elif head == "FINAL":
            if len(args) != 3 or args[1] != "PSI":
                raise ParseError("expected FINAL <state> PSI <element>", lineno)
            q = _int(args[0], lineno)
            if q in finals:
                raise ParseError("state %d declared final twice" % q, lineno)
            finals.add(q)
            psi[q] = _element(S, args[2], lineno)
        elif head == "TRANS":
            if len(args) != 4:
                raise ParseError("expected TRANS <state> <symbol> <state> <element>", lineno)
            q, a, t = _int(args[0], lineno), args[1], _int(args[2], lineno)
            if (q, a) in delta:
                raise ParseError("second transition for (%d, %s): machine must be deterministic" % (q, a), lineno)
            delta[(q, a)] = t
            lam[(q, a)] = _element(S, args[3], lineno)
        else:
            raise ParseError("unknown directive %r" % head, lineno)
    for name, value in (("STRUCTURE", S), ("ALPHABET", alphabet), ("STATES", n_states), ("INITIAL", initial)):
        if value is None:
            raise ParseError("missing %s line" % name)
    T = Transducer(S, alphabet, n_states, initial, frozenset(finals), delta, lam, iota, psi)
    problems = validate(T)
    if problems:
        raise ParseError("invalid transducer: " + "; ".join(problems))
    return T


def dumps_transducer(T):
    S = T.structure
    lines = [
        "STRUCTURE %s" % S.kind,
        " ".join(["ALPHABET"] + list(T.alphabet)),
        "STATES %d" % T.n_states,
        "INITIAL %d IOTA %s" % (T.initial, format_element(S, T.iota)),
    ]
    for q in sorted(T.finals):
        lines.append("FINAL %d PSI %s" % (q, format_element(S, T.psi[q])))
    for q, a, t, m in T.arcs():
        lines.append("TRANS %d %s %d %s" % (q, a, t, format_element(S, m)))
    return "\n".join(lines) + "\n"


def load_transducer(path):
    with open(path, encoding="utf-8") as fh:
        return loads_transducer(fh.read())


def save_transducer(T, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_transducer(T))


def loads_table(text, structure, alphabet=None):
    S = get_structure(structure) if isinstance(structure, str) else structure
    entries = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise ParseError("expected <word> TAB <element>", lineno)
        raw_word, literal = line.split("\t", 1)
        try:
            word = parse_input_word(raw_word.strip())
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if word in entries:
            raise ParseError("duplicate word %r" % word, lineno)
        entries[word] = _element(S, literal, lineno)
    try:
        return SampleTable(S, entries, alphabet)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def dumps_table(tab):
    S = tab.structure
    lines = []
    for w, value in tab.items():
        word = w if w and w.isprintable() and not w.startswith(("#", '"')) and "\t" not in w \
            else quote_word(w.encode("utf-8"))
        lines.append("%s\t%s" % (word, format_element(S, value)))
    return "\n".join(lines) + ("\n" if lines else "")


def load_table(path, structure, alphabet=None):
    with open(path, encoding="utf-8") as fh:
        return loads_table(fh.read(), structure, alphabet)
