"""Sequentiable structures: monoids with a prefix order, a binary meet and
an additive norm.

Four instances are provided:

* ``WORDS``    free monoid over bytes; concatenation, longest common prefix,
               norm = length.
* ``RATIONAL`` non-negative rationals (``fractions.Fraction``) under addition;
               meet = min, norm = value.
* ``NATURAL``  non-negative integers under addition.
* ``PRODUCT``  pairs ``(bytes, Fraction)`` with component-wise operations.
               It is pre-sequentiable but violates the monotone disjointness
               law, which makes it a useful negative control for the checker.

Elements are plain immutable Python values, so they hash and compare exactly.
"""

import itertools
from fractions import Fraction

from .errors import InvalidArgument, NotAPrefixError


class Structure:
    """Primitive laws of one sequentiable structure instance.

    Subclasses implement ``contains``, ``combine``, ``identity``, ``meet``,
    ``norm``, ``leq`` and ``residual``. The methods do no membership checking;
    the module level ``leq``/``meet``/``left_residual`` functions do.
    """

    kind = None
    # the three "real" instances satisfy every law; product does not
    sequentiable = True

    def contains(self, a):
        raise NotImplementedError

    def combine(self, a, b):
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def meet(self, a, b):
        raise NotImplementedError

    def norm(self, a):
        raise NotImplementedError

    def equal(self, a, b):
        return a == b

    def leq(self, a, b):
        raise NotImplementedError

    def residual(self, a, b):
        """The unique c with combine(a, c) == b; NotAPrefixError otherwise."""
        raise NotImplementedError

    def is_identity(self, a):
        return a == self.identity()

    def fold_meet(self, items):
        """Left fold of the binary meet; None for an empty family."""
        acc = None
        for x in items:
            acc = x if acc is None else self.meet(acc, x)
        return acc

    def combine_all(self, items):
        acc = self.identity()
        for x in items:
            acc = self.combine(acc, x)
        return acc

    def sample(self, rng):
        """A random element drawn from ``rng`` (a ``random.Random``)."""
        raise NotImplementedError

    def sweep(self):
        """A small fixed element set used for the exhaustive axiom sweep."""
        raise NotImplementedError

    def __repr__(self):
        return "<Structure %s>" % self.kind

    def __reduce__(self):
        return (get_structure, (self.kind,))


_ZERO = Fraction(0)


def _lcp(a, b):
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    return a[:i]


class Words(Structure):
    kind = "words"
    sample_letters = b"ab"

    def contains(self, a):
        return isinstance(a, bytes)

    def combine(self, a, b):
        return a + b

    def identity(self):
        return b""

    def is_identity(self, a):
        return not a

    def meet(self, a, b):
        return _lcp(a, b)

    def norm(self, a):
        return Fraction(len(a))

    def leq(self, a, b):
        return b.startswith(a)

    def residual(self, a, b):
        if not b.startswith(a):
            raise NotAPrefixError("%r is not a prefix of %r" % (a, b))
        return b[len(a):]

    def sample(self, rng):
        n = rng.choice((0, 1, 1, 2, 2, 3, 4))
        return bytes(rng.choice(self.sample_letters) for _ in range(n))

    def sweep(self, max_len=3, letters=b"ab"):
        out = []
        for n in range(max_len + 1):
            out.extend(bytes(t) for t in itertools.product(letters, repeat=n))
        return out


class Rational(Structure):
    kind = "rational"

    def contains(self, a):
        return isinstance(a, (Fraction, int)) and not isinstance(a, bool) and a >= 0

    def combine(self, a, b):
        r = a + b
        return r if type(r) is Fraction else Fraction(r)

    def identity(self):
        return _ZERO

    def is_identity(self, a):
        return a == 0

    def meet(self, a, b):
        r = a if a <= b else b
        return r if type(r) is Fraction else Fraction(r)

    def norm(self, a):
        return a if type(a) is Fraction else Fraction(a)

    def leq(self, a, b):
        return a <= b

    def residual(self, a, b):
        if a > b:
            raise NotAPrefixError("%s exceeds %s" % (a, b))
        r = b - a
        return r if type(r) is Fraction else Fraction(r)

    def sample(self, rng):
        return Fraction(rng.randint(0, 12), rng.randint(1, 6))

    def sweep(self, bound=6):
        values = {Fraction(p, q) for p in range(bound + 1) for q in range(1, bound + 1)}
        return sorted(values)


class Natural(Structure):
    kind = "natural"

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and a >= 0

    def combine(self, a, b):
        return a + b

    def identity(self):
        return 0

    def is_identity(self, a):
        return a == 0

    def meet(self, a, b):
        return min(a, b)

    def norm(self, a):
        return Fraction(a)

    def leq(self, a, b):
        return a <= b

    def residual(self, a, b):
        if a > b:
            raise NotAPrefixError("%d exceeds %d" % (a, b))
        return b - a

    def sample(self, rng):
        return rng.randint(0, 12)

    def sweep(self, bound=6):
        return list(range(bound + 1))


class Product(Structure):
    """Words x rationals, component-wise. Fails the disjointness law:
    ("x", 0) and ("", 1) have trivial meet, yet their extensions
    ("x", 1) and ("x", 1) do not."""

    kind = "product"
    sequentiable = False

    def __init__(self):
        self.left = Words()
        self.right = Rational()

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == 2
                and self.left.contains(a[0]) and self.right.contains(a[1]))

    def combine(self, a, b):
        return (a[0] + b[0], Fraction(a[1]) + b[1])

    def identity(self):
        return (b"", Fraction(0))

    def is_identity(self, a):
        return not a[0] and a[1] == 0

    def meet(self, a, b):
        return (_lcp(a[0], b[0]), Fraction(min(a[1], b[1])))

    def norm(self, a):
        return len(a[0]) + Fraction(a[1])

    def leq(self, a, b):
        return b[0].startswith(a[0]) and a[1] <= b[1]

    def residual(self, a, b):
        if not self.leq(a, b):
            raise NotAPrefixError("%r is not a prefix of %r" % (a, b))
        return (b[0][len(a[0]):], Fraction(b[1]) - a[1])

    def sample(self, rng):
        return (self.left.sample(rng), Fraction(rng.randint(0, 4), rng.randint(1, 2)))

    def sweep(self):
        words = [b"", b"x", b"y"]
        values = [Fraction(0), Fraction(1, 2), Fraction(1)]
        return [(w, v) for w in words for v in values]


WORDS = Words()
RATIONAL = Rational()
NATURAL = Natural()
PRODUCT = Product()

STRUCTURES = {s.kind: s for s in (WORDS, RATIONAL, NATURAL, PRODUCT)}


def get_structure(kind):
    try:
        return STRUCTURES[kind]
    except KeyError:
        raise InvalidArgument("unknown structure %r (expected one of %s)"
                              % (kind, ", ".join(STRUCTURES))) from None


def _check(S, *elements):
    for x in elements:
        if not S.contains(x):
            raise InvalidArgument("%r is not an element of %s" % (x, S.kind))


def leq(S, a, b):
    """a <=_M b: some c satisfies a o c = b."""
    _check(S, a, b)
    return S.leq(a, b)


def meet(S, a, b):
    _check(S, a, b)
    return S.meet(a, b)


def left_residual(S, a, b):
    """The unique c with a o c = b. Raises NotAPrefixError if a is not <=_M b."""
    _check(S, a, b)
    return S.residual(a, b)


def combine(S, a, b):
    _check(S, a, b)
    return S.combine(a, b)
