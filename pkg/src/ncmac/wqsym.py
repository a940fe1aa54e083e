"""Word quasi-symmetric functions on packed words, and quasi-symmetric
functions on compositions.

Elements are kept in the monomial basis M indexed by packed words.  The
second basis used here is Phi, indexed by packed words of the form min(s)
for a permutation s; its M expansion collects all packed words with a given
standardization:

    Phi_min(s) = sum over packed u with std(u) = s of M_u.

The commutative image sends M_u to the monomial quasi-symmetric function of
the evaluation of u, hence Phi_min(s) to the fundamental indexed by the
descent composition of the inverse of s.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ncmac.perms import (
    descent_composition,
    evaluation,
    inverse,
    min_word,
    packed_words,
    standardize,
)
from ncmac.rings import LaurentPoly
from ncmac.symfunc import SymFunc


def _scalar_zero(c):
    if isinstance(c, LaurentPoly):
        return c.is_zero()
    return not c


def blocks_of(word):
    """Set composition of a packed word: block j holds positions of letter j."""
    r = max(word) if word else 0
    return [frozenset(i for i, x in enumerate(word) if x == j + 1)
            for j in range(r)]


def word_of_blocks(blocks, n):
    out = [0] * n
    for j, block in enumerate(blocks):
        for i in block:
            out[i] = j + 1
    return tuple(out)


def coarsenings(word):
    """All packed words obtained by merging adjacent blocks (self included)."""
    blocks = blocks_of(word)
    r = len(blocks)
    n = len(word)
    out = []
    # compositions of r pick which consecutive runs of blocks to merge
    for cuts in itertools.product([0, 1], repeat=r - 1):
        merged = []
        current = set(blocks[0]) if blocks else set()
        for i, cut in enumerate(cuts):
            if cut:
                merged.append(frozenset(current))
                current = set(blocks[i + 1])
            else:
                current |= blocks[i + 1]
        if blocks:
            merged.append(frozenset(current))
        out.append(word_of_blocks(merged, n))
    if not blocks:
        out.append(())
    return out


class WQ:
    """An element of WQSym in the M basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for u, c in coeffs.items():
                if not _scalar_zero(c):
                    self.coeffs[tuple(u)] = c

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def monomial(cls, u, c=1):
        return cls({tuple(u): c})

    @classmethod
    def from_phi(cls, sigma_coeffs):
        """Build from a Phi expansion given as {permutation: coefficient}."""
        out = {}
        by_n = {}
        for sigma, c in sigma_coeffs.items():
            by_n.setdefault(len(sigma), {})[tuple(sigma)] = c
        for n, table in by_n.items():
            for u in packed_words(n):
                c = table.get(standardize(u))
                if c is not None and not _scalar_zero(c):
                    out[u] = out.get(u, 0) + c
        return cls(out)

    def coefficient(self, u):
        return self.coeffs.get(tuple(u), 0)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for u, c in other.coeffs.items():
            out[u] = out.get(u, 0) + c
        return WQ(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return WQ({u: v * c for u, v in self.coeffs.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WQ):
            return NotImplemented
        return (self - other).is_zero()

    def omega(self):
        """M_u goes to (-1)^(n-max u) times the sum of its coarsenings."""
        out = {}
        for u, c in self.coeffs.items():
            sign = (-1) ** (len(u) - (max(u) if u else 0))
            for v in coarsenings(u):
                out[v] = out.get(v, 0) + sign * c
        return WQ(out)

    def to_phi(self):
        """Phi expansion {permutation: coefficient}; fails if not constant on
        standardization classes."""
        classes = {}
        for u, c in self.coeffs.items():
            classes.setdefault(standardize(u), {})[u] = c
        out = {}
        for sigma, present in classes.items():
            n = len(sigma)
            members = [u for u in packed_words(n) if standardize(u) == sigma]
            ref = next(iter(present.values()))
            for u in members:
                if not _coeff_eq(present.get(u, 0), ref):
                    raise ValueError("not in the span of the Phi basis")
            out[sigma] = ref
        return out

    def commutative_image(self):
        """Image in QSym (monomial basis on compositions)."""
        out = {}
        for u, c in self.coeffs.items():
            alpha = evaluation(u)
            out[alpha] = out.get(alpha, 0) + c
        return QS(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for u in sorted(self.coeffs):
            bits.append("(%s)*M[%s]" % (self.coeffs[u], "".join(map(str, u))))
        return " + ".join(bits)

    __repr__ = __str__


def _coeff_eq(a, b):
    return _scalar_zero(a - b)


def phi_str(sigma_coeffs):
    """Readable Phi expansion, indexed by the min word of each permutation."""
    bits = []
    for sigma in sorted(sigma_coeffs):
        c = sigma_coeffs[sigma]
        if _scalar_zero(c):
            continue
        word = "".join(map(str, min_word(sigma)))
        bits.append("(%s)*Phi[%s]" % (c, word))
    return " + ".join(bits) if bits else "0"


# ---- quasi-symmetric functions ----

def refinements(alpha):
    """Compositions refining alpha (splitting each part)."""
    def split(k):
        if k == 0:
            yield ()
            return
        for first in range(1, k + 1):
            for rest in split(k - first):
                yield (first,) + rest
    pools = [list(split(p)) for p in alpha]
    for combo in itertools.product(*pools):
        yield tuple(x for beta in combo for x in beta)


class QS:
    """A quasi-symmetric function in the monomial basis on compositions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for a, c in coeffs.items():
                if not _scalar_zero(c):
                    self.coeffs[tuple(a)] = c

    @classmethod
    def monomial(cls, alpha, c=1):
        return cls({tuple(alpha): c})

    @classmethod
    def fundamental(cls, alpha, c=1):
        out = {}
        for beta in refinements(tuple(alpha)):
            out[beta] = out.get(beta, 0) + c
        return cls(out)

    def coefficient(self, alpha):
        return self.coeffs.get(tuple(alpha), 0)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return QS(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return QS({a: v * c for a, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, QS):
            return NotImplemented
        return (self - other).is_zero()

    def is_symmetric(self):
        try:
            self.to_sym()
            return True
        except ValueError:
            return False

    def to_sym(self):
        """As a symmetric function in the m basis; fails if not symmetric."""
        out = {}
        seen = {}
        for alpha, c in self.coeffs.items():
            lam = tuple(sorted(alpha, reverse=True))
            if lam in seen:
                if not _coeff_eq(seen[lam], c):
                    raise ValueError("not symmetric")
            else:
                seen[lam] = c
                out[lam] = c
        # every rearrangement of each partition must actually be present
        for lam in out:
            count = len(set(itertools.permutations(lam)))
            present = sum(1 for alpha in self.coeffs
                          if tuple(sorted(alpha, reverse=True)) == lam)
            if count != present:
                raise ValueError("not symmetric")
        return SymFunc("m", out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for a in sorted(self.coeffs):
            bits.append("(%s)*M(%s)" % (self.coeffs[a], ",".join(map(str, a))))
        return " + ".join(bits)

    __repr__ = __str__


def fundamental_image(sigma_coeffs):
    """Commutative image of a Phi expansion: sum of fundamentals F_C(s^-1)."""
    out = QS({})
    for sigma, c in sigma_coeffs.items():
        alpha = descent_composition(inverse(sigma))
        out = out + QS.fundamental(alpha, c)
    return out
