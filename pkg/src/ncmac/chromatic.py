"""Dyck graphs and chromatic objects: noncommutative chromatic functions,
alphabet-transform coefficients, acyclic-orientation expansions, the
(q-1)-product identity, and the twisted LLT sums used by the Macdonald
constructions.
"""

from __future__ import annotations

import itertools

from ncmac.perms import (
    evaluation,
    min_word,
    pack,
    packed_words,
    permutations,
    standardize,
)
from ncmac.rings import LaurentPoly, NonExactDivision, RatFunc
from ncmac.symfunc import SymFunc
from ncmac.wqsym import QS, WQ, fundamental_image


class NotInStaircase(ValueError):
    pass


class DyckGraph:
    """A unit-interval graph given by a nondecreasing bound function h."""

    __slots__ = ("n", "h")

    def __init__(self, h):
        h = tuple(h)
        n = len(h)
        for i, x in enumerate(h):
            if not (i + 1 <= x <= n):
                raise ValueError("h out of range at %d" % (i + 1))
            if i and x < h[i - 1]:
                raise ValueError("h not nondecreasing")
        self.n = n
        self.h = h

    @classmethod
    def from_edges(cls, n, edges):
        """Build from an edge set, which must be unit-interval closed."""
        edges = {tuple(sorted(e)) for e in edges}
        h = []
        for i in range(1, n + 1):
            top = i
            for j in range(i + 1, n + 1):
                if (i, j) in edges:
                    top = j
            h.append(top)
        g = cls(h)
        if g.edge_set() != edges:
            raise ValueError("edge set is not unit-interval closed")
        return g

    @classmethod
    def from_code(cls, code):
        """h(i) = code_i + i."""
        return cls(tuple(c + i + 1 for i, c in enumerate(code)))

    @classmethod
    def from_partition(cls, lam, n):
        """Partition inside the staircase (n-1,...,1); edges are the empty
        cells above the diagonal, i.e. the code counts them per column."""
        lam = tuple(lam)
        if len(lam) > n - 1 if n > 0 else lam:
            raise NotInStaircase("partition too long")
        for i, part in enumerate(lam):
            if part > n - 1 - i:
                raise NotInStaircase("row %d exceeds the staircase" % (i + 1))
        # column i (1-based) has n-i cells above the diagonal; the partition
        # fills them from the left rows, leaving code_i empty cells
        rows = list(lam) + [0] * (n - len(lam))
        code = []
        for i in range(1, n + 1):
            filled = sum(1 for r in range(n - i) if rows[r] >= i)
            code.append((n - i) - filled)
        return cls.from_code(code)

    def code(self):
        return tuple(x - i - 1 for i, x in enumerate(self.h))

    def partition(self):
        """Inverse of from_partition."""
        n = self.n
        code = self.code()
        heights = [n - i - 1 - code[i] for i in range(n)]
        lam = []
        for r in range(n - 1):
            row = sum(1 for i in range(n - 1 - r) if heights[i] >= r + 1)
            if row:
                lam.append(row)
        lam.sort(reverse=True)
        return tuple(lam)

    def edges(self):
        return [(i, j) for i in range(1, self.n + 1)
                for j in range(i + 1, self.h[i - 1] + 1)]

    def edge_set(self):
        return set(self.edges())

    def a_counts(self):
        """a_j = number of edges (i, j) with i < j."""
        out = [0] * self.n
        for i, j in self.edges():
            out[j - 1] += 1
        return tuple(out)

    def induced(self, positions):
        """Induced subgraph on sorted 1-based positions, relabeled 1..k."""
        positions = sorted(positions)
        h = []
        for a, i in enumerate(positions):
            top = a + 1
            for b in range(a + 1, len(positions)):
                if positions[b] <= self.h[i - 1]:
                    top = b + 1
            h.append(top)
        return DyckGraph(h)

    def __eq__(self, other):
        return isinstance(other, DyckGraph) and self.h == other.h

    def __hash__(self):
        return hash(self.h)

    def __repr__(self):
        return "DyckGraph(h=%s)" % (self.h,)


# ---- coloring statistics ----

def asc(edges, w):
    return sum(1 for i, j in edges if w[i - 1] < w[j - 1])

def des(edges, w):
    return sum(1 for i, j in edges if w[i - 1] > w[j - 1])

def wasc(edges, w):
    return sum(1 for i, j in edges if w[i - 1] <= w[j - 1])

def is_proper(edges, w):
    return all(w[i - 1] != w[j - 1] for i, j in edges)


# ---- chromatic functions ----

def ncX(G, var="t"):
    """Sum of t^asc M_c over proper packed colorings."""
    t = LaurentPoly.gen((var,), var)
    edges = G.edges()
    out = {}
    for w in packed_words(G.n):
        if is_proper(edges, w):
            out[w] = t ** asc(edges, w)
    return WQ(out)


def X_sym(G, var="t"):
    """Commutative chromatic quasi-symmetric function, in the m basis."""
    return ncX(G, var).commutative_image().to_sym()


def omega_X_sym(G, var="t"):
    return X_sym(G, var).omega()


# ---- scalar alphabet evaluations ----

class SpecializationPole(ZeroDivisionError):
    pass


def scalar_eval(f, spec, var="t"):
    """Evaluate a symmetric function at a scalar alphabet.

    spec is 1, -1, or a pair (num, den) of pairs of Laurent monomials giving
    p_k -> (a^k - b^k)/(c^k - d^k).
    """
    p = f.to_basis("p")
    if spec == 1:
        total = 0
        for lam, c in p.coeffs.items():
            total = c + total
        return total
    if spec == -1:
        total = 0
        for lam, c in p.coeffs.items():
            total = total + c * ((-1) ** len(lam))
        return total
    (a, b), (c_, d) = spec
    total = RatFunc(0)
    for lam, coeff in p.coeffs.items():
        term = RatFunc(_as_poly(coeff))
        for k in lam:
            num = _as_poly(a) ** k - _as_poly(b) ** k
            den = _as_poly(c_) ** k - _as_poly(d) ** k
            if den.is_zero():
                raise SpecializationPole("vanishing denominator at p_%d" % k)
            term = term * RatFunc(num, den)
        total = total + term
    return total


def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.const((), x)


def transformed_coeff(G, v, spec, var="t"):
    """Coefficient of M_v in X_G(AT): t^asc times the product of the scalar
    evaluations of the chromatic functions of the color-class subgraphs."""
    t = LaurentPoly.gen((var,), var)
    edges = G.edges()
    out = RatFunc(t ** asc(edges, v))
    for color in range(1, max(v) + 1):
        positions = [i + 1 for i, x in enumerate(v) if x == color]
        sub = G.induced(positions)
        val = scalar_eval(X_sym(sub, var), spec, var)
        if not isinstance(val, RatFunc):
            val = RatFunc(_as_poly(val))
        out = out * val
    return out


# ---- acyclic orientations ----

def acyclic_orientations(edges):
    """All acyclic orientations as tuples of arcs (tail, head)."""
    edges = list(edges)
    for choice in itertools.product([0, 1], repeat=len(edges)):
        arcs = [(i, j) if c == 0 else (j, i)
                for (i, j), c in zip(edges, choice)]
        if _is_acyclic(arcs):
            yield tuple(arcs)


def _is_acyclic(arcs):
    out = {}
    for a, b in arcs:
        out.setdefault(a, []).append(b)
    seen, stack = set(), set()

    def visit(x):
        if x in stack:
            return False
        if x in seen:
            return True
        stack.add(x)
        for y in out.get(x, ()):
            if not visit(y):
                return False
        stack.remove(x)
        seen.add(x)
        return True

    return all(visit(a) for a, _ in arcs)


def omega_ncX_coeff(G, u, var="t"):
    """Coefficient of M_u in omega applied to ncX(G): acyclic orientations
    with no arc descending in u, weighted by increasing arcs."""
    t = LaurentPoly.gen((var,), var)
    total = LaurentPoly.zero((var,))
    for arcs in acyclic_orientations(G.edges()):
        if any(u[j - 1] < u[i - 1] for i, j in arcs):
            continue
        total = total + t ** sum(1 for i, j in arcs if i < j)
    return total


# ---- the (q-1) product identity ----

def cm_product(G, tvar="t", qvar="q"):
    """(t-1)^n X_G((q-1)/(t-1)) computed both plethystically and as the
    closed product over vertices; asserts the two agree."""
    q = LaurentPoly.gen((qvar, tvar), qvar)
    t = LaurentPoly.gen((qvar, tvar), tvar)
    n = G.n
    product = LaurentPoly.const((qvar, tvar), 1)
    for a in G.a_counts():
        product = product * (q - t ** a)
    # plethystic path with a single common denominator
    p = X_sym(G, tvar).to_basis("p")
    denom = LaurentPoly.const((qvar, tvar), 1)
    for k in range(1, n + 1):
        denom = denom * (t ** k - 1) ** (n // k)
    total = LaurentPoly.zero((qvar, tvar))
    for lam, c in p.coeffs.items():
        piece = denom
        for k in lam:
            piece = piece.exact_div(t ** k - 1)
        for k in lam:
            piece = piece * (q ** k - 1)
        total = total + _as_poly(c) * piece
    direct = ((t - 1) ** n * total).exact_div(denom)
    if direct != product:
        raise AssertionError("product identity violated for %r" % (G,))
    return product


# ---- twisted LLT sums ----

def omega_llt_tilde_phi(n, edges, var="q"):
    """Phi expansion {permutation: q^des} of the twisted LLT sum of a graph
    given by its edge list (any simple graph on 1..n)."""
    qv = LaurentPoly.gen((var,), var)
    return {sigma: qv ** des(edges, sigma) for sigma in permutations(n)}


def omega_llt_M(G, var="t"):
    """M-basis form of the untwisted omega LLT: t^wasc per packed word."""
    t = LaurentPoly.gen((var,), var)
    edges = G.edges()
    return WQ({w: t ** wasc(edges, w) for w in packed_words(G.n)})


def omega_llt_phi(G, var="t"):
    """Phi form: t^wasc(sigma) per permutation."""
    t = LaurentPoly.gen((var,), var)
    edges = G.edges()
    return {sigma: t ** wasc(edges, sigma) for sigma in permutations(G.n)}
