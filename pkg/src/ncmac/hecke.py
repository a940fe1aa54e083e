"""The Hecke algebra of the symmetric group in the T basis: products,
Bruhat-interval sums and their factorizations into Yang-Baxter-type factors,
the equivariant trace with Theta coefficients, Yang-Baxter elements with
spectral parameters, and the construction of Macdonald polynomials as
normalized traces.

The quadratic relation is T_i^2 = (q - 1) T_i + q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ncmac.perms import (apply_s, bruhat_lower, cycle_type, identity, inverse,
                         lehmer_code, permutations, reduced_word,
                         sort_partition)
from ncmac.rings import LaurentPoly, RatFunc, q_int
from ncmac.symfunc import SymFunc, theta_partition

_Q = LaurentPoly.gen(("q",), "q")


class NotNonsingular(ValueError):
    pass


def _is_zero(c):
    if isinstance(c, RatFunc):
        return c.num.is_zero()
    if isinstance(c, LaurentPoly):
        return c.is_zero()
    return c == 0


class HeckeElem:
    """An element of H_n(q) in the T basis, with coefficients that may be
    integers, Laurent polynomials, or rational functions."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.coeffs = {}
        for w, c in (coeffs or {}).items():
            if not _is_zero(c):
                self.coeffs[tuple(w)] = c

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {identity(n): 1})

    @classmethod
    def T(cls, w, c=1):
        return cls(len(w), {tuple(w): c})

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, w):
        return self.coeffs.get(tuple(w), 0)

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return HeckeElem(self.n, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) - c
        return HeckeElem(self.n, out)

    def scale(self, c):
        return HeckeElem(self.n, {w: d * c for w, d in self.coeffs.items()})

    def times_gen(self, i, c=1):
        """self * (c T_i)."""
        out = {}

        def add(w, x):
            out[w] = out.get(w, 0) + x

        for w, d in self.coeffs.items():
            ws = apply_s(w, i)
            if w[i - 1] < w[i]:
                add(ws, d * c)
            else:
                add(ws, d * c * _Q)
                add(w, d * c * (_Q - 1))
        return HeckeElem(self.n, out)

    def times_T(self, w):
        """self * T_w."""
        out = self
        for i in reduced_word(w):
            out = out.times_gen(i)
        return out

    def __mul__(self, other):
        out = HeckeElem.zero(self.n)
        for w, c in other.coeffs.items():
            out = out + self.times_T(w).scale(c)
        return out

    def transpose(self):
        """The anti-automorphism T_w -> T_{w^{-1}}."""
        return HeckeElem(self.n, {inverse(w): c
                                  for w, c in self.coeffs.items()})

    def lift(self, n):
        """Embed into H_n by appending fixed points."""
        if n < self.n:
            raise ValueError("cannot lower the rank")
        tail = tuple(range(self.n + 1, n + 1))
        return HeckeElem(n, {w + tail: c for w, c in self.coeffs.items()})

    def __eq__(self, other):
        if self.n != other.n:
            return False
        for w in set(self.coeffs) | set(other.coeffs):
            if self.coefficient(w) != other.coefficient(w):
                return False
        return True

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w in sorted(self.coeffs):
            parts.append("(%s)*T%s" % (self.coeffs[w], "".join(map(str, w))))
        return " + ".join(parts)

    __repr__ = __str__


# ---- Bruhat interval sums and factorizations ----

def interval_sum(w):
    """c_w: the sum of T_v over the Bruhat interval below w."""
    return HeckeElem(len(w), {v: 1 for v in bruhat_lower(w)})


def is_codominant(w):
    """True when w avoids the pattern 312, i.e. its Lehmer code a satisfies
    a[i+1] >= a[i] - 1."""
    a = lehmer_code(w)
    return all(a[i + 1] >= a[i] - 1 for i in range(len(a) - 1))


def _dominant_tail_position(w):
    """The k with w(k) = n > w(k+1) > ... > w(n), or None."""
    n = len(w)
    k = w.index(n) + 1
    if all(w[j - 1] > w[j] for j in range(k, n)):
        return k
    return None


def lascoux_element(w):
    """The factorized form of c_w, multiplied out; raises NotNonsingular
    when neither the recursion on w nor on its inverse applies."""
    w = tuple(w)
    n = len(w)
    if n <= 1:
        return HeckeElem.one(n)
    if w[n - 1] == n:
        return lascoux_element(w[:n - 1]).lift(n)
    k = _dominant_tail_position(w)
    if k is not None:
        sub = tuple(x - (x > n) for x in w if x != n)
        out = lascoux_element(sub).lift(n)
        for j in range(n - 1, k - 1, -1):
            out = out.times_gen(j) + out.scale(RatFunc(1, q_int(j - k + 1)))
        return out
    wi = inverse(w)
    if _dominant_tail_position(wi) is not None:
        return lascoux_element(wi).transpose()
    raise NotNonsingular(str(w))


def lascoux_word(w):
    """A reduced word for w read off the factorization of c_w."""
    w = tuple(w)
    n = len(w)
    if n <= 1:
        return []
    if w[n - 1] == n:
        return lascoux_word(w[:n - 1])
    k = _dominant_tail_position(w)
    if k is None:
        raise NotNonsingular(str(w))
    sub = tuple(x - (x > n) for x in w if x != n)
    return lascoux_word(sub) + list(range(n - 1, k - 1, -1))


def upsilon(n, scaled=False):
    """(T_1 + 1)(T_2 + 1/[2]) ... (T_{n-1} + 1/[n-1]).

    With scaled=True, returns [n-1]! times that product, i.e.
    ([1]T_1 + 1)([2]T_2 + 1) ... ([n-1]T_{n-1} + 1), whose coefficients
    are plain polynomials; traces of the scaled form avoid rational
    function arithmetic entirely."""
    out = HeckeElem.one(n)
    for k in range(1, n):
        if scaled:
            out = out.times_gen(k, q_int(k)) + out
        else:
            out = out.times_gen(k) + out.scale(RatFunc(1, q_int(k)))
    return out


# ---- the equivariant trace ----

def _texpr_add(acc, tx, c=1):
    for lam, d in tx.items():
        v = acc.get(lam, 0) + c * d
        if _is_zero(v):
            acc.pop(lam, None)
        else:
            acc[lam] = v
    return acc


def _chain_perm(m, lo, hi):
    """The permutation s_hi s_{hi-1} ... s_lo in S_m (identity if lo > hi)."""
    w = identity(m)
    for i in range(hi, lo - 1, -1):
        w = apply_s(w, i)
    return w


def _strip_strand(w, m):
    """Remove the largest strand: for w in S_m with w(p) = m, return the
    element u of S_{m-1} with w = u s_{m-1} ... s_p."""
    p = w.index(m) + 1
    u = w
    for i in range(p, m):
        u = apply_s(u, i)
    return u[:m - 1], p


@lru_cache(maxsize=None)
def trace_T(v):
    """The trace of T_v, as {partition: polynomial in q}.

    The trace is the linear form whose value on T_v depends only on the
    conjugacy class data of v; on products of disjoint increasing cycles it
    gives the Theta generator indexed by the cycle sizes."""
    v = tuple(v)
    n = len(v)
    M = 0
    for i in range(n, 0, -1):
        if v[i - 1] != i:
            M = i
            break
    if M == 0:
        return {(1,) * n: LaurentPoly.const(("q",), 1)}
    u, p = _strip_strand(v[:M], M)
    x = HeckeElem.T(_chain_perm(M - 1, p, M - 2)).times_T(u)
    acc = {}
    for vp, c in x.coeffs.items():
        _texpr_add(acc, _cyclic_hook(vp, M - 1, M - 1), c)
    pad = (1,) * (n - M)
    return {sort_partition(lam + pad): c for lam, c in acc.items()}


@lru_cache(maxsize=None)
def _cyclic_hook(vp, j, e):
    """The trace of T_vp T_j T_{j+1} ... T_e for vp in S_j."""
    if vp[j - 1] == j:
        base = trace_T(vp[:j - 1]) if j > 1 else {(): 1}
        part = e - j + 2
        acc = {}
        for lam, c in base.items():
            _texpr_add(acc, {sort_partition(lam + (part,)): c})
        return acc
    u, p = _strip_strand(vp, j)
    x = HeckeElem.T(_chain_perm(j - 1, p, j - 2)).times_T(u)
    acc = {}
    for w, c in x.coeffs.items():
        _texpr_add(acc, _cyclic_hook(w, j - 1, e), c)
    return acc


@lru_cache(maxsize=None)
def _trace_fingerprint(w):
    def freeze(c):
        if isinstance(c, LaurentPoly):
            return tuple(sorted(c.terms.items()))
        return (((0,), c),) if c else ()

    return tuple(sorted((lam, freeze(c))
                        for lam, c in trace_T(w).items()))


def trace_elem(h):
    """The trace of a Hecke algebra element, as {partition: coefficient}.

    Basis elements sharing the same trace are grouped first, so their
    coefficients are added before any polynomial multiplication."""
    groups = {}
    for w, c in h.coeffs.items():
        fp = _trace_fingerprint(w)
        if fp in groups:
            rep, acc_c = groups[fp]
            groups[fp] = (rep, acc_c + c)
        else:
            groups[fp] = (w, c)
    acc = {}
    for rep, c in groups.values():
        if not _is_zero(c):
            _texpr_add(acc, trace_T(rep), c)
    return acc


def theta_to_sym(texpr, var="q"):
    """Substitute Theta_r = h_r((q-1)X)/(q-1); result in the p basis."""
    out = SymFunc.zero("p")
    for lam, c in texpr.items():
        out = out + theta_partition(lam, var).scale(c)
    return out


def trace_sym(h, var="q"):
    return theta_to_sym(trace_elem(h), var)


# ---- the Abreu-Nigro expansion ----

def hessenberg_function(w):
    """h(i) = code(i) + i for a 312-avoiding permutation."""
    if not is_codominant(w):
        raise NotNonsingular(str(w))
    a = lehmer_code(w)
    return tuple(a[i] + i + 1 for i in range(len(w)))


def dyck_graph_of(w):
    """The graph whose edges (i, j), i < j, are counted by the code of w."""
    from ncmac.chromatic import DyckGraph
    return DyckGraph(hessenberg_function(w))


def forget_cycles(v):
    """Write the cycles of v starting from their smallest elements, in
    increasing order of those, and erase the parentheses."""
    n = len(v)
    seen = [False] * n
    word = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        k = start
        while not seen[k - 1]:
            seen[k - 1] = True
            word.append(k)
            k = v[k - 1]
    return tuple(word)


def an_weight(v, h):
    """Number of pairs i < j with v'(j) < v'(i) <= h(v'(j)) for the
    forget-cycles transform v' of v."""
    vp = forget_cycles(v)
    n = len(vp)
    return sum(1 for i in range(n) for j in range(i + 1, n)
               if vp[j] < vp[i] <= h[vp[j] - 1])


def abreu_nigro_theta(w):
    """The trace of c_w as {partition: polynomial in q}, by the explicit
    expansion over permutations below the Hessenberg function."""
    h = hessenberg_function(w)
    n = len(w)
    acc = {}
    for v in permutations(n):
        if all(v[i] <= h[i] for i in range(n)):
            lam = cycle_type(v)
            acc[lam] = acc.get(lam, 0) + _Q ** an_weight(v, h)
    return acc


# ---- deletion-contraction style linear relations ----

def admissible_edges(sigma):
    """Admissible edges (i, j) of the code sequence of sigma."""
    a = lehmer_code(sigma)
    n = len(sigma)
    out = []
    for i in range(1, n + 1):
        ai = a[i - 1]
        j = i + ai
        if (ai >= 2 and (i == 1 or a[i - 2] <= ai - 1)
                and j <= n and a[j - 2] == 1 + a[j - 1]):
            out.append((i, j))
    return out


def relation_triple(sigma, edge):
    """(sigma, sigma', sigma'') with (q+1) tr c_sigma' = tr c_sigma
    + q tr c_sigma''."""
    i, j = edge
    if edge not in admissible_edges(sigma):
        raise ValueError("edge %s is not admissible for %s" % (edge, sigma))
    sp = list(sigma)
    # left multiplication by s_{j-1} exchanges the values j-1 and j
    sp[sigma.index(j)] = j - 1
    sp[sigma.index(j - 1)] = j
    sp = tuple(sp)
    spp = list(sp)
    pos = sp.index(j - 1)
    for k in range(pos + 1, len(sp)):
        if sp[k] < j - 1:
            spp[pos], spp[k] = spp[k], spp[pos]
            break
    return sigma, sp, tuple(spp)


# ---- Yang-Baxter elements and spectral vectors ----

def _mono_inverse(m):
    ((exp, c),) = m.terms.items()
    inv = Fraction(1) / c
    if inv.denominator == 1:
        inv = inv.numerator
    return LaurentPoly(m.vars, {tuple(-e for e in exp): inv})


def yb_element(sigma, u, word=None, cyclic_shift=False):
    """The product of factors ((y/x - 1) T_i + (q - 1)) along a reduced word
    of sigma, where x, y are the spectral parameters currently at positions
    i, i + 1.  With cyclic_shift, the last factor is moved to the front."""
    n = len(sigma)
    sigma = tuple(sigma)
    if word is None:
        word = reduced_word(sigma)
    cur = identity(n)
    factors = []
    for i in word:
        x = u[cur[i - 1] - 1]
        y = u[cur[i] - 1]
        factors.append((i, y * _mono_inverse(x) - 1))
        cur = apply_s(cur, i)
    if cur != sigma:
        raise ValueError("word does not evaluate to sigma")
    if cyclic_shift and factors:
        factors = factors[-1:] + factors[:-1]
    out = HeckeElem.one(n)
    for i, c in factors:
        out = out.times_gen(i, c) + out.scale(_Q - 1)
    return out


def _diagram_cells(mu):
    return [(r, c) for r, row in enumerate(mu, 1) for c in range(1, row + 1)]


def sigma_mu(mu):
    """Number the cells of mu row by row bottom to top; read first, by rows
    from top to bottom and right to left, the labels with no cell above,
    then the remaining labels by rows from bottom to top and right to
    left."""
    mu = tuple(mu)
    label = {}
    for k, cell in enumerate(_diagram_cells(mu), 1):
        label[cell] = k
    def has_above(cell):
        r, c = cell
        return r < len(mu) and mu[r] >= c
    out = []
    for r in range(len(mu), 0, -1):
        for c in range(mu[r - 1], 0, -1):
            if not has_above((r, c)):
                out.append(label[(r, c)])
    for r in range(1, len(mu) + 1):
        for c in range(mu[r - 1], 0, -1):
            if has_above((r, c)):
                out.append(label[(r, c)])
    return tuple(out)


def v_mu(mu, multi_t=False, qvar="q"):
    """Spectral parameters in filling order: q^(col-1) t^(row-1), with the
    multi-t refinement using the ratios t_(l-1)/t_(l-r) for l rows."""
    mu = tuple(mu)
    l = len(mu)
    if multi_t:
        tnames = tuple("t%d" % i for i in range(1, l))
        names = (qvar,) + tnames
    else:
        names = (qvar, "t")
    q = LaurentPoly.gen(names, qvar)
    out = []
    for r, c in _diagram_cells(mu):
        m = q ** (c - 1)
        if multi_t:
            if r > 1:
                m = m * LaurentPoly.gen(names, "t%d" % (l - 1))
                if l - r >= 1:
                    m = m * _mono_inverse(LaurentPoly.gen(names, "t%d" % (l - r)))
        else:
            m = m * LaurentPoly.gen(names, "t") ** (r - 1)
        out.append(m)
    return tuple(out)


# ---- from traces to Macdonald polynomials ----

def inverse_one_minus_q_transform(f, n, qvar="q"):
    """Substitute p_k -> p_k / (1 - q^k), cleared to polynomial coefficients
    by the common factor prod_k (1 - q^k)^(n // k)."""
    p = f.to_basis("p")
    q = LaurentPoly.gen((qvar,), qvar)
    common = LaurentPoly.const((qvar,), 1)
    for k in range(1, n + 1):
        common = common * (1 - q ** k) ** (n // k)
    out = {}
    for lam, c in p.coeffs.items():
        m = common
        for part in lam:
            m = m.exact_div(1 - q ** part)
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const((qvar,), c)
        out[lam] = c * m
    return SymFunc("p", out)


def normalized_trace_schur(elem, qvar="q", omega=False):
    """Trace of elem, inverse (1-q)-transformed, in the Schur basis,
    normalized so that the coefficient of s_n is 1.  With omega, the
    involution is applied before normalizing."""
    n = elem.n
    f = trace_sym(elem, qvar)
    g = inverse_one_minus_q_transform(f, n, qvar)
    if omega:
        g = g.omega()
    s = g.to_basis("s")
    top = s.coefficient((n,))
    if not isinstance(top, LaurentPoly):
        top = LaurentPoly.const((qvar,), top)
    out = {}
    for lam, c in s.coeffs.items():
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const((qvar,), c)
        out[lam] = c.exact_div(top)
    return SymFunc("s", out)


@lru_cache(maxsize=None)
def _theta_schur_table(n, qvar="q"):
    """For each partition of n, the Schur expansion of the inverse
    (1-q)-transform (cleared to polynomials) of the Theta generator."""
    from ncmac.perms import partitions
    table = {}
    for lam in partitions(n):
        g = inverse_one_minus_q_transform(theta_partition(lam, qvar), n, qvar)
        row = {}
        for nu, c in g.to_basis("s").coeffs.items():
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly.const((qvar,), c)
            row[nu] = c
        table[lam] = row
    return table


def _trace_schur_raw(elem, qvar="q"):
    """Schur coefficients of the inverse-transformed trace, up to the
    common polynomial factor used to clear denominators."""
    table = _theta_schur_table(elem.n, qvar)
    out = {}
    for lam, c in trace_elem(elem).items():
        for nu, d in table[lam].items():
            out[nu] = out.get(nu, 0) + c * d
    return {nu: c for nu, c in out.items() if not _is_zero(c)}


def yb_trace_matches(sigma, u, target, qvar="q"):
    """True when the normalized Yang-Baxter trace of sigma with spectral
    parameters u equals the Schur-basis target, compared by
    cross-multiplication so no division is needed."""
    n = len(sigma)
    raw = _trace_schur_raw(yb_element(sigma, u), qvar)
    n_top = raw.get((n,), 0)
    t_top = target.coefficient((n,))
    if _is_zero(n_top):
        return False
    lams = set(raw) | set(target.coeffs)
    return all(raw.get(lam, 0) * t_top == target.coefficient(lam) * n_top
               for lam in lams)


def _census_matches(raw, target, n):
    n_top = raw.get((n,), 0)
    if _is_zero(n_top):
        return False
    t_top = target.coefficient((n,))
    lams = set(raw) | set(target.coeffs)
    return all(raw.get(lam, 0) * t_top == target.coefficient(lam) * n_top
               for lam in lams)


def yb_census(mu, sigmas=None):
    """The permutations whose normalized Yang-Baxter trace with parameters
    v_mu equals the single-t Macdonald polynomial of shape mu.

    The Yang-Baxter elements are built along a spanning tree of the weak
    order, one generator multiplication per permutation."""
    mu = tuple(mu)
    n = sum(mu)
    u = v_mu(mu)
    from ncmac.macdonald import tildeH_sym
    target = tildeH_sym(mu, multi_t=False)
    wanted = None if sigmas is None else {tuple(s) for s in sigmas}
    _theta_schur_table(n)
    out = []

    def visit(sigma, elem):
        if wanted is None or sigma in wanted:
            if _census_matches(_trace_schur_raw(elem), target, n):
                out.append(sigma)
        for i in range(1, n):
            if sigma[i - 1] > sigma[i]:
                continue
            child = apply_s(sigma, i)
            # enter each permutation through its smallest descent only
            if any(child[j - 1] > child[j] for j in range(1, i)):
                continue
            x = u[sigma[i - 1] - 1]
            y = u[sigma[i] - 1]
            factor = y * _mono_inverse(x) - 1
            visit(child, elem.times_gen(i, factor) + elem.scale(_Q - 1))

    visit(identity(n), HeckeElem.one(n))
    out.sort()
    return out


def is_hook(mu):
    return all(x == 1 for x in mu[1:])


def is_rectangle(mu):
    return len(set(mu)) == 1


def yb_macdonald(mu, multi_t=False):
    """The Macdonald polynomial of shape mu as a normalized Yang-Baxter
    trace, in the Schur basis.

    The single-t construction works for every shape.  The multi-t refinement
    is available for rectangles, hooks and two-row shapes."""
    mu = tuple(mu)
    sigma = sigma_mu(mu)
    if not multi_t:
        return normalized_trace_schur(yb_element(sigma, v_mu(mu)))
    if is_rectangle(mu) or is_hook(mu) or len(mu) <= 2:
        return normalized_trace_schur(yb_element(sigma, v_mu(mu, True)))
    raise ValueError("multi-t trace construction needs a rectangle, hook, "
                     "or two-row shape")
