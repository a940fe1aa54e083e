"""Symmetric functions with exact Laurent polynomial coefficients.

Elements carry coordinates in one of the classical bases m, e, h, p, s,
indexed by partitions.  Transition matrices between bases are computed per
degree by expanding basis elements in as many variables as the degree and
reading off monomial coordinates; the matrices have rational entries and are
cached, so coefficient rings (Laurent polynomials in q, t, ...) only ever
see linear combinations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from ncmac.perms import partitions, sort_partition
from ncmac.rings import LaurentPoly, kadd, kmul

BASES = ("m", "e", "h", "p", "s")


# ---- expansions of basis elements in d variables ----

def _one_part_expansion(basis, k, d):
    """x-expansion of p_k / e_k / h_k in d variables as an exponent dict."""
    out = {}
    if basis == "p":
        for i in range(d):
            exp = [0] * d
            exp[i] = k
            out[tuple(exp)] = 1
    elif basis == "e":
        for subset in itertools.combinations(range(d), k):
            exp = [0] * d
            for i in subset:
                exp[i] = 1
            out[tuple(exp)] = 1
    elif basis == "h":
        for combo in itertools.combinations_with_replacement(range(d), k):
            exp = [0] * d
            for i in combo:
                exp[i] += 1
            out[tuple(exp)] = 1
    else:
        raise ValueError(basis)
    return out


def _ssyt_rows(shape, d):
    """Yield SSYT of the given shape with entries in 1..d, as row tuples."""
    if not shape:
        yield ()
        return

    def fill_row(length, min_vals, prev_row):
        # min_vals[i] is the strict lower bound from the row above
        def rec(i, row):
            if i == length:
                yield tuple(row)
                return
            lo = max(min_vals[i], row[-1] if row else 1)
            for v in range(lo, d + 1):
                yield from rec(i + 1, row + [v])
        yield from rec(0, [])

    def build(r, rows):
        if r == len(shape):
            yield tuple(rows)
            return
        length = shape[r]
        if r == 0:
            mins = [1] * length
        else:
            mins = [rows[r - 1][i] + 1 for i in range(length)]
        for row in fill_row(length, mins, rows[r - 1] if r else None):
            yield from build(r + 1, rows + [row])

    yield from build(0, [])


def _schur_expansion(lam, d):
    out = {}
    for tab in _ssyt_rows(lam, d):
        exp = [0] * d
        for row in tab:
            for v in row:
                exp[v - 1] += 1
        key = tuple(exp)
        out[key] = out.get(key, 0) + 1
    return out


def _monomial_expansion(lam, d):
    out = {}
    padded = tuple(lam) + (0,) * (d - len(lam))
    for perm in set(itertools.permutations(padded)):
        out[perm] = 1
    return out


@lru_cache(maxsize=None)
def _basis_expansion(basis, mu, d):
    if basis == "m":
        return _monomial_expansion(mu, d)
    if basis == "s":
        return _schur_expansion(mu, d)
    out = {(0,) * d: 1}
    for k in mu:
        out = kmul(out, _one_part_expansion(basis, k, d))
    return out


# ---- transition matrices ----

@lru_cache(maxsize=None)
def to_m_matrix(basis, n):
    """Columns: m-coordinates of basis elements of degree n."""
    parts = partitions(n)
    mat = {}
    for mu in parts:
        expansion = _basis_expansion(basis, mu, n)
        col = {}
        for lam in parts:
            padded = tuple(lam) + (0,) * (n - len(lam))
            c = expansion.get(padded, 0)
            if c:
                col[lam] = c
        mat[mu] = col
    return mat


@lru_cache(maxsize=None)
def from_m_matrix(basis, n):
    """Inverse of to_m_matrix: m-coordinates to basis coordinates."""
    parts = list(partitions(n))
    idx = {mu: i for i, mu in enumerate(parts)}
    k = len(parts)
    a = [[Fraction(0)] * (2 * k) for _ in range(k)]
    fwd = to_m_matrix(basis, n)
    for j, mu in enumerate(parts):
        for lam, c in fwd[mu].items():
            a[idx[lam]][j] = Fraction(c)
    for i in range(k):
        a[i][k + i] = Fraction(1)
    # Gauss-Jordan over the rationals
    for col in range(k):
        piv = next(r for r in range(col, k) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = {}
    for j, mu in enumerate(parts):
        col = {}
        for i, lam in enumerate(parts):
            c = a[i][k + j]
            if c:
                col[lam] = c
        out[mu] = col
    return out


# ---- symmetric function elements ----

def _scalar_zero(c):
    if isinstance(c, LaurentPoly):
        return c.is_zero()
    return not c


class SymFunc:
    """A symmetric function: coordinates in one named basis."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs=None):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        self.basis = basis
        self.coeffs = {}
        if coeffs:
            for lam, c in coeffs.items():
                if not _scalar_zero(c):
                    self.coeffs[sort_partition(lam)] = c

    @classmethod
    def zero(cls, basis="m"):
        return cls(basis, {})

    @classmethod
    def term(cls, basis, lam, c=1):
        return cls(basis, {tuple(lam): c})

    @classmethod
    def one(cls, basis="m"):
        return cls(basis, {(): 1})

    def is_zero(self):
        return not self.coeffs

    def degrees(self):
        return sorted({sum(lam) for lam in self.coeffs})

    def homogeneous(self, n):
        return SymFunc(self.basis,
                       {lam: c for lam, c in self.coeffs.items()
                        if sum(lam) == n})

    def coefficient(self, lam, basis=None):
        lam = sort_partition(lam)
        f = self if basis is None or basis == self.basis else self.to_basis(basis)
        return f.coeffs.get(lam, 0)

    def map_coeffs(self, fn):
        return SymFunc(self.basis, {lam: fn(c) for lam, c in self.coeffs.items()})

    # ---- linear structure ----

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to_basis(self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self.coeffs.items()})

    def scale(self, c):
        return SymFunc(self.basis, {lam: v * c for lam, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        a = self.to_basis("p")
        b = other.to_basis("p")
        out = {}
        for lam, c in a.coeffs.items():
            for mu, d in b.coeffs.items():
                key = sort_partition(lam + mu)
                out[key] = out.get(key, 0) + c * d
        prod = SymFunc("p", out)
        if self.basis == "p":
            return prod
        return prod.to_basis(self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFunc(self.basis, {(): other})
        if not isinstance(other, SymFunc):
            return NotImplemented
        diff = self - other
        return diff.is_zero()

    # ---- basis change ----

    def to_basis(self, basis):
        if basis == self.basis:
            return self
        out = {}
        for n in self.degrees():
            comp = self.homogeneous(n)
            m_coords = {}
            if self.basis == "m":
                m_coords = dict(comp.coeffs)
            else:
                fwd = to_m_matrix(self.basis, n)
                for mu, c in comp.coeffs.items():
                    for lam, e in fwd[mu].items():
                        m_coords[lam] = m_coords.get(lam, 0) + c * e
            if basis == "m":
                for lam, c in m_coords.items():
                    if not _scalar_zero(c):
                        out[lam] = c
                continue
            back = from_m_matrix(basis, n)
            for lam, c in m_coords.items():
                if _scalar_zero(c):
                    continue
                for mu, e in back[lam].items():
                    out[mu] = out.get(mu, 0) + c * e
        return SymFunc(basis, out)

    # ---- operations ----

    def omega(self):
        """The involution sending e to h (sign-twisted in the p basis)."""
        p = self.to_basis("p")
        out = {lam: ((-1) ** (sum(lam) - len(lam))) * c
               for lam, c in p.coeffs.items()}
        return SymFunc("p", out).to_basis(self.basis)

    def plethysm_scale(self, factor):
        """Substitute p_k -> factor(k) * p_k for a scalar-valued factor."""
        p = self.to_basis("p")
        out = {}
        for lam, c in p.coeffs.items():
            for k in lam:
                c = c * factor(k)
            out[lam] = c
        return SymFunc("p", out).to_basis(self.basis)

    def eval_at(self, values):
        """Evaluate at a finite alphabet of scalars or Laurent monomials."""
        p = self.to_basis("p")
        total = 0
        for lam, c in p.coeffs.items():
            term = c
            for k in lam:
                pk = sum((v ** k for v in values), 0)
                term = term * pk
            total = total + term
        return total

    # ---- printing ----

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for lam in sorted(self.coeffs, key=lambda l: (sum(l), l), reverse=True):
            c = self.coeffs[lam]
            name = "%s[%s]" % (self.basis, ",".join(map(str, lam)))
            bits.append("(%s)*%s" % (c, name))
        return " + ".join(bits)

    __repr__ = __str__


def sym_gen(basis, *lam):
    return SymFunc.term(basis, tuple(lam))


def theta(r, var="q"):
    """theta_r = h_r[(q-1)X] / (q-1), a polynomial in q with p coefficients."""
    q = LaurentPoly.gen((var,), var)
    if r == 0:
        return SymFunc.one("p")
    h = SymFunc.term("h", (r,))
    scaled = h.plethysm_scale(lambda k: q ** k - 1)
    return scaled.map_coeffs(lambda c: _exact_coeff_div(c, q - 1))


def _exact_coeff_div(c, d):
    if not isinstance(c, LaurentPoly):
        c = LaurentPoly.const(d.vars, c)
    return c.exact_div(d)


def theta_partition(lam, var="q"):
    out = SymFunc.one("p")
    for r in lam:
        out = out * theta(r, var)
    return out
