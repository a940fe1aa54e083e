"""Exact multivariate Laurent polynomials over the rationals.

Coefficients are int or Fraction, never floats.  Terms live in a dict
mapping exponent tuples (one slot per variable, negative allowed) to
nonzero coefficients.  The heavy dict operations are delegated to a
compiled kernel when the extension built from _poly_kernel.pyx is
importable, otherwise to the pure-Python twin.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

try:
    from ncmac import _poly_kernel as _kernel
except ImportError:
    from ncmac import _poly_kernel_py as _kernel

KERNEL_IMPLEMENTATION = _kernel.IMPLEMENTATION

kadd = _kernel.kadd
ksub = _kernel.ksub
kneg = _kernel.kneg
kmul = _kernel.kmul
kscale = _kernel.kscale


class NonExactDivision(ArithmeticError):
    """Raised when a quotient does not exist in the Laurent polynomial ring."""


_VAR_RE = re.compile(r"([a-zA-Z]+)(\d*)$")


def _var_key(name):
    m = _VAR_RE.match(name)
    if not m:
        return (name, 0)
    return (m.group(1), int(m.group(2) or 0))


def _norm_coeff(c):
    # keep pure-integer computations in int
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """A Laurent polynomial with a fixed tuple of variable names."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        cleaned = {}
        if terms:
            for exp, c in terms.items():
                c = _norm_coeff(c)
                if c:
                    cleaned[tuple(exp)] = c
        self.terms = cleaned
        self._hash = None

    # ---- constructors ----

    @classmethod
    def _raw(cls, variables, terms):
        """Wrap a kernel-produced term dict without re-normalizing."""
        self = object.__new__(cls)
        self.vars = variables
        self.terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def const(cls, variables, c):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def gen(cls, variables, name, power=1):
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = power
        return cls(variables, {tuple(exp): 1})

    @classmethod
    def monomial(cls, variables, exps, c=1):
        return cls(variables, {tuple(exps): c})

    # ---- basic predicates ----

    def is_zero(self):
        return not self.terms

    def is_const(self):
        if not self.terms:
            return True
        z = (0,) * len(self.vars)
        return len(self.terms) == 1 and z in self.terms

    def const_value(self):
        if not self.terms:
            return 0
        z = (0,) * len(self.vars)
        if len(self.terms) == 1 and z in self.terms:
            return self.terms[z]
        raise ValueError("not a constant: %s" % self)

    def is_monomial(self):
        return len(self.terms) == 1

    # ---- variable alignment ----

    def with_vars(self, variables):
        """Reindex onto a new variable tuple, which must cover all used vars."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        pos = []
        for i, v in enumerate(self.vars):
            if v in variables:
                pos.append((i, variables.index(v)))
            elif any(exp[i] for exp in self.terms):
                raise ValueError("cannot drop used variable %r" % v)
        n = len(variables)
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for i, j in pos:
                new[j] = exp[i]
            key = tuple(new)
            terms[key] = terms.get(key, 0) + c
        return LaurentPoly(variables, terms)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented, NotImplemented
        if self.vars == other.vars:
            return self, other
        merged = sorted(set(self.vars) | set(other.vars), key=_var_key)
        return self.with_vars(merged), other.with_vars(merged)

    # ---- arithmetic ----

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(a.vars, kadd(a.terms, b.terms))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(a.vars, ksub(a.terms, b.terms))

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(a.vars, ksub(b.terms, a.terms))

    def __neg__(self):
        return LaurentPoly._raw(self.vars, kneg(self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly._raw(self.vars, kscale(self.terms, other))
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(a.vars, kmul(a.terms, b.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self.terms) != 1:
                raise NonExactDivision("negative power of a non-monomial")
            (exp, c), = self.terms.items()
            inv = _norm_coeff(Fraction(1) / Fraction(c))
            return LaurentPoly(self.vars, {tuple(-e for e in exp): inv}) ** (-n)
        result = LaurentPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError
            inv = _norm_coeff(Fraction(1, 1) / other)
            return LaurentPoly(self.vars, kscale(self.terms, inv))
        return self.exact_div(other)

    def exact_div(self, other):
        """Exact quotient in the Laurent ring; raise NonExactDivision otherwise."""
        a, b = self._coerce(other)
        if a is NotImplemented:
            raise TypeError("cannot divide by %r" % (other,))
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if a.is_zero():
            return LaurentPoly.zero(a.vars)
        nv = len(a.vars)
        # strip a monomial from each operand so exponents are nonnegative
        amin = [min(exp[i] for exp in a.terms) for i in range(nv)]
        bmin = [min(exp[i] for exp in b.terms) for i in range(nv)]
        shift = tuple(x - y for x, y in zip(amin, bmin))
        num = {tuple(e - m for e, m in zip(exp, amin)): c for exp, c in a.terms.items()}
        den = {tuple(e - m for e, m in zip(exp, bmin)): c for exp, c in b.terms.items()}
        lt_den = max(den)
        c_den = den[lt_den]
        quot = {}
        rem = num
        while rem:
            lt = max(rem)
            diff = tuple(x - y for x, y in zip(lt, lt_den))
            if any(d < 0 for d in diff):
                raise NonExactDivision("%s is not divisible by %s" % (a, b))
            c = _norm_coeff(Fraction(rem[lt]) / Fraction(c_den))
            quot[diff] = c
            rem = ksub(rem, kmul({diff: c}, den))
        return LaurentPoly(a.vars, {tuple(e + s for e, s in zip(exp, shift)): c
                                    for exp, c in quot.items()})

    def divides(self, other):
        try:
            other.exact_div(self)
            return True
        except NonExactDivision:
            return False

    # ---- substitution ----

    def subs(self, mapping):
        """Substitute variables by scalars or polynomials.

        A variable occurring with negative exponent may only be replaced by
        an invertible monomial.
        """
        keep = [v for v in self.vars if v not in mapping]
        values = {}
        for name, val in mapping.items():
            if name not in self.vars:
                continue
            if isinstance(val, (int, Fraction)):
                val = LaurentPoly.const(keep, val) if keep else LaurentPoly.const((), val)
            values[name] = val
        target_vars = set(keep)
        for val in values.values():
            target_vars |= set(val.vars)
        target = tuple(sorted(target_vars, key=_var_key))
        out = LaurentPoly.zero(target)
        cache = {}
        for exp, c in self.terms.items():
            # keep exponents of untouched variables, multiply in the rest
            base_exp = [0] * len(target)
            prod = None
            for i, v in enumerate(self.vars):
                e = exp[i]
                if not e:
                    continue
                if v in values:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = values[v].with_vars(target) ** e
                    f = cache[key]
                    prod = f if prod is None else prod * f
                else:
                    base_exp[target.index(v)] = e
            mono = LaurentPoly(target, {tuple(base_exp): c})
            out = out + (mono if prod is None else mono * prod)
        return out

    # ---- comparisons, hashing ----

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_const() and self.const_value() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._coerce(other)
        return a.terms == b.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        if self._hash is None:
            if self.is_const():
                self._hash = hash(Fraction(self.const_value()))
            else:
                used = [i for i in range(len(self.vars))
                        if any(exp[i] for exp in self.terms)]
                names = tuple(self.vars[i] for i in used)
                items = frozenset(
                    (tuple(exp[i] for i in used), Fraction(c))
                    for exp, c in self.terms.items())
                self._hash = hash((names, items))
        return self._hash

    # ---- serialization ----

    def to_dict(self):
        terms = []
        for exp in sorted(self.terms):
            c = Fraction(self.terms[exp])
            terms.append({"exp": list(exp), "num": str(c.numerator),
                          "den": str(c.denominator)})
        return {"vars": list(self.vars), "terms": terms}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        terms = {}
        for t in data["terms"]:
            terms[tuple(t["exp"])] = Fraction(int(t["num"]), int(t["den"]))
        return cls(tuple(data["vars"]), terms)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    # ---- printing ----

    def _term_str(self, exp, c):
        parts = []
        for v, e in zip(self.vars, exp):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append("%s^%d" % (v, e))
        if not parts:
            return str(c)
        body = "*".join(parts)
        if c == 1:
            return body
        if c == -1:
            return "-" + body
        return "%s*%s" % (c, body)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for exp in sorted(self.terms, reverse=True):
            s = self._term_str(exp, self.terms[exp])
            if out and not s.startswith("-"):
                out.append("+")
            out.append(s)
        return " ".join(out)

    def __repr__(self):
        return "LaurentPoly(%s)" % self


class RatFunc:
    """A thin exact rational function: a pair of Laurent polynomials.

    Normalization only cancels when exact division succeeds; this is enough
    for the places a true quotient briefly appears before clearing
    denominators.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.const((), num)
        if isinstance(den, (int, Fraction)):
            den = LaurentPoly.const((), den)
        if den.is_zero():
            raise ZeroDivisionError
        try:
            num = num.exact_div(den)
            den = LaurentPoly.const(num.vars, 1)
        except NonExactDivision:
            pass
        self.num = num
        self.den = den

    def __add__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other.num.is_zero():
            raise ZeroDivisionError
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def __eq__(self, other):
        other = _as_ratfunc(other)
        return self.num * other.den == other.num * self.den

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def as_poly(self):
        return self.num.exact_div(self.den)

    def __str__(self):
        if self.den.is_const() and self.den.const_value() == 1:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc(x, LaurentPoly.const(x.vars, 1))
    if isinstance(x, (int, Fraction)):
        return RatFunc(LaurentPoly.const((), x), LaurentPoly.const((), 1))
    raise TypeError("cannot coerce %r to RatFunc" % (x,))


# ---- convenience generators ----

def poly_gens(*names):
    """Return generator polynomials for the given variable names."""
    names = tuple(names)
    return tuple(LaurentPoly.gen(names, v) for v in names)


def q_int(m, q=None):
    """The q-integer [m] = 1 + q + ... + q^(m-1)."""
    if q is None:
        q = LaurentPoly.gen(("q",), "q")
    out = LaurentPoly.zero(q.vars)
    for k in range(m):
        out = out + q ** k
    return out
