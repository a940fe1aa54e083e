"""Permutations, packed words, compositions, partitions.

Permutations are tuples of 1-based one-line values; packed words are tuples
of positive integers whose set of values is an initial segment of the
positive integers.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


# ---- permutations ----

def identity(n):
    return tuple(range(1, n + 1))

def permutations(n):
    return itertools.permutations(range(1, n + 1))

def compose(u, v):
    """(u ∘ v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))

def inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)

def inv_count(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])

length = inv_count

def descents(w):
    """Right descent positions {i : w(i) > w(i+1)}, 1-based."""
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]

def apply_s(w, i):
    """w * s_i: swap values in positions i, i+1 (1-based)."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)

def lehmer_code(w):
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i])
                 for i in range(n))

def from_lehmer_code(code):
    n = len(code)
    avail = list(range(1, n + 1))
    return tuple(avail.pop(c) for c in code)

def reduced_word(w):
    """A reduced word (list of generator indices) for w."""
    w = list(w)
    word = []
    n = len(w)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return word

def cycle_type(w):
    n = len(w)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            ln += 1
        parts.append(ln)
    parts.sort(reverse=True)
    return tuple(parts)

def bruhat_leq(v, w):
    """Bruhat order via the rank-matrix dominance criterion."""
    n = len(v)
    if inv_count(v) > inv_count(w):
        return False
    for i in range(1, n):
        sv = sorted(v[:i], reverse=True)
        sw = sorted(w[:i], reverse=True)
        for a, b in zip(sv, sw):
            if a > b:
                return False
    return True

def bruhat_lower(w):
    """All v <= w in Bruhat order."""
    return [v for v in permutations(len(w)) if bruhat_leq(v, w)]

def longest_element(n):
    return tuple(range(n, 0, -1))


# ---- words ----

def standardize(word):
    """The standardization permutation: ties broken left to right."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    out = [0] * len(word)
    for rank, i in enumerate(order):
        out[i] = rank + 1
    return tuple(out)

def is_packed(word):
    vals = set(word)
    return vals == set(range(1, len(vals) + 1)) if word else True

def pack(word):
    """Replace values by their rank among the distinct values used."""
    ranks = {v: r + 1 for r, v in enumerate(sorted(set(word)))}
    return tuple(ranks[v] for v in word)

def packed_words(n, max_letters=None):
    """All packed words of length n (surjections onto an initial segment)."""
    top = n if max_letters is None else min(n, max_letters)
    for word in itertools.product(*(range(1, top + 1) for _ in range(n))):
        m = max(word) if word else 0
        if set(word) == set(range(1, m + 1)):
            yield word

def min_word(perm):
    """The minimal word with the same relative order pattern as perm.

    Letter i of the result is 1 plus the number of inverse descents of perm
    below perm(i).
    """
    inv = inverse(perm)
    des = set(descents(inv))
    return tuple(1 + sum(1 for d in des if d < x) for x in perm)

def evaluation(word):
    """Composition counting occurrences of each letter 1..max."""
    m = max(word) if word else 0
    return tuple(word.count(v) for v in range(1, m + 1))


# ---- compositions and partitions ----

def compositions(n):
    """All compositions of n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest

@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (((),))
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)

def conjugate(mu):
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))

def n_stat(mu):
    """n(mu) = sum (i-1) * mu_i."""
    return sum(i * p for i, p in enumerate(mu))

def sort_partition(parts):
    return tuple(sorted((p for p in parts if p), reverse=True))

def descent_composition(perm):
    """Composition of n cut at the descents of perm."""
    n = len(perm)
    des = descents(perm)
    bounds = [0] + des + [n]
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))
