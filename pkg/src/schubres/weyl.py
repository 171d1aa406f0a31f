"""Weyl group elements, reduced words, Bruhat order and the h statistic.

An element is identified by its exact action matrix on the simple-root
basis (columns are the images of the simple roots; all entries are
integers).  Elements are interned per root system, so equal elements are
usually the same object.  Per-system caches are filled idempotently and
are safe under the usual CPython concurrency guarantees.

Words are tuples of 1-based simple-reflection indices.
"""

from __future__ import annotations

import math
from ._linalg import as_int, mat_identity, mat_inv, mat_mul
from .rootsys import (
    RootSystem,
    Vector,
    is_negative,
    normalize_vector,
    reflect,
)

#: Default cap on the group order for exhaustive enumeration.
DEFAULT_MAX_GROUP_ORDER = 100_000

#: Value of h(p, p); compares above every index.
INFINITY = math.inf

Word = tuple


class WeylElement:
    """A Weyl group element; immutable, hashable, interned per system."""

    __slots__ = ("rs", "matrix", "_hash", "_length", "_canonical")

    def __init__(self, rs: RootSystem, matrix):
        self.rs = rs
        self.matrix = matrix
        self._hash = hash((rs.lie_type, matrix))
        self._length = None
        self._canonical = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs.lie_type == other.rs.lie_type and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.rs.lie_type != other.rs.lie_type:
            raise ValueError("cannot compose elements of different root systems")
        return _element(self.rs, mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        inv = mat_inv(self.matrix)
        return _element(
            self.rs, tuple(tuple(as_int(x) for x in row) for row in inv)
        )

    def act(self, vec) -> Vector:
        """Linear action on a coordinate vector over the simple roots."""
        if len(vec) != self.rs.rank:
            raise ValueError("vector length does not match the rank")
        rng = range(self.rs.rank)
        return tuple(
            sum(row[k] * vec[k] for k in rng if vec[k]) for row in self.matrix
        )

    def is_identity(self) -> bool:
        return self._length == 0 or self.matrix == mat_identity(self.rs.rank)

    @property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        if self._length is None:
            count = 0
            for beta in self.rs.positive_roots:
                img = self.act(beta)
                for c in img:
                    if c:
                        if c < 0:
                            count += 1
                        break
            self._length = count
        return self._length

    @property
    def canonical_word(self) -> Word:
        """Lexicographically smallest reduced word."""
        if self._canonical is None:
            word = []
            cur = self
            while not cur.is_identity():
                for i in range(1, cur.rs.rank + 1):
                    lower = simple_reflection(cur.rs, i) * cur
                    if lower.length < cur.length:
                        word.append(i)
                        cur = lower
                        break
                else:  # pragma: no cover - would indicate corrupt data
                    raise AssertionError("non-identity element with no left descent")
            self._canonical = tuple(word)
        return self._canonical

    def __repr__(self):
        word = ",".join(map(str, self.canonical_word)) or "e"
        return f"<{self.rs.lie_type} {word}>"


def _element(rs: RootSystem, matrix) -> WeylElement:
    table = rs._cache.setdefault("elements", {})
    el = table.get(matrix)
    if el is None:
        el = WeylElement(rs, matrix)
        table[matrix] = el
    return el


def identity(rs: RootSystem) -> WeylElement:
    return _element(rs, mat_identity(rs.rank))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"invalid word: letter {i} out of range 1..{rs.rank}")
    cache = rs._cache.setdefault("simple_reflections", {})
    el = cache.get(i)
    if el is None:
        n = rs.rank
        i0 = i - 1
        rows = []
        for r in range(n):
            if r != i0:
                rows.append(tuple(int(c == r) for c in range(n)))
            else:
                rows.append(
                    tuple(int(c == i0) - rs.cartan[c][i0] for c in range(n))
                )
        el = _element(rs, tuple(rows))
        cache[i] = el
    return el


def reflection(rs: RootSystem, beta) -> WeylElement:
    """The reflection s_beta for a root beta (of either sign)."""
    beta = tuple(beta)
    cache = rs._cache.setdefault("reflections", {})
    el = cache.get(beta)
    if el is None:
        columns = [
            tuple(as_int(c) for c in reflect(rs, beta, e))
            for e in rs.simple_roots
        ]
        n = rs.rank
        matrix = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
        el = _element(rs, matrix)
        cache[beta] = el
    return el


def element_from_word(rs: RootSystem, word) -> WeylElement:
    """Product s_{i_1} s_{i_2} ... s_{i_m}; the empty word gives the identity."""
    el = identity(rs)
    for letter in word:
        el = el * simple_reflection(rs, letter)
    return el


def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v


def inverse(u: WeylElement) -> WeylElement:
    return u.inverse()


def length(u: WeylElement) -> int:
    return u.length


def act(u: WeylElement, vec) -> Vector:
    return u.act(vec)


def canonical_reduced_word(u: WeylElement) -> Word:
    return u.canonical_word


def all_reduced_words(u: WeylElement):
    """Every reduced word for ``u``, sorted; memoized per root system."""
    cache = u.rs._cache.setdefault("reduced_words", {})

    def rec(el):
        got = cache.get(el)
        if got is not None:
            return got
        if el.is_identity():
            out = ((),)
        else:
            words = []
            for i in range(1, el.rs.rank + 1):
                lower = el * simple_reflection(el.rs, i)
                if lower.length < el.length:
                    words.extend(w + (i,) for w in rec(lower))
            out = tuple(sorted(words))
        cache[el] = out
        return out

    return rec(u)


def is_reduced(rs: RootSystem, word) -> bool:
    word = tuple(word)
    return element_from_word(rs, word).length == len(word)


def covers_above(u: WeylElement):
    """All (beta, v = u s_beta) with beta positive and l(v) = l(u) + 1."""
    cache = u.rs._cache.setdefault("covers_above", {})
    got = cache.get(u)
    if got is None:
        target = u.length + 1
        out = []
        for beta in u.rs.positive_roots:  # already sorted: deterministic order
            v = u * reflection(u.rs, beta)
            if v.length == target:
                out.append((beta, v))
        got = tuple(out)
        cache[u] = got
    return got


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Strong Bruhat order, by descent recursion; agrees with cover closure."""
    if u.rs.lie_type != v.rs.lie_type:
        raise ValueError("cannot compare elements of different root systems")
    cache = u.rs._cache.setdefault("bruhat", {})

    def rec(a, b):
        if a is b or a == b:
            return True
        if a.length >= b.length:
            return False
        key = (a, b)
        got = cache.get(key)
        if got is None:
            rs = a.rs
            for i in range(1, rs.rank + 1):
                s = simple_reflection(rs, i)
                sb = s * b
                if sb.length < b.length:
                    sa = s * a
                    got = rec(sa if sa.length < a.length else a, sb)
                    break
            cache[key] = got
        return got

    return rec(u, v)


def h_pair(p: WeylElement, q: WeylElement):
    """Smallest i with p omega_i != q omega_i; INFINITY when p == q."""
    if p.rs.lie_type != q.rs.lie_type:
        raise ValueError("cannot compare elements of different root systems")
    for i, omega in enumerate(p.rs.fundamental_weights):
        if p.act(omega) != q.act(omega):
            return i + 1
    return INFINITY


def omega_drop(u: WeylElement, j: int):
    """The drop omega_j - u omega_j, classified as a root or twice a root.

    Requires j = h(id, u); the precondition is verified, not trusted.
    """
    rs = u.rs
    h = h_pair(identity(rs), u)
    if j != h:
        raise ValueError(f"precondition violation: j={j} but h(id, u)={h}")
    omega = rs.fundamental_weights[j - 1]
    drop = normalize_vector(a - b for a, b in zip(omega, u.act(omega)))
    drop = tuple(as_int(c) for c in drop)
    if drop in rs.roots:
        return drop, "root"
    if all(c % 2 == 0 for c in drop) and tuple(c // 2 for c in drop) in rs.roots:
        return drop, "twice-root"
    raise ArithmeticError(
        f"omega drop {drop} is neither a root nor twice a root; "
        "only types A, B, C are supported"
    )


def enumerate_elements(rs: RootSystem, max_order: int | None = None):
    """All group elements, sorted by length then canonical word.

    Refuses to enumerate when the group order exceeds the cap.
    """
    bound = DEFAULT_MAX_GROUP_ORDER if max_order is None else max_order
    order = rs.lie_type.group_order
    if order > bound:
        raise ValueError(
            f"group order {order} of {rs.lie_type} exceeds the enumeration cap {bound}"
        )
    got = rs._cache.get("all_elements")
    if got is None:
        layer = [identity(rs)]
        seen = {identity(rs)}
        while layer:
            nxt = []
            for u in layer:
                for i in range(1, rs.rank + 1):
                    v = u * simple_reflection(rs, i)
                    if v.length > u.length and v not in seen:
                        seen.add(v)
                        nxt.append(v)
            layer = nxt
        got = tuple(sorted(seen, key=lambda e: (e.length, e.canonical_word)))
        assert len(got) == order
        rs._cache["all_elements"] = got
    return got


def longest_element(rs: RootSystem) -> WeylElement:
    return enumerate_elements(rs)[-1]


def inversion_roots(v: WeylElement):
    """Positive roots beta with v^{-1} beta negative, in lexicographic order."""
    vinv = v.inverse()
    return tuple(
        beta for beta in v.rs.positive_roots if is_negative(vinv.act(beta))
    )
