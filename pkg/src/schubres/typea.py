"""Type-A specializations over one-line permutations.

Permutations of {1, ..., n} are tuples of their values and correspond to
the rank n-1 root system; right multiplication by the transposition
(i, j) swaps the one-line entries at positions i and j.  The x <-> alpha
translation x_a - x_b = alpha_a + ... + alpha_{b-1} lives entirely in
this module; the core stays in the simple-root basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import FactoredPoly, Polynomial, expand
from .rootsys import RootSystem, root_system
from .schubert import (
    Chain,
    chain_contribution,
    enumerate_c0,
    enumerate_reduced_subwords,
    f_i_map,
    subword_contribution,
)
from .weyl import WeylElement, element_from_word

#: A permutation in one-line notation (the images u(1), ..., u(n)).
Permutation = tuple


def parse_oneline(text: str) -> Permutation:
    """Parse one-line notation: digit string for n <= 9, commas above.

    >>> parse_oneline("3421")
    (3, 4, 2, 1)
    >>> parse_oneline("10,3,2,1,4,5,6,7,8,9")[0]
    10
    """
    text = text.strip()
    if "," in text:
        values = tuple(int(part) for part in text.split(","))
    else:
        values = tuple(int(ch) for ch in text)
    _check_permutation(values)
    return values


def _check_permutation(values):
    n = len(values)
    if sorted(values) != list(range(1, n + 1)):
        raise ValueError(f"{values} is not a permutation of 1..{n}")


def typea_system(n: int) -> RootSystem:
    """The shared rank n-1 system acting on permutations of n values."""
    if n < 2:
        raise ValueError("need at least two values")
    return root_system("A", n - 1)


def reduced_word_of_perm(p: Permutation):
    """A reduced word obtained by repeatedly removing right descents."""
    _check_permutation(p)
    cur = list(p)
    rev = []
    n = len(cur)
    while True:
        for i in range(n - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                rev.append(i + 1)
                break
        else:
            break
    return tuple(reversed(rev))


def perm_to_element(rs: RootSystem, p: Permutation) -> WeylElement:
    """Codec: one-line permutation to the group element acting on roots."""
    _check_permutation(p)
    if rs.lie_type.family != "A" or rs.rank != len(p) - 1:
        raise ValueError(
            f"size mismatch: permutation of {len(p)} values needs type A rank {len(p) - 1}"
        )
    return element_from_word(rs, reduced_word_of_perm(p))


def element_to_perm(u: WeylElement) -> Permutation:
    """Inverse codec, by replaying the canonical word on positions."""
    if u.rs.lie_type.family != "A":
        raise ValueError("only type A elements correspond to permutations")
    n = u.rs.rank + 1
    cur = list(range(1, n + 1))
    for i in u.canonical_word:
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return tuple(cur)


def inv_set(v: Permutation) -> frozenset:
    """Inversions as value pairs.

    >>> sorted(inv_set((2, 1, 4, 3)))
    [(1, 2), (3, 4)]
    """
    _check_permutation(v)
    n = len(v)
    pairs = set()
    for i in range(n):
        for j in range(i + 1, n):
            if v[i] > v[j]:
                pairs.add((v[j], v[i]))
    return frozenset(pairs)


def xdiff_to_alpha(a: int, b: int, n: int):
    """Translate x_a - x_b (a < b) to alpha coordinates of rank n-1."""
    if not 1 <= a < b <= n:
        raise ValueError(f"need 1 <= a < b <= {n}")
    return tuple(1 if a <= k <= b - 1 else 0 for k in range(1, n))


def root_to_xdiff(beta):
    """Inverse translation of a type-A root; returns (a, b) with a < b."""
    support = [k for k, c in enumerate(beta) if c]
    if not support or any(beta[k] != 1 for k in support):
        raise ValueError(f"{beta} is not a positive type A root")
    a, b = support[0], support[-1]
    if support != list(range(a, b + 1)):
        raise ValueError(f"{beta} is not a positive type A root")
    return a + 1, b + 2


def transposition_edges(gamma: Chain):
    """The position-pair labels (i, j) of the edges of a type-A chain."""
    labels = []
    for beta in gamma.betas:
        labels.append(root_to_xdiff(beta))
    return tuple(labels)


def chain_deleted_pairs(gamma: Chain):
    """The inversion value pairs removed by the edges of an h-monotone chain."""
    perms = [element_to_perm(el) for el in gamma.elements]
    v = perms[-1]
    pairs = []
    for k, beta in enumerate(gamma.betas):
        i = next(
            pos for pos in range(len(v)) if perms[k][pos] != perms[k + 1][pos]
        ) + 1
        pairs.append((perms[k][i - 1], v[i - 1]))
    return tuple(pairs)


def tau_typea(u: Permutation, v: Permutation) -> Polynomial:
    """Restriction by the explicit inversion-set formula.

    Each h-monotone maximal chain contributes the product of the
    inversion factors of v that survive after removing one factor per
    edge; the result is expressed in the alpha basis.
    """
    _check_permutation(u)
    _check_permutation(v)
    if len(u) != len(v):
        raise ValueError("size mismatch between the two permutations")
    n = len(v)
    rs = typea_system(n)
    U = perm_to_element(rs, u)
    V = perm_to_element(rs, v)
    inv_v = inv_set(v)
    total = Polynomial.zero(rs.rank)
    for gamma in enumerate_c0(U, V):
        remaining = set(inv_v)
        for pair in chain_deleted_pairs(gamma):
            if pair not in remaining:
                raise ArithmeticError(
                    f"edge pair {pair} is not an unused inversion of {v}"
                )
            remaining.remove(pair)
        factors = tuple(xdiff_to_alpha(a, b, n) for a, b in remaining)
        total = total + expand(FactoredPoly(Fraction(1), factors, rs.rank))
    return total


def canonical_word_iv(v: Permutation):
    """The reduced word built from descending runs, one per left index.

    Peels the permutation by repeatedly locating the smallest moved
    position j, emitting the run [v(j)-1, ..., j+1, j], and multiplying
    it off on the left.

    >>> canonical_word_iv((3, 4, 2, 1))
    (2, 1, 3, 2, 3)
    """
    _check_permutation(v)
    segments = canonical_word_iv_segments(v)
    word = []
    for segment in segments:
        word.extend(segment)
    return tuple(word)


def canonical_word_iv_segments(v: Permutation):
    """The per-index descending runs of the canonical word, low index first."""
    _check_permutation(v)
    n = len(v)
    cur = list(v)
    segments = [() for _ in range(n - 1)]
    while True:
        j = next((i + 1 for i in range(n) if cur[i] != i + 1), None)
        if j is None:
            break
        k = cur[j - 1] - 1
        segments[j - 1] = tuple(range(k, j - 1, -1))
        # Multiply s_j s_{j+1} ... s_k off on the left (value swaps),
        # applying s_k first.
        for a in range(k, j - 1, -1):
            pos_a = cur.index(a)
            pos_b = cur.index(a + 1)
            cur[pos_a], cur[pos_b] = cur[pos_b], cur[pos_a]
        remaining_min = next((i + 1 for i in range(n) if cur[i] != i + 1), None)
        if remaining_min is not None and remaining_min <= j:
            raise AssertionError("residual word does not stay above the peeled index")
    return tuple(segments)


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of matching h-monotone chains with reduced subwords."""

    u: Permutation
    v: Permutation
    word: tuple
    chain_count: int
    subword_count: int
    duplicate_images: tuple
    images_outside: tuple
    missed_subwords: tuple
    contribution_mismatches: tuple

    @property
    def bijection_ok(self):
        return (
            not self.duplicate_images
            and not self.images_outside
            and not self.missed_subwords
            and self.chain_count == self.subword_count
        )

    @property
    def ok(self):
        return self.bijection_ok and not self.contribution_mismatches


def verify_equivalence(u: Permutation, v: Permutation) -> EquivalenceReport:
    """Check that chain contributions match subword contributions termwise.

    Uses the canonical descending-run word for v, maps every h-monotone
    chain to a subword, and compares images and expanded contributions.
    Violations are reported as data.
    """
    _check_permutation(u)
    _check_permutation(v)
    if len(u) != len(v):
        raise ValueError("size mismatch between the two permutations")
    n = len(v)
    rs = typea_system(n)
    U = perm_to_element(rs, u)
    V = perm_to_element(rs, v)
    word = canonical_word_iv(v)
    chains = enumerate_c0(U, V)
    expected = {s.mask: s for s in enumerate_reduced_subwords(U, word)}
    seen: dict = {}
    duplicates = []
    outside = []
    mismatches = []
    for gamma in chains:
        image = f_i_map(gamma, word)
        if image.mask in seen:
            duplicates.append(image.mask)
        seen[image.mask] = gamma
        if image.mask not in expected:
            outside.append(image.mask)
            continue
        lhs = expand(subword_contribution(rs, image))
        rhs = expand(chain_contribution(gamma, V))
        if lhs != rhs:
            mismatches.append((image.mask, lhs, rhs))
    missed = tuple(mask for mask in expected if mask not in seen)
    return EquivalenceReport(
        u=tuple(u),
        v=tuple(v),
        word=word,
        chain_count=len(chains),
        subword_count=len(expected),
        duplicate_images=tuple(duplicates),
        images_outside=tuple(outside),
        missed_subwords=missed,
        contribution_mismatches=tuple(mismatches),
    )
