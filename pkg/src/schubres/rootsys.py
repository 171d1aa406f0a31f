"""Root systems of types A, B and C over exact rational arithmetic.

Every vector is a coordinate tuple over the simple-root basis
{alpha_1, ..., alpha_n}.  Roots always have integer coordinates; weights
(such as the fundamental weights omega_i) may be rational.  The bilinear
form is normalized so that long roots have squared length 2; in type B
the short simple root alpha_n then has squared length 1.

Simple roots are ordered along the Dynkin chain, with the special bond
between the last two nodes: in type B the last simple root is short, in
type C it is long.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ._linalg import mat_inv

#: A coordinate tuple over the simple-root basis.
Vector = tuple

FAMILIES = ("A", "B", "C")


@dataclass(frozen=True)
class LieType:
    """A classical family label together with the rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(
                f"unsupported family {self.family!r}; expected one of {FAMILIES}"
            )
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if self.family in ("B", "C") and self.rank < 2:
            raise ValueError(f"degenerate family: {self.family}1 is not supported")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def group_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        return (2**n) * factorial(n)


def _cartan_matrix(lie_type: LieType):
    """Integer matrix cart[a][b] = <alpha_a, alpha_b> (0-based)."""
    n = lie_type.rank
    cart = [[2 if a == b else 0 for b in range(n)] for a in range(n)]
    for a in range(n - 1):
        cart[a][a + 1] = -1
        cart[a + 1][a] = -1
    if n >= 2 and lie_type.family == "B":
        cart[n - 2][n - 1] = -2  # alpha_n short
    if n >= 2 and lie_type.family == "C":
        cart[n - 1][n - 2] = -2  # alpha_n long
    return tuple(tuple(row) for row in cart)


def _generate_positive_roots(cart):
    """Closure of the simple roots under simple reflections, positives only."""
    n = len(cart)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            pair = sum(beta[a] * cart[a][i] for a in range(n))
            img = list(beta)
            img[i] -= pair
            img = tuple(img)
            if img not in seen and any(img) and all(c >= 0 for c in img):
                seen.add(img)
                frontier.append(img)
    return tuple(sorted(seen))


class RootSystem:
    """Simple roots, positive roots, Gram matrix and fundamental weights.

    Instances are immutable after construction and safe to share between
    threads.  The ``_cache`` dict is used by the group layer for
    memoization keyed by element; entries are only ever filled
    idempotently, so concurrent readers at worst duplicate work.
    """

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        n = lie_type.rank
        self.rank = n
        self.cartan = _cartan_matrix(lie_type)
        if lie_type.family == "A":
            half_lengths = [Fraction(1)] * n
        elif lie_type.family == "B":
            half_lengths = [Fraction(1)] * (n - 1) + [Fraction(1, 2)]
        else:
            half_lengths = [Fraction(1, 2)] * (n - 1) + [Fraction(1)]
        # gram[a][b] = (alpha_a, alpha_b) = cart[a][b] * |alpha_b|^2 / 2
        self.gram = tuple(
            tuple(self.cartan[a][b] * half_lengths[b] for b in range(n))
            for a in range(n)
        )
        self.simple_roots = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n)
        )
        self.positive_roots = _generate_positive_roots(self.cartan)
        self.roots = frozenset(self.positive_roots) | frozenset(
            tuple(-c for c in beta) for beta in self.positive_roots
        )
        # omega_i is the i-th row of the inverse Cartan matrix.
        self.fundamental_weights = mat_inv(self.cartan)
        self._cache: dict = {}

    def __repr__(self):
        return f"RootSystem({self.lie_type})"


def build_root_system(lie_type: LieType) -> RootSystem:
    """Construct the root system for a validated type label."""
    return RootSystem(lie_type)


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    """Shared, cached root system; reuses element caches across callers."""
    return build_root_system(LieType(family, rank))


def normalize_vector(vec) -> Vector:
    """Canonical coordinates: exact ints where integral, Fractions otherwise."""
    out = []
    for c in vec:
        f = Fraction(c)
        out.append(f.numerator if f.denominator == 1 else f)
    return tuple(out)


def bilinear(rs: RootSystem, x, y) -> Fraction:
    """The invariant form (x, y) in the chosen normalization."""
    g = rs.gram
    n = rs.rank
    total = Fraction(0)
    for a in range(n):
        xa = x[a]
        if xa:
            total += xa * sum(g[a][b] * y[b] for b in range(n) if y[b])
    return total


def pairing(rs: RootSystem, lam, beta) -> Fraction:
    """The coroot pairing <lam, beta> = 2 (lam, beta) / (beta, beta)."""
    norm = bilinear(rs, beta, beta)
    if norm == 0:
        raise ValueError("pairing undefined: division by zero norm")
    return 2 * bilinear(rs, lam, beta) / norm


def reflect(rs: RootSystem, beta, vec) -> Vector:
    """Reflection of ``vec`` in the hyperplane orthogonal to the root ``beta``."""
    beta = tuple(beta)
    if beta not in rs.roots:
        raise ValueError(f"invalid reflection: {beta} is not a root of {rs.lie_type}")
    c = pairing(rs, vec, beta)
    return normalize_vector(v - c * b for v, b in zip(vec, beta))


def h_root(beta) -> int:
    """Smallest index (1-based) with a nonzero coordinate."""
    for i, c in enumerate(beta):
        if c:
            return i + 1
    raise ValueError("h undefined for the zero vector")


def is_positive(vec) -> bool:
    """Nonzero and in the nonnegative cone over the simple roots."""
    return any(vec) and all(c >= 0 for c in vec)


def is_negative(vec) -> bool:
    return any(vec) and all(c <= 0 for c in vec)
