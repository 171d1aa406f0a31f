"""Cross-verification suites over exhaustive small-rank enumeration.

Each suite returns a :class:`SuiteResult` with a case count and a list
of human-readable failure strings; an empty failure list means the suite
passed.  Suites are deterministic: randomized ones take an explicit
seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import Polynomial, expand
from .rootsys import RootSystem, h_root, is_positive, root_system
from .schubert import (
    NonGenericPointError,
    _subword_sums,
    chain_contribution,
    enumerate_c0,
    enumerate_max_chains,
    gkm_check_class,
    gt_term_eval,
    lambda_minus,
    tau_chain,
)
from .typea import element_to_perm, tau_typea, verify_equivalence
from .weyl import (
    INFINITY,
    all_reduced_words,
    bruhat_leq,
    enumerate_elements,
    h_pair,
    identity,
    omega_drop,
    reflection,
    simple_reflection,
)

#: Default exhaustive ranks for each family, chosen for desk-scale runtimes.
DEFAULT_RANKS = {"A": (2, 3), "B": (2, 3), "C": (2, 3)}

DEFAULT_SEED = 20260810


@dataclass
class SuiteResult:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def check(self, condition, message):
        self.cases += 1
        if not condition:
            self.failures.append(message)

    def to_json(self):
        return {
            "schema": "v1",
            "suite": self.suite,
            "cases": self.cases,
            "failures": list(self.failures),
        }


def bruhat_pairs(rs: RootSystem):
    """All ordered pairs u <= v, in enumeration order."""
    elements = enumerate_elements(rs)
    return [
        (u, v) for u in elements for v in elements if bruhat_leq(u, v)
    ]


def suite_oracle(rs: RootSystem, include_typea: bool | None = None) -> SuiteResult:
    """Chain formula == subword formula for every reduced word of every v.

    In type A additionally compares against the explicit inversion-set
    formula.
    """
    result = SuiteResult(f"oracle[{rs.lie_type}]")
    if include_typea is None:
        include_typea = rs.lie_type.family == "A"
    elements = enumerate_elements(rs)
    zero = Polynomial.zero(rs.rank)
    for v in elements:
        chain_values = {
            u: tau_chain(u, v) for u in elements if bruhat_leq(u, v)
        }
        for word in all_reduced_words(v):
            sums = _subword_sums(rs, word)
            for u in elements:
                expected = chain_values.get(u, zero)
                got = sums.get(u, zero)
                result.check(
                    got == expected,
                    f"tau mismatch at u={u!r}, v={v!r}, word={word}: "
                    f"billey {got!r} vs chain {expected!r}",
                )
        if include_typea:
            pv = element_to_perm(v)
            for u in elements:
                if not bruhat_leq(u, v):
                    continue
                result.check(
                    tau_typea(element_to_perm(u), pv) == chain_values[u],
                    f"typea mismatch at u={u!r}, v={v!r}",
                )
    return result


def suite_characterization(rs: RootSystem) -> SuiteResult:
    """Degree, support and normalization of every computed class value."""
    result = SuiteResult(f"characterization[{rs.lie_type}]")
    elements = enumerate_elements(rs)
    for u in elements:
        norm = tau_chain(u, u)
        result.check(
            norm == expand(lambda_minus(u)),
            f"normalization fails at u={u!r}",
        )
        for v in elements:
            value = tau_chain(u, v)
            below = bruhat_leq(u, v)
            result.check(
                bool(value) == below,
                f"support fails at u={u!r}, v={v!r}",
            )
            if value:
                result.check(
                    value.is_homogeneous() and value.degree() == u.length,
                    f"homogeneity fails at u={u!r}, v={v!r}",
                )
    return result


def _power_of_two_exponent(value: Fraction):
    den = value.denominator
    exponent = 0
    while den % 2 == 0:
        den //= 2
        exponent += 1
    return exponent if den == 1 else None


def suite_positivity(rs: RootSystem) -> SuiteResult:
    """Nonnegativity and integrality of chain contributions and totals.

    Types A and C must be nonnegative integers throughout; in type B each
    chain contribution times 2^m must be integral and the total must lie
    in 2^-L Z>=0 with L at most the total chain length.
    """
    result = SuiteResult(f"positivity[{rs.lie_type}]")
    family = rs.lie_type.family
    for u, v in bruhat_pairs(rs):
        chains = enumerate_c0(u, v)
        total_chain_length = sum(len(g.betas) for g in chains)
        for gamma in chains:
            contribution = expand(chain_contribution(gamma, v))
            m = len(gamma.betas)
            if family in ("A", "C"):
                result.check(
                    all(
                        c >= 0 and c.denominator == 1
                        for c in contribution.terms.values()
                    ),
                    f"non-integral or negative contribution at u={u!r}, v={v!r}",
                )
            else:
                scaled = contribution * Fraction(2**m)
                result.check(
                    all(
                        c >= 0 and c.denominator == 1
                        for c in scaled.terms.values()
                    ),
                    f"2^m-scaled contribution not integral at u={u!r}, v={v!r}",
                )
        value = tau_chain(u, v)
        if family in ("A", "C"):
            result.check(
                all(c >= 0 and c.denominator == 1 for c in value.terms.values()),
                f"restriction not a nonnegative integer polynomial at u={u!r}, v={v!r}",
            )
        else:
            exponents = [
                _power_of_two_exponent(c) for c in value.terms.values()
            ]
            result.check(
                all(c >= 0 for c in value.terms.values())
                and all(e is not None for e in exponents)
                and max(exponents, default=0) <= total_chain_length,
                f"type B restriction outside 2^-L Z>=0 at u={u!r}, v={v!r}",
            )
    return result


def suite_gkm(rs: RootSystem) -> SuiteResult:
    """Every computed class passes the edge-divisibility check; a mutated
    class fails it."""
    result = SuiteResult(f"gkm[{rs.lie_type}]")
    elements = enumerate_elements(rs)
    for u in elements:
        values = {v: tau_chain(u, v) for v in elements}
        report = gkm_check_class(rs, values)
        result.cases += report.edges_checked
        if not report.ok:
            result.failures.extend(
                f"class of {u!r}: {failure.describe()}"
                for failure in report.failures
            )
    # Mutation check: perturbing one vertex value must break divisibility.
    u = simple_reflection(rs, 1)
    values = {v: tau_chain(u, v) for v in elements}
    values[identity(rs)] = values[identity(rs)] + Polynomial.one(rs.rank)
    mutated = gkm_check_class(rs, values)
    result.check(
        not mutated.ok,
        "mutated class unexpectedly passes the edge-divisibility check",
    )
    return result


def _random_alpha(rng, rank):
    return tuple(Fraction(rng.randint(1, 10**6)) for _ in range(rank))


def _random_mu(rng, rank):
    return tuple(Fraction(rng.randint(1, 1000)) for _ in range(rank))


def gt_eval_resampling(u, v, chains, rng, max_attempts=100):
    """Evaluate the chain sum at a random point, resampling off the
    vanishing locus; returns (alpha, mu, value)."""
    rank = u.rs.rank
    for _ in range(max_attempts):
        alpha = _random_alpha(rng, rank)
        mu = _random_mu(rng, rank)
        try:
            total = Fraction(0)
            for gamma in chains:
                total += gt_term_eval(gamma, v, mu, alpha)
            return alpha, mu, total
        except NonGenericPointError:
            continue
    raise NonGenericPointError(
        f"no generic point found in {max_attempts} attempts for u={u!r}, v={v!r}"
    )


def suite_gt(
    rs: RootSystem,
    samples: int = 20,
    seed: int = DEFAULT_SEED,
    pair_sample: int | None = None,
) -> SuiteResult:
    """Moment-map evaluation equals the chain polynomial, exactly, at
    random points."""
    result = SuiteResult(f"gt[{rs.lie_type}]")
    rng = random.Random(seed)
    pairs = bruhat_pairs(rs)
    if pair_sample is not None and pair_sample < len(pairs):
        pairs = rng.sample(pairs, pair_sample)
    for u, v in pairs:
        chains = enumerate_max_chains(u, v)
        value_poly = tau_chain(u, v)
        for _ in range(samples):
            alpha, _, total = gt_eval_resampling(u, v, chains, rng)
            result.check(
                total == value_poly.evaluate(alpha),
                f"moment-map sum disagrees at u={u!r}, v={v!r}, alpha={alpha}",
            )
    return result


def limit_schedule(rank: int, t: Fraction):
    """The degeneration weights (t, t^3, t^9, ...): later components
    vanish first."""
    return tuple(t ** (3**i) for i in range(rank))


def suite_limits(
    rs: RootSystem,
    t: Fraction = Fraction(1, 2**12),
    tolerance: Fraction = Fraction(1, 1000),
) -> SuiteResult:
    """Along the degeneration schedule, non-monotone chains vanish and
    monotone chains approach their exact contribution."""
    result = SuiteResult(f"limits[{rs.lie_type}]")
    mu = limit_schedule(rs.rank, t)
    alpha = (Fraction(1),) * rs.rank
    for u, v in bruhat_pairs(rs):
        surviving = set(enumerate_c0(u, v))
        for gamma in enumerate_max_chains(u, v):
            value = gt_term_eval(gamma, v, mu, alpha)
            if gamma in surviving:
                target = chain_contribution(gamma, v).evaluate(alpha)
                result.check(
                    abs(value - target) <= tolerance * abs(target),
                    f"surviving chain off target at u={u!r}, v={v!r}: "
                    f"{value} vs {target}",
                )
            else:
                result.check(
                    abs(value) <= tolerance,
                    f"vanishing chain too large at u={u!r}, v={v!r}: {value}",
                )
    return result


def suite_equivalence_typea(
    n: int,
    pair_sample: int | None = None,
    seed: int = DEFAULT_SEED,
) -> SuiteResult:
    """Chain-to-subword bijection with termwise equal contributions."""
    result = SuiteResult(f"equivalence-typeA[S{n}]")
    rs = root_system("A", n - 1)
    elements = enumerate_elements(rs)
    perms = [element_to_perm(el) for el in elements]
    pairs = [(pu, pv) for pu in perms for pv in perms]
    if pair_sample is not None and pair_sample < len(pairs):
        rng = random.Random(seed)
        pairs = rng.sample(pairs, pair_sample)
    for pu, pv in pairs:
        report = verify_equivalence(pu, pv)
        result.check(
            report.ok,
            f"equivalence fails at u={pu}, v={pv}: "
            f"{report.chain_count} chains vs {report.subword_count} subwords, "
            f"{len(report.contribution_mismatches)} mismatches",
        )
    return result


def suite_lemmas(rs: RootSystem) -> SuiteResult:
    """Exhaustive checks of the order-theoretic and weight-drop lemmas."""
    result = SuiteResult(f"lemmas[{rs.lie_type}]")
    elements = enumerate_elements(rs)
    weights = rs.fundamental_weights
    e = identity(rs)

    # Weight differences p omega_i - q omega_i are nonnegative for p < q.
    strict_pairs = [
        (p, q)
        for p in elements
        for q in elements
        if p != q and bruhat_leq(p, q)
    ]
    for p, q in strict_pairs:
        for omega in weights:
            diff = tuple(
                a - b for a, b in zip(p.act(omega), q.act(omega))
            )
            result.check(
                all(c >= 0 for c in diff),
                f"weight difference has a negative coordinate: p={p!r}, q={q!r}",
            )

    # h(p, q) equals the minimum letter of a reduced word for p^-1 q.
    for p in elements:
        for q in elements:
            h = h_pair(p, q)
            if p == q:
                result.check(h == INFINITY, f"h(p, p) != infinity at p={p!r}")
            else:
                word = (p.inverse() * q).canonical_word
                result.check(
                    h == min(word),
                    f"h mismatch at p={p!r}, q={q!r}: {h} vs min{word}",
                )

    # Sandwich and monotonicity statements on triples p < q < r.
    for p, r in strict_pairs:
        between = [
            q
            for q in elements
            if q != p and q != r and bruhat_leq(p, q) and bruhat_leq(q, r)
        ]
        h_pr = h_pair(p, r)
        fixed = [
            i
            for i, omega in enumerate(weights)
            if p.act(omega) == r.act(omega)
        ]
        for q in between:
            for i in fixed:
                omega = weights[i]
                result.check(
                    p.act(omega) == q.act(omega),
                    f"sandwich fails at p={p!r}, q={q!r}, r={r!r}, i={i + 1}",
                )
            result.check(
                h_pr <= h_pair(p, q) and h_pr <= h_pair(q, r),
                f"h monotonicity fails at p={p!r}, q={q!r}, r={r!r}",
            )

    # Ascending reflection steps: h(p, p s_beta) = h(beta).
    for p in elements:
        for beta in rs.positive_roots:
            if not is_positive(p.act(beta)):
                continue
            q = p * reflection(rs, beta)
            result.check(
                h_pair(p, q) == h_root(beta),
                f"h of an ascending step differs from h of its root at p={p!r}, beta={beta}",
            )

    # Weight drops match their closed forms, with the announced
    # decomposition existing and the root/twice-root kind as classified.
    for u in elements:
        if u == e:
            continue
        j = h_pair(e, u)
        drop, kind = omega_drop(u, j)
        matches = _technical_drop_forms(rs, u, j)
        result.check(
            len(matches) == 1,
            f"expected exactly one decomposition at u={u!r}, found {len(matches)}",
        )
        if len(matches) == 1:
            form, expected_kind = matches[0]
            result.check(
                drop == form and kind == expected_kind,
                f"weight drop mismatch at u={u!r}: {drop} ({kind}) vs "
                f"{form} ({expected_kind})",
            )
        result.check(
            h_root(drop) == j,
            f"weight drop has wrong h at u={u!r}",
        )
        if rs.lie_type.family == "A":
            perm = element_to_perm(u)
            n = rs.rank + 1
            expected = tuple(
                1 if j <= k <= perm[j - 1] - 1 else 0 for k in range(1, n)
            )
            result.check(
                drop == expected,
                f"type A drop is not x_j - x_u(j) at u={u!r}",
            )
    return result


def _prefix_reduced_quotient(u, prefix_word):
    """The w with u = s_prefix w and lengths adding, or None.

    Left-multiplying by the prefix letters in order builds the inverse of
    the prefix product, since the letters are involutions.
    """
    rs = u.rs
    w = u
    for letter in prefix_word:
        w = simple_reflection(rs, letter) * w
    if w.length == u.length - len(prefix_word):
        return w
    return None


def _technical_drop_forms(rs, u, j):
    """All decompositions of u announced by the weight-drop analysis,
    with the closed form each one yields and its kind."""
    n = rs.rank
    family = rs.lie_type.family
    e_h = lambda w: h_pair(identity(rs), w)
    matches = []
    # Descending-run prefix s_k s_{k-1} ... s_j.
    for k in range(j, n + 1):
        prefix = tuple(range(k, j - 1, -1))
        w = _prefix_reduced_quotient(u, prefix)
        if w is not None and e_h(w) > j:
            if family == "B" and k == n and j < n:
                form = tuple(
                    (2 if a == n else (1 if j <= a <= n - 1 else 0))
                    for a in range(1, n + 1)
                )
            else:
                form = tuple(1 if j <= a <= k else 0 for a in range(1, n + 1))
            matches.append((form, "root"))
    if family in ("B", "C"):
        # Turnaround prefix s_t ... s_{n-1} s_n s_{n-1} ... s_j.
        for t in range(j, n):
            prefix = tuple(range(t, n + 1)) + tuple(range(n - 1, j - 1, -1))
            w = _prefix_reduced_quotient(u, prefix)
            if w is not None and e_h(w) > j:
                coords = []
                for a in range(1, n + 1):
                    if j <= a <= t - 1:
                        coords.append(1)
                    elif t <= a <= n - 1:
                        coords.append(2)
                    elif a == n:
                        coords.append(2 if family == "B" else 1)
                    else:
                        coords.append(0)
                kind = "twice-root" if family == "B" and t == j else "root"
                matches.append((tuple(coords), kind))
    return matches


SUITES = {
    "oracle": suite_oracle,
    "characterization": suite_characterization,
    "positivity": suite_positivity,
    "gkm": suite_gkm,
    "gt": suite_gt,
    "limits": suite_limits,
    "lemmas": suite_lemmas,
}
