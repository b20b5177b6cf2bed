"""Closed-form tail bounds, second-moment terms and triangle-count identities.

Every asymptotic ``o(1)`` correction is taken to be zero; ``ML3Report`` records
this as ``asymptotic_slack = 0.0`` and callers may pass an explicit slack instead.
Counting is exact integer arithmetic; only the exponential bounds use floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from ._cutscan import MAX_VERTICES, scan_cuts


@dataclass(frozen=True)
class BoundReport:
    value: float
    terms: dict = field(default_factory=dict)


def _clamp(x: float) -> float:
    return min(1.0, max(0.0, x))


def phi(x: float) -> float:
    """``(1+x) log(1+x) - x`` for ``x >= -1``, with ``phi(-1) = 1``."""
    if x < -1:
        raise ValueError(f"phi needs x >= -1, got {x}")
    if x == -1:
        return 1.0
    return (1 + x) * math.log1p(x) - x


def _check_mu_lambda(mu: float, lam: float) -> None:
    if mu <= 0:
        raise ValueError(f"mu must be positive, got {mu}")
    if lam < 0:
        raise ValueError(f"lambda must be non-negative, got {lam}")


def chernoff_upper(mu: float, lam: float) -> BoundReport:
    """Bound on ``P(xi >= mu + lam)`` for a binomial with mean ``mu``."""
    _check_mu_lambda(mu, lam)
    value = math.exp(-lam * lam / (2 * (mu + lam / 3)))
    return BoundReport(_clamp(value), {"mu": mu, "lambda": lam})


def chernoff_lower(mu: float, lam: float) -> BoundReport:
    """Bound on ``P(xi <= mu - lam)``; ``value`` is the sharper phi form."""
    _check_mu_lambda(mu, lam)
    if lam > mu:
        raise ValueError(f"lower tail needs lambda <= mu, got {lam} > {mu}")
    phi_value = phi(-lam / mu)
    sharp = math.exp(-mu * phi_value)
    weak = math.exp(-lam * lam / (2 * mu))
    return BoundReport(
        _clamp(sharp),
        {"mu": mu, "lambda": lam, "phi": phi_value, "phi_form": sharp, "weak_form": weak},
    )


def azuma_bound(m: int, p: float, t: float) -> BoundReport:
    """``exp[-t^2 / (4 m p)]`` for a Lipschitz function of ``m`` Ber(p) variables.

    Accepted range is ``0 <= t <= 2 m p``, the range in which the moment
    generating function argument ``t / (2 m p)`` stays in ``[0, 1]``.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p}")
    if not 0 <= t <= 2 * m * p:
        raise ValueError(f"t={t} outside [0, 2mp] = [0, {2 * m * p}]")
    value = math.exp(-t * t / (4 * m * p))
    return BoundReport(_clamp(value), {"m": m, "p": p, "t": t})


def mu_no_triangle(n: int, p: float) -> float:
    """Expected number of edges of G(n, p) lying in no triangle."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} outside [0, 1]")
    return math.comb(n, 2) * p * (1 - p * p) ** (n - 2)


def second_moment_terms(n: int, p: float) -> BoundReport:
    """Upper bound on ``Var(X) / E[X]^2`` for X = edges in no triangle.

    ``E[X^2] = E[X] + sum over ordered pairs of distinct edges``; pairs split into
    vertex-disjoint ones (each below ``p^2 (1-p^2)^{2(n-4)}``) and ones sharing a
    vertex (each below ``p^2 (1-2p^2+p^3)^{n-3}``).  ``value`` is the resulting
    Chebyshev bound on ``P(X = 0)``.
    """
    if n < 5:
        raise ValueError("n must be at least 5")
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} outside [0, 1]")
    pairs = math.comb(n, 2)
    disjoint_pairs = pairs * math.comb(n - 2, 2)
    shared_pairs = pairs * 2 * (n - 2)
    disjoint = p * p * (1 - p * p) ** (2 * (n - 4))
    shared = p * p * (1 - 2 * p * p + p ** 3) ** (n - 3)
    mu = mu_no_triangle(n, p)
    terms = {
        "mu": mu,
        "disjoint_term": disjoint,
        "shared_term": shared,
        "disjoint_pairs": disjoint_pairs,
        "shared_pairs": shared_pairs,
    }
    if mu == 0:
        terms["var_ratio"] = math.inf
        return BoundReport(1.0, terms)
    second = mu + disjoint_pairs * disjoint + shared_pairs * shared
    ratio = max(0.0, (second - mu * mu) / (mu * mu))
    terms["second_moment"] = second
    terms["var_ratio"] = ratio
    return BoundReport(_clamp(ratio), terms)


# -- Goodman counts -------------------------------------------------------------------------


@dataclass(frozen=True)
class GoodmanCounts:
    """Triangles of K_n by how many edges of F they contain."""

    n: int
    f: int
    t0: int
    t1: int
    t2: int
    t3: int

    @property
    def t(self) -> tuple[int, int, int, int]:
        return (self.t0, self.t1, self.t2, self.t3)

    @property
    def incidences(self) -> int:
        """Pairs ``(e, T)`` with ``e`` in F and ``T`` a triangle through ``e``."""
        return self.f * (self.n - 2)

    def identity_holds(self) -> bool:
        return self.incidences == self.t1 + 2 * self.t2 + 3 * self.t3

    def goodman_holds(self) -> bool:
        # t1 + t2 < n^3/8, compared as integers
        return 8 * (self.t1 + self.t2) < self.n ** 3


def _adj_masks(n: int, f: Iterable[Sequence[int]]) -> tuple[list[int], int]:
    adj = [0] * n
    seen = set()
    for e in f:
        u, v = sorted((int(e[0]), int(e[1])))
        if u == v or not 0 <= u < v < n:
            raise ValueError(f"{(u, v)} is not a pair of K_{n}")
        if (u, v) in seen:
            raise ValueError(f"duplicate pair {(u, v)}")
        seen.add((u, v))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj, len(seen)


def goodman(n: int, f: Iterable[Sequence[int]]) -> GoodmanCounts:
    """Exact ``t_0..t_3`` for an edge set ``F`` of ``K_n``.

    ``t3`` counts triangles of F, ``t2`` comes from F-cherries (a 2-edge triangle
    holds one, a 3-edge triangle three) and ``t1`` is counted directly per F-edge,
    so the incidence identity stays a genuine check.
    """
    adj, size = _adj_masks(n, f)
    full = (1 << n) - 1
    cherries = sum(a.bit_count() * (a.bit_count() - 1) // 2 for a in adj)
    t1 = t3 = 0
    for x in range(n):
        for y in range(x + 1, n):
            if adj[x] >> y & 1:
                t3 += ((adj[x] & adj[y]) >> (y + 1)).bit_count()
                t1 += (full & ~(adj[x] | adj[y] | 1 << x | 1 << y)).bit_count()
    t2 = cherries - 3 * t3
    t0 = math.comb(n, 3) - t1 - t2 - t3
    return GoodmanCounts(n, size, t0, t1, t2, t3)


def goodman_bruteforce(n: int, f: Iterable[Sequence[int]]) -> GoodmanCounts:
    """Reference enumeration over all ``C(n, 3)`` triples."""
    adj, size = _adj_masks(n, f)
    t = [0, 0, 0, 0]
    for x, y, z in combinations(range(n), 3):
        k = (adj[x] >> y & 1) + (adj[x] >> z & 1) + (adj[y] >> z & 1)
        t[k] += 1
    return GoodmanCounts(n, size, *t)


# -- the triangle-density lemma chain -------------------------------------------------------


@dataclass(frozen=True)
class ML3Report:
    n: int
    f: int
    delta: float
    eta: float
    deficiency: int  # min over cuts of |F \ cut|
    hypothesis_met: bool
    counts: GoodmanCounts
    odd_count_ok: bool  # t1 + t3 >= eta n^3 / 3
    chain_ok: bool  # t1 - 3 t3 < delta n^3 + slack
    conclusion_ok: bool  # t3 > (eta - 3 delta) n^3 / 12 - slack/4
    slack: float
    asymptotic_slack: float = 0.0

    @property
    def consistent(self) -> bool:
        """The two chain steps force the conclusion (vacuous when either fails)."""
        return not (self.odd_count_ok and self.chain_ok) or self.conclusion_ok

    @property
    def status(self) -> str:
        return "ok" if self.hypothesis_met else "hypothesis not met"


def min_cut_deficiency(n: int, f: Sequence[Sequence[int]]) -> int:
    """``min over cuts of |F \\ cut|`` by exhaustive scan (``n <= 24``)."""
    f = [tuple(e) for e in f]
    return scan_cuts(n, f, [1] * len(f))[0]


def ml3_check(
    n: int,
    f: Sequence[Sequence[int]],
    delta: float,
    eta: float,
    deficiency: int | None = None,
    slack: float = 0.0,
) -> ML3Report:
    """Evaluate the premise ``|F| > (1-delta) n^2/4`` and ``|F \\ cut| > eta n^2`` for all
    cuts, and each step of the chain that turns it into a triangle lower bound."""
    f = [tuple(e) for e in f]
    if deficiency is None:
        if n > MAX_VERTICES:
            raise ValueError(f"n={n} exceeds the exhaustive cut bound; pass deficiency")
        deficiency = min_cut_deficiency(n, f)
    counts = goodman(n, f)
    n3 = n ** 3
    hyp = counts.f > (1 - delta) * n * n / 4 and deficiency > eta * n * n
    odd_ok = counts.t1 + counts.t3 >= eta * n3 / 3
    chain_ok = counts.t1 - 3 * counts.t3 < delta * n3 + slack
    conclusion_ok = counts.t3 > (eta - 3 * delta) * n3 / 12 - slack / 4
    return ML3Report(
        n=n,
        f=counts.f,
        delta=delta,
        eta=eta,
        deficiency=deficiency,
        hypothesis_met=hyp,
        counts=counts,
        odd_count_ok=odd_ok,
        chain_ok=chain_ok,
        conclusion_ok=conclusion_ok,
        slack=slack,
    )


# -- Janson ---------------------------------------------------------------------------------


def janson_triangle_bound(m: int, n: int, p: float, delta_bar: float | None = None) -> BoundReport:
    """Bound on P(no triangle of a fixed m-triangle family survives in G(n, p)).

    ``mu = m p^3`` and the pair-overlap sum is estimated from above by
    ``3 m n p^5 + mu``; a larger ``delta_bar`` only weakens the bound.
    """
    if m < 1:
        raise ValueError("need at least one triangle")
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p}")
    mu = m * p ** 3
    estimate = 3 * m * n * p ** 5 + mu
    dbar = estimate if delta_bar is None else delta_bar
    if dbar < mu:
        raise ValueError("delta_bar cannot be below mu (the diagonal terms)")
    value = math.exp(-mu * mu / (2 * dbar))
    return BoundReport(_clamp(value), {"mu": mu, "delta_bar": dbar, "delta_bar_estimate": estimate})
