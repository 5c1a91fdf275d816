"""Branching data of the conformal embedding so(2r+1) + so(2s+1) -> so(2d+1),
d = 2rs + r + s: conformality check, trace anomalies, the branching pair
lists B(Lambda), sewing exponents, and rank-level comparison reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .fusion import get_table, level1_table
from .rootsys import Weight, killing_form, require_rank, root_system
from .weights import (
    check_level,
    sigma,
    star,
    transpose,
    weight_of_young,
    young_diagrams,
)

LAMBDA_LABELS = ("0", "1", "d")


class BranchingError(ValueError):
    """Inconsistent branching data (bad exponent or inadmissible pair)."""


@dataclass(frozen=True)
class EmbeddingParams:
    r: int
    s: int

    def __post_init__(self):
        require_rank(self.r)
        require_rank(self.s)

    @property
    def d(self) -> int:
        return 2 * self.r * self.s + self.r + self.s

    @property
    def levels(self) -> tuple[int, int]:
        """(level of so(2r+1), level of so(2s+1)) = the Dynkin multi-index."""
        return (2 * self.s + 1, 2 * self.r + 1)


def so_dim(n: int) -> int:
    return n * (n - 1) // 2

def so_dual_coxeter(n: int) -> int:
    return n - 2


def is_conformal(r: int, s: int, index: tuple[int, int] | None = None) -> bool:
    """Conformal-embedding criterion in exact rational arithmetic:

    sum_i  d_i * dim(g_i) / (h_i + d_i)  =  dim(g) / (h + 1),

    with Dynkin multi-index d = (2s+1, 2r+1) for the tensor embedding."""
    p = EmbeddingParams(r, s)
    d1, d2 = index if index is not None else p.levels
    n1, n2, n = 2 * r + 1, 2 * s + 1, 2 * p.d + 1
    lhs = Fraction(d1 * so_dim(n1), so_dual_coxeter(n1) + d1) + Fraction(
        d2 * so_dim(n2), so_dual_coxeter(n2) + d2
    )
    rhs = Fraction(so_dim(n), so_dual_coxeter(n) + 1)
    return lhs == rhs


def trace_anomaly(lam: Weight, ell: int) -> Fraction:
    """(lam, lam + 2 rho) / (2 (h_vee + ell)) for so(2r+1), h_vee = 2r-1."""
    check_level(lam, ell)
    r = lam.rank
    rho = root_system(r).rho
    shifted = tuple(c + 2 * p for c, p in zip(lam.coords, rho))
    return killing_form(lam.coords, shifted) / (2 * (2 * r - 1 + ell))


def lambda_weight(label: str, d: int) -> Weight:
    """The level-one so(2d+1) weight named by "0", "1" or "d"."""
    if label == "0":
        return Weight.zero(d)
    if label == "1":
        return Weight.fundamental(d, 1)
    if label == "d":
        return Weight.fundamental(d, d)
    raise ValueError(f"Lambda label must be one of {LAMBDA_LABELS}, got {label!r}")


@dataclass(frozen=True)
class BranchTriple:
    """An admissible (lam, mu, Lambda) with its sewing exponent."""

    lam: Weight
    mu: Weight
    Lambda: str
    exponent: int
    rule: str = field(default="", compare=False)


def sewing_exponent(lam: Weight, mu: Weight, Lambda: str, r: int, s: int) -> int:
    """m = Delta_lam + Delta_mu - Delta_Lambda; a branching pair must give a
    nonnegative integer."""
    p = EmbeddingParams(r, s)
    m = (
        trace_anomaly(lam, p.levels[0])
        + trace_anomaly(mu, p.levels[1])
        - trace_anomaly(lambda_weight(Lambda, p.d), 1)
    )
    if m.denominator != 1 or m < 0:
        raise BranchingError(
            f"sewing exponent for ({lam}; {mu}; omega_{Lambda}) is {m}, "
            "not a nonnegative integer: the pair is not a branching pair"
        )
    return int(m)


def branch_pairs(Lambda: str, r: int, s: int) -> tuple[BranchTriple, ...]:
    """The branching pairs B(Lambda) for Lambda in {omega_0, omega_1, omega_d}.

    For the vacuum and vector nodes, each diagram Y in the r x s box pairs
    with its transpose, with single sigma-twists flipping the node by the
    parity of |Y|.  For the spin node, Y + omega_r pairs with Y* + omega_s,
    with the sigma-twist on the left for Y in the (s-1)-column box and on the
    right otherwise.
    """
    p = EmbeddingParams(r, s)
    ell_l, ell_r = p.levels
    out: list[BranchTriple] = []

    def emit(lam, mu, rule):
        out.append(
            BranchTriple(lam, mu, Lambda, sewing_exponent(lam, mu, Lambda, r, s), rule)
        )

    if Lambda in ("0", "1"):
        want_parity = 0 if Lambda == "0" else 1
        for y in young_diagrams(r, s):
            lam = weight_of_young(y, r)
            mu = weight_of_young(transpose(y), s)
            if y.size % 2 == want_parity:
                emit(lam, mu, f"(Y, Y^T) with Y={y}")
            else:
                emit(sigma(lam, ell_l), mu, f"(sigma(Y), Y^T) with Y={y}")
                emit(lam, sigma(mu, ell_r), f"(Y, sigma(Y^T)) with Y={y}")
    elif Lambda == "d":
        for y in young_diagrams(r, s):
            lam = weight_of_young(y, r, spin=True)
            mu = weight_of_young(star(y, r, s), s, spin=True)
            emit(lam, mu, f"(Y+omega_r, Y*+omega_s) with Y={y}")
            if y.fits(r, s - 1):
                emit(
                    sigma(lam, ell_l),
                    mu,
                    f"(sigma(Y+omega_r), Y*+omega_s) with Y={y}",
                )
            else:
                emit(
                    lam,
                    sigma(mu, ell_r),
                    f"(Y+omega_r, sigma(Y*+omega_s)) with Y={y}",
                )
    else:
        raise ValueError(f"Lambda label must be one of {LAMBDA_LABELS}")
    return tuple(out)


def find_branch_rule(lam: Weight, mu: Weight, Lambda: str, r: int, s: int) -> str | None:
    """The bullet that admits (lam, mu) in B(Lambda), or None."""
    for tri in branch_pairs(Lambda, r, s):
        if tri.lam == lam and tri.mu == mu:
            return tri.rule
    return None


@dataclass
class RankLevelReport:
    r: int
    s: int
    source: tuple[Weight, ...]
    target: tuple[Weight, ...]
    Lambdas: tuple[str, ...]
    dim_source: int
    dim_target: int
    dim_level1: int
    certificates: tuple[str, ...]


def ranklevel_report(
    r: int,
    s: int,
    source,
    target,
    Lambdas,
    cache_dir: str | None = None,
    strict: bool = True,
) -> RankLevelReport:
    """Dimensions of the three conformal blocks of a rank-level configuration.

    Each point must carry a branching pair (lam_i, mu_i) in B(Lambda_i); with
    strict=False a failed admissibility check is recorded in the certificate
    instead of raised.  The level-one block dimension must be 1 for the
    rank-level map to be defined up to scalar.
    """
    p = EmbeddingParams(r, s)
    source = tuple(source)
    target = tuple(target)
    Lambdas = tuple(Lambdas)
    if not len(source) == len(target) == len(Lambdas):
        raise ValueError("source, target and Lambda lists must have equal length")
    certs = []
    for lam, mu, L in zip(source, target, Lambdas):
        rule = find_branch_rule(lam, mu, L, r, s)
        if rule is None:
            msg = f"({lam}; {mu}) not admitted by the B(omega_{L}) rules"
            if strict:
                raise BranchingError(msg)
            certs.append(msg)
        else:
            certs.append(rule)
    ring_l = get_table(r, p.levels[0], cache_dir)
    ring_r = get_table(s, p.levels[1], cache_dir)
    ring_1 = level1_table(p.d)
    dim_source = ring_l.dim_genus0(source)
    dim_target = ring_r.dim_genus0(target)
    dim_level1 = ring_1.dim_genus0([lambda_weight(L, p.d) for L in Lambdas])
    return RankLevelReport(
        r, s, source, target, Lambdas, dim_source, dim_target, dim_level1, tuple(certs)
    )


def _w(text: str) -> Weight:
    return Weight.parse(text)


# Bundled rank-level comparison configurations.  Each has a one-dimensional
# level-one block, so the rank-level map is defined up to scalar, and the
# source/target dimensions differ: (4,5), (3,4) and (14,20).  Configuration 1
# passes the strict bullet-admissibility check; 2 and 3 are evaluated with
# strict=False, so per-point checks land in the report certificates instead
# of raising.
RANKLEVEL_EXAMPLES = {
    1: dict(
        r=2,
        s=3,
        source=(_w("5/2,1/2"), _w("5/2,1/2"), _w("1,0"), _w("1,0")),
        target=(_w("5/2,3/2,3/2"), _w("5/2,3/2,3/2"), _w("1,0,0"), _w("1,0,0")),
        Lambdas=("d", "d", "1", "1"),
        strict=True,
    ),
    2: dict(
        r=3,
        s=4,
        source=(_w("5/2,5/2,3/2"), _w("5/2,5/2,3/2"), _w("2,1,0")),
        target=(_w("7/2,5/2,5/2,1/2"), _w("7/2,5/2,5/2,1/2"), _w("2,1,0,0")),
        Lambdas=("d", "d", "1"),
        strict=False,
    ),
    3: dict(
        r=4,
        s=3,
        source=(_w("5/2,5/2,3/2,3/2"), _w("5/2,5/2,3/2,3/2"), _w("3,2,1,1")),
        target=(_w("9/2,5/2,1/2"), _w("9/2,5/2,1/2"), _w("3,2,1")),
        Lambdas=("d", "d", "1"),
        strict=False,
    ),
}


def ranklevel_example(n: int, cache_dir: str | None = None) -> RankLevelReport:
    if n not in RANKLEVEL_EXAMPLES:
        raise ValueError(f"example must be one of {sorted(RANKLEVEL_EXAMPLES)}")
    cfg = RANKLEVEL_EXAMPLES[n]
    return ranklevel_report(
        cfg["r"],
        cfg["s"],
        cfg["source"],
        cfg["target"],
        cfg["Lambdas"],
        cache_dir=cache_dir,
        strict=cfg["strict"],
    )
