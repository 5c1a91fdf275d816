"""Exact root-system data and Weyl-group machinery for type B_r (so(2r+1), r >= 2).

Weights live in L-coordinates: a dominant weight is a weakly decreasing tuple
of nonnegative rationals, all integral or all half-odd-integral.  The bilinear
form is normalized so that (theta, theta) = 2 for the highest root
theta = L1 + L2; in L-coordinates it is the plain dot product.

Internally most routines work on "doubled" coordinates (tuples of ints equal
to twice the L-coordinates) so the hot folding loops stay in integer
arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

HALF = Fraction(1, 2)


class RankError(ValueError):
    """Rank outside the supported range: so(2r+1) needs r >= 2."""


def require_rank(r: int) -> None:
    if r < 2:
        raise RankError(
            f"so(2r+1) requires r >= 2 (got r={r}); "
            "the highest-root convention theta = L1+L2 breaks at r = 1"
        )


@dataclass(frozen=True, order=True)
class Weight:
    """A dominant weight of so(2r+1) in L-coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        cs = self.coords
        if len(cs) < 2:
            require_rank(len(cs))
        if any(c < 0 for c in cs):
            raise ValueError(f"not dominant (negative coordinate): {cs}")
        if any(cs[i] < cs[i + 1] for i in range(len(cs) - 1)):
            raise ValueError(f"not dominant (coordinates increase): {cs}")
        pars = {c.denominator for c in cs}
        if not pars <= {1, 2} or len(pars) > 1:
            raise ValueError(f"coordinates must be all integral or all half-odd: {cs}")

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def level(self) -> Fraction:
        """(lambda, theta) = b1 + b2."""
        return self.coords[0] + self.coords[1]

    @property
    def is_so(self) -> bool:
        """True iff every coordinate is integral (exponentiates to SO(2r+1))."""
        return self.coords[0].denominator == 1

    @property
    def is_spin(self) -> bool:
        return not self.is_so

    def omega_coords(self) -> tuple[int, ...]:
        """Coefficients (a_1, ..., a_r) in the fundamental-weight basis."""
        b = self.coords
        r = self.rank
        a = [int(b[i] - b[i + 1]) for i in range(r - 1)]
        a.append(int(2 * b[r - 1]))
        return tuple(a)

    @classmethod
    def from_omega(cls, a: tuple[int, ...]) -> "Weight":
        r = len(a)
        b = []
        for i in range(r):
            tail = sum(a[i:r - 1]) + Fraction(a[r - 1], 2)
            b.append(Fraction(tail))
        return cls(tuple(b))

    @classmethod
    def zero(cls, r: int) -> "Weight":
        return cls((Fraction(0),) * r)

    @classmethod
    def fundamental(cls, r: int, i: int) -> "Weight":
        """omega_i; omega_0 is the zero weight, omega_r the spin weight."""
        require_rank(r)
        if i == 0:
            return cls.zero(r)
        if i == r:
            return cls((HALF,) * r)
        if not 0 < i < r:
            raise ValueError(f"fundamental weight index {i} out of range for rank {r}")
        return cls(tuple(Fraction(1) if k < i else Fraction(0) for k in range(r)))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse comma-separated L-coordinates, halves written as "k/2"."""
        return cls(tuple(Fraction(part.strip()) for part in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class RootSystemB:
    """Root data of B_r in L-coordinates."""

    rank: int
    positive_roots: tuple[tuple[Fraction, ...], ...]
    rho: tuple[Fraction, ...]
    dual_coxeter: int
    highest_root: tuple[Fraction, ...]


@lru_cache(maxsize=None)
def root_system(r: int) -> RootSystemB:
    require_rank(r)
    roots = []

    def vec(pairs):
        v = [Fraction(0)] * r
        for idx, val in pairs:
            v[idx] = Fraction(val)
        return tuple(v)

    for i in range(r):
        for j in range(i + 1, r):
            roots.append(vec([(i, 1), (j, -1)]))
            roots.append(vec([(i, 1), (j, 1)]))
    for i in range(r):
        roots.append(vec([(i, 1)]))
    rho = tuple(Fraction(2 * r - 2 * i - 1, 2) for i in range(r))
    theta = vec([(0, 1), (1, 1)])
    return RootSystemB(r, tuple(roots), rho, 2 * r - 1, theta)


def killing_form(x, y) -> Fraction:
    """Normalized invariant form; the dot product in L-coordinates."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(x, y)), Fraction(0))


# -- doubled-coordinate helpers (ints equal to 2*L-coordinate) ---------------

def dbl(coords) -> tuple[int, ...]:
    out = []
    for c in coords:
        f = Fraction(c)
        out.append(int(2 * f))
    return tuple(out)


def undbl(t: tuple[int, ...]) -> tuple[Fraction, ...]:
    return tuple(Fraction(c, 2) for c in t)


@lru_cache(maxsize=None)
def _dbl_rho(r: int) -> tuple[int, ...]:
    return tuple(2 * r - 2 * i - 1 for i in range(r))


@lru_cache(maxsize=None)
def _dbl_positive_roots(r: int) -> tuple[tuple[int, ...], ...]:
    return tuple(dbl(a) for a in root_system(r).positive_roots)


def fold_shifted(x: tuple[int, ...]):
    """Fold a rho-shifted doubled vector to the dominant chamber.

    Returns (dominant_tuple, sign) where sign is the determinant of the
    signed permutation used, or None when x lies on a reflection wall
    (a zero coordinate or two coordinates of equal absolute value).
    """
    negs = 0
    a = []
    for c in x:
        if c == 0:
            return None
        if c < 0:
            negs += 1
            a.append(-c)
        else:
            a.append(c)
    sign = -1 if negs & 1 else 1
    # insertion sort (descending), tracking permutation parity; ranks are small
    for i in range(1, len(a)):
        v = a[i]
        j = i
        while j > 0 and a[j - 1] < v:
            a[j] = a[j - 1]
            j -= 1
            sign = -sign
        a[j] = v
    for i in range(len(a) - 1):
        if a[i] == a[i + 1]:
            return None
    return tuple(a), sign


def dominant_conjugate_shifted(v):
    """Fold a rho-shifted vector to its dominant Weyl representative.

    Returns (Weight, sign) with the determinant of the folding element, or
    None when v lies on a wall.
    """
    folded = fold_shifted(dbl(v))
    if folded is None:
        return None
    dom, sign = folded
    return Weight(tuple(Fraction(c, 2) for c in dom)), sign


def _dominant_weights_below(lam_d: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Dominant weights mu <= lam (doubled coords): partial sums of lam-mu
    are nonnegative (automatically integral within a parity class)."""
    r = len(lam_d)
    out = []

    def rec(prefix, i, deficit):
        # deficit = sum(lam[:i]) - sum(prefix), in doubled units (>= 0 kept)
        if i == r:
            out.append(tuple(prefix))
            return
        hi = min(lam_d[i] + deficit, prefix[-1] if prefix else lam_d[0])
        lo = lam_d[i] & 1  # smallest nonnegative value in the parity class
        v = hi - ((hi - lo) % 2 if hi >= lo else 0)
        while v >= lo:
            rec(prefix + [v], i + 1, deficit + lam_d[i] - v)
            v -= 2
    rec([], 0, 0)
    return out


@lru_cache(maxsize=None)
def _weight_multiplicities_dbl(lam_d: tuple[int, ...]) -> dict:
    """Freudenthal recursion over the dominant weights of V_lambda.

    All inner products are computed as raw doubled dot products (4x the true
    value); the formula is homogeneous so the factor cancels.
    """
    r = len(lam_d)
    rho = _dbl_rho(r)
    roots = _dbl_positive_roots(r)

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    lam_rho = tuple(a + b for a, b in zip(lam_d, rho))
    lam_norm = dot(lam_rho, lam_rho)

    doms = _dominant_weights_below(lam_d)
    # height of lam - mu in the simple-root basis = sum of partial sums
    def height(mu):
        h = 0
        run = 0
        for a, b in zip(lam_d, mu):
            run += a - b
            h += run
        return h

    doms.sort(key=height)
    mult: dict = {}

    for mu in doms:
        if mu == lam_d:
            mult[mu] = 1
            continue
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        denom = lam_norm - dot(mu_rho, mu_rho)
        num = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                # multiplicities are Weyl-invariant: look up the dominant
                # representative (weights along a root string form an
                # interval, so the first miss ends the inner sum)
                rep = tuple(sorted((abs(c) for c in nu), reverse=True))
                m = mult.get(rep, 0)
                if m == 0:
                    break
                num += dot(nu, alpha) * m
                k += 1
        assert denom > 0 and (2 * num) % denom == 0, (lam_d, mu)
        mult[mu] = 2 * num // denom
    return mult


def weight_multiplicities(lam: Weight) -> dict[Weight, int]:
    """Multiplicity of each dominant weight of the irreducible module V_lambda."""
    raw = _weight_multiplicities_dbl(dbl(lam.coords))
    return {Weight(undbl(k)): v for k, v in raw.items()}


def orbit_size(coords) -> int:
    """Size of the Weyl orbit (signed permutations) of a dominant vector."""
    d = dbl(coords)
    r = len(d)
    stab = 1
    zeros = sum(1 for c in d if c == 0)
    stab *= factorial(zeros) * 2 ** zeros
    for v in set(c for c in d if c != 0):
        stab *= factorial(sum(1 for c in d if c == v))
    return 2 ** r * factorial(r) // stab


def weyl_orbit_dbl(dom: tuple[int, ...]):
    """All distinct signed permutations of a dominant doubled vector."""
    for perm in set(itertools.permutations(dom)):
        nz = [i for i, c in enumerate(perm) if c != 0]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            v = list(perm)
            for i, s in zip(nz, signs):
                v[i] *= s
            yield tuple(v)


def weyl_dim(lam: Weight) -> int:
    """Weyl dimension formula for V_lambda."""
    r = lam.rank
    rho = _dbl_rho(r)
    x = tuple(a + b for a, b in zip(dbl(lam.coords), rho))
    num = Fraction(1)
    for alpha in _dbl_positive_roots(r):
        xa = sum(a * b for a, b in zip(x, alpha))
        ra = sum(a * b for a, b in zip(rho, alpha))
        num *= Fraction(xa, ra)
    assert num.denominator == 1
    return int(num)
