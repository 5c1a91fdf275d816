"""Exact tensor and fusion multiplicities for so(2r+1), with genus-g
dimensions via the factorization recursion.

Classical tensor products use Klimyk's formula over the full weight system of
the smaller factor; level-ell fusion folds each classical component through
the shifted affine Weyl group (Kac-Walton).  Genus-g dimensions are computed
by the recursion N_g(vec) = sum_mu N_{g-1}(vec, mu, mu).
"""

from __future__ import annotations

import os
from functools import lru_cache

from .rootsys import (
    Weight,
    _dbl_rho,
    _weight_multiplicities_dbl,
    dbl,
    fold_shifted,
    require_rank,
    undbl,
    weyl_dim,
    weyl_orbit_dbl,
)
from .weights import check_level, enumerate_level

CACHE_VERSION = 1
_MAX_AFFINE_FOLDS = 10_000

# every constructed FusionTable, so CLI runs can flush caches at exit
OPEN_TABLES: list = []


@lru_cache(maxsize=None)
def _weight_system(lam_d: tuple[int, ...]) -> tuple:
    """Full weight system of V_lambda: (vector, multiplicity) doubled pairs."""
    out = []
    for dom, m in _weight_multiplicities_dbl(lam_d).items():
        for v in weyl_orbit_dbl(dom):
            out.append((v, m))
    return tuple(out)


@lru_cache(maxsize=None)
def _dim_dbl(lam_d: tuple[int, ...]) -> int:
    return weyl_dim(Weight(undbl(lam_d)))


@lru_cache(maxsize=None)
def _tensor_product_dbl(lam_d: tuple[int, ...], mu_d: tuple[int, ...]) -> dict:
    """Decomposition of V_lambda (x) V_mu as {doubled nu: multiplicity}."""
    r = len(lam_d)
    rho = _dbl_rho(r)
    if _dim_dbl(mu_d) > _dim_dbl(lam_d):
        lam_d, mu_d = mu_d, lam_d
    shift = tuple(a + b for a, b in zip(lam_d, rho))
    acc: dict = {}
    for v, m in _weight_system(mu_d):
        folded = fold_shifted(tuple(a + b for a, b in zip(shift, v)))
        if folded is None:
            continue
        dom, sign = folded
        key = tuple(a - b for a, b in zip(dom, rho))
        acc[key] = acc.get(key, 0) + sign * m
    out = {k: v for k, v in acc.items() if v}
    assert all(v > 0 for v in out.values()), "Klimyk alternation went negative"
    return out


def tensor_multiplicity(lam: Weight, mu: Weight, nu: Weight) -> int:
    """dim Hom(V_lam (x) V_mu (x) V_nu, C); B_r modules are self-dual, so this
    is the multiplicity of V_nu in V_lam (x) V_mu."""
    key = sorted([dbl(lam.coords), dbl(mu.coords), dbl(nu.coords)])
    return _tensor_product_dbl(key[0], key[1]).get(key[2], 0)


def _affine_fold(x: tuple[int, ...], k2: int):
    """Fold a shifted doubled vector through the level-ell affine Weyl group.

    k2 is twice (ell + h_vee).  Returns (alcove interior point, sign) or None
    on a wall.
    """
    sign = 1
    for _ in range(_MAX_AFFINE_FOLDS):
        folded = fold_shifted(x)
        if folded is None:
            return None
        x, s = folded
        sign *= s
        t = x[0] + x[1]
        if t == k2:
            return None
        if t < k2:
            return x, sign
        c = t - k2
        x = (x[0] - c, x[1] - c) + x[2:]
        sign = -sign
    raise RuntimeError("affine folding failed to terminate")


@lru_cache(maxsize=None)
def _fusion_product_dbl(lam_d, mu_d, r: int, ell: int) -> dict:
    rho = _dbl_rho(r)
    k2 = 2 * (ell + 2 * r - 1)
    acc: dict = {}
    for nu_d, m in _tensor_product_dbl(lam_d, mu_d).items():
        folded = _affine_fold(tuple(a + b for a, b in zip(nu_d, rho)), k2)
        if folded is None:
            continue
        dom, sign = folded
        key = tuple(a - b for a, b in zip(dom, rho))
        acc[key] = acc.get(key, 0) + sign * m
    out = {k: v for k, v in acc.items() if v}
    assert all(v > 0 for v in out.values()), "Kac-Walton alternation went negative"
    return out


def fusion_multiplicity(lam: Weight, mu: Weight, nu: Weight, ell: int) -> int:
    """Three-point genus-0 dimension N_{lam,mu,nu} at level ell."""
    for w in (lam, mu, nu):
        check_level(w, ell)
    r = lam.rank
    a, b, c = sorted([dbl(lam.coords), dbl(mu.coords), dbl(nu.coords)])
    return _fusion_product_dbl(a, b, r, ell).get(c, 0)


class FusionTable:
    """Fusion multiplicities of so(2r+1) at level ell, with optional disk cache.

    The table is filled one product row at a time; computed rows can be
    persisted as a sorted text artifact, one line per entry "lam|mu|nu|N",
    under a "B r level ell version 1" header.
    """

    def __init__(self, r: int, ell: int, cache_dir: str | None = None):
        require_rank(r)
        self.rank = r
        self.level = ell
        self.cache_dir = cache_dir
        self._products: dict[tuple, dict] = {}
        self._memo_genus: dict = {}
        if cache_dir is not None:
            self._load()
        OPEN_TABLES.append(self)

    # -- ring interface -------------------------------------------------

    def weights(self) -> tuple[Weight, ...]:
        return enumerate_level(self.rank, self.level)

    def product(self, lam: Weight, mu: Weight) -> dict[Weight, int]:
        check_level(lam, self.level)
        check_level(mu, self.level)
        key = tuple(sorted([lam.coords, mu.coords]))
        row = self._products.get(key)
        if row is None:
            raw = _fusion_product_dbl(
                dbl(key[0]), dbl(key[1]), self.rank, self.level
            )
            row = {Weight(undbl(k)): v for k, v in raw.items()}
            self._products[key] = row
        return row

    def triple(self, lam: Weight, mu: Weight, nu: Weight) -> int:
        return self.product(lam, mu).get(nu, 0)

    def dim_genus0(self, lams) -> int:
        """n-point genus-0 dimension, contracting in input order (the result
        is order-independent); n < 3 is padded with the vacuum weight."""
        lams = list(lams)
        zero = Weight.zero(self.rank)
        while len(lams) < 3:
            lams.append(zero)
        vec = {lams[0]: 1}
        for mid in lams[1:-1]:
            new: dict = {}
            for nu, c in vec.items():
                for tau, n in self.product(nu, mid).items():
                    new[tau] = new.get(tau, 0) + c * n
            vec = new
        return vec.get(lams[-1], 0)

    def dim_genus_g(self, g: int, lams) -> int:
        """N_g(vec) = sum over mu of N_{g-1}(vec, mu, mu); base case genus 0."""
        if g < 0:
            raise ValueError("genus must be >= 0")
        lams = tuple(sorted(lams, key=lambda w: w.coords))
        if g == 0:
            return self.dim_genus0(lams)
        key = (g, lams)
        val = self._memo_genus.get(key)
        if val is None:
            val = sum(
                self.dim_genus_g(g - 1, lams + (mu, mu)) for mu in self.weights()
            )
            self._memo_genus[key] = val
        return val

    # -- persistence ----------------------------------------------------

    @property
    def cache_path(self) -> str | None:
        if self.cache_dir is None:
            return None
        return os.path.join(
            self.cache_dir, f"B{self.rank}_level{self.level}.fusion.txt"
        )

    def _header(self) -> str:
        return f"B {self.rank} level {self.level} version {CACHE_VERSION}"

    def _load(self) -> None:
        path = self.cache_path
        if path is None or not os.path.exists(path):
            return
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        if not lines or lines[0] != self._header():
            return  # version bump or foreign file: ignore, will be rebuilt
        for line in lines[1:]:
            if not line.strip():
                continue
            a, b, c, n = line.split("|")
            lam, mu, nu = Weight.parse(a), Weight.parse(b), Weight.parse(c)
            key = tuple(sorted([lam.coords, mu.coords]))
            self._products.setdefault(key, {})
            if int(n):
                self._products[key][nu] = int(n)

    def save(self) -> None:
        path = self.cache_path
        if path is None:
            return
        os.makedirs(self.cache_dir, exist_ok=True)
        lines = []
        for (a, b), row in self._products.items():
            for nu, n in row.items():
                lines.append(f"{Weight(a)}|{Weight(b)}|{nu}|{n}")
        lines.sort()
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self._header() + "\n")
            fh.write("\n".join(lines))
            if lines:
                fh.write("\n")


class LevelOneTable:
    """Closed-form level-one fusion ring of so(2d+1) on {omega_0, omega_1,
    omega_d}: omega_1 x omega_1 = omega_0, omega_1 x omega_d = omega_d,
    omega_d x omega_d = omega_0 + omega_1 (Ising-type rules)."""

    def __init__(self, d: int):
        require_rank(d)
        self.rank = d
        self.level = 1
        self._w0 = Weight.zero(d)
        self._w1 = Weight.fundamental(d, 1)
        self._wd = Weight.fundamental(d, d)
        self._memo_genus: dict = {}

    def weights(self) -> tuple[Weight, ...]:
        return (self._w0, self._w1, self._wd)

    def product(self, lam: Weight, mu: Weight) -> dict[Weight, int]:
        w0, w1, wd = self._w0, self._w1, self._wd
        for w in (lam, mu):
            if w not in (w0, w1, wd):
                raise ValueError(f"{w} is not a level-one weight of so(2d+1)")
        if lam == w0:
            return {mu: 1}
        if mu == w0:
            return {lam: 1}
        if lam == w1 and mu == w1:
            return {w0: 1}
        if wd in (lam, mu) and w1 in (lam, mu):
            return {wd: 1}
        return {w0: 1, w1: 1}

    def triple(self, lam: Weight, mu: Weight, nu: Weight) -> int:
        return self.product(lam, mu).get(nu, 0)

    dim_genus0 = FusionTable.dim_genus0
    dim_genus_g = FusionTable.dim_genus_g


@lru_cache(maxsize=None)
def get_table(r: int, ell: int, cache_dir: str | None = None) -> FusionTable:
    return FusionTable(r, ell, cache_dir)


def level1_table(d: int) -> LevelOneTable:
    return LevelOneTable(d)


def dim_genus0(lams, r: int, ell: int, cache_dir: str | None = None) -> int:
    return get_table(r, ell, cache_dir).dim_genus0(lams)


def dim_genus_g(g: int, lams, r: int, ell: int, cache_dir: str | None = None) -> int:
    return get_table(r, ell, cache_dir).dim_genus_g(g, lams)
