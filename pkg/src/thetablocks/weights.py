"""Level-bounded weight enumeration, the affine diagram automorphism sigma,
and Young-diagram calculus (transpose, box complement, star, sigma-orbits)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .rootsys import HALF, Weight, require_rank

SO = "SO"
SPIN = "SPIN"

SO_PAIR = "SO_PAIR"
SPIN_PAIR = "SPIN_PAIR"
SPIN_FIXED = "SPIN_FIXED"


class LevelError(ValueError):
    """Weight does not satisfy the level bound (lambda, theta) <= ell."""


@dataclass(frozen=True)
class LevelWeight:
    weight: Weight
    level_bound: int

    def __post_init__(self):
        if self.weight.level > self.level_bound:
            raise LevelError(f"{self.weight} is above level {self.level_bound}")

    @property
    def kind(self) -> str:
        return SO if self.weight.is_so else SPIN


def check_level(lam: Weight, ell: int) -> None:
    if lam.level > ell:
        raise LevelError(f"{lam} is above level {ell}")


@lru_cache(maxsize=None)
def enumerate_level(r: int, ell: int) -> tuple[Weight, ...]:
    """All dominant weights of so(2r+1) with b1 + b2 <= ell.

    Deterministic order: SO weights first, then spin weights, each family
    sorted lexicographically by L-coordinates.
    """
    require_rank(r)
    if ell < 1:
        raise ValueError(f"level must be >= 1, got {ell}")

    def family(shift: Fraction) -> list[Weight]:
        out: list[list[Fraction]] = []

        def rec(prefix: list[Fraction]):
            i = len(prefix)
            if i == r:
                out.append(list(prefix))
                return
            if i == 0:
                hi = Fraction(ell) - shift  # b2 >= shift, so b1 <= ell - shift
            elif i == 1:
                hi = min(prefix[0], Fraction(ell) - prefix[0])
            else:
                hi = prefix[-1]
            v = shift
            while v <= hi:
                rec(prefix + [v])
                v += 1
            return
        rec([])
        return [Weight(tuple(c)) for c in out]

    so = sorted(family(Fraction(0)), key=lambda w: w.coords)
    spin = sorted(family(HALF), key=lambda w: w.coords)
    return tuple(so + spin)


def sigma(lam: Weight, ell: int) -> Weight:
    """Affine diagram automorphism exchanging the nodes omega_0 and omega_1.

    In omega-coordinates a_1 goes to ell - (a_1 + 2(a_2+...+a_{r-1}) + a_r),
    everything else fixed.
    """
    check_level(lam, ell)
    a = list(lam.omega_coords())
    a[0] = ell - int(lam.level)
    image = Weight.from_omega(tuple(a))
    assert image.level <= ell, "sigma left the level-ell alcove"
    return image


# -- Young diagrams -----------------------------------------------------------

@dataclass(frozen=True)
class YoungDiagram:
    """Weakly decreasing row lengths; trailing zeros normalized away."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rs = self.rows
        if any(a < 0 for a in rs):
            raise ValueError(f"negative row length: {rs}")
        if any(rs[i] < rs[i + 1] for i in range(len(rs) - 1)):
            raise ValueError(f"rows must weakly decrease: {rs}")
        if rs and rs[-1] == 0:
            object.__setattr__(self, "rows", tuple(a for a in rs if a > 0))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def fits(self, nrows: int, ncols: int) -> bool:
        return len(self.rows) <= nrows and (not self.rows or self.rows[0] <= ncols)

    def row(self, i: int) -> int:
        """Length of row i (1-based); 0 beyond the diagram."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"expected bracketed row list like [3,1], got {text!r}")
        inner = body[1:-1].strip()
        rows = tuple(int(p) for p in inner.split(",")) if inner else ()
        return cls(rows)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.rows) + "]"


def transpose(y: YoungDiagram) -> YoungDiagram:
    if not y.rows:
        return y
    cols = tuple(sum(1 for a in y.rows if a >= j) for j in range(1, y.rows[0] + 1))
    return YoungDiagram(cols)


def complement(y: YoungDiagram, nrows: int, ncols: int) -> YoungDiagram:
    """Complement inside an nrows x ncols box, rotated back to a diagram."""
    if not y.fits(nrows, ncols):
        raise ValueError(f"{y} does not fit in a {nrows}x{ncols} box")
    rows = tuple(ncols - y.row(nrows - i) for i in range(nrows))
    return YoungDiagram(rows)


def star(y: YoungDiagram, nrows: int, ncols: int) -> YoungDiagram:
    """Transpose, then complement in the transposed (ncols x nrows) box."""
    if not y.fits(nrows, ncols):
        raise ValueError(f"{y} does not fit in a {nrows}x{ncols} box")
    return complement(transpose(y), ncols, nrows)


def young_diagrams(nrows: int, ncols: int) -> list[YoungDiagram]:
    """All diagrams in an nrows x ncols box; |Y_{r,s}| = C(r+s, r)."""
    out = []

    def rec(prefix):
        out.append(YoungDiagram(tuple(prefix)))
        if len(prefix) == nrows:
            return
        hi = prefix[-1] if prefix else ncols
        for v in range(hi, 0, -1):
            rec(prefix + [v])
    rec([])
    # rec() emits shapes with duplicated normal forms only via trailing zeros,
    # which the constructor strips; dedupe preserving order
    seen = set()
    uniq = []
    for y in out:
        if y.rows not in seen:
            seen.add(y.rows)
            uniq.append(y)
    assert len(uniq) == comb(nrows + ncols, nrows)
    return uniq


def weight_of_young(y: YoungDiagram, r: int, spin: bool = False) -> Weight:
    """The weight Y (SO kind) or Y + omega_r (spin kind) for a diagram with
    at most r rows."""
    require_rank(r)
    if len(y.rows) > r:
        raise ValueError(f"{y} has more than {r} rows")
    shift = HALF if spin else Fraction(0)
    return Weight(tuple(Fraction(y.row(i + 1)) + shift for i in range(r)))


def young_of_weight(lam: Weight) -> tuple[YoungDiagram, bool]:
    """Inverse of weight_of_young: returns (Y, spin_flag)."""
    spin = lam.is_spin
    shift = HALF if spin else Fraction(0)
    rows = tuple(int(c - shift) for c in lam.coords)
    return YoungDiagram(rows), spin


def sigma_orbit_class(lam: Weight, r: int, s: int) -> str:
    """Classify the sigma-orbit of a level-(2s+1) weight of so(2r+1)."""
    ell = 2 * s + 1
    check_level(lam, ell)
    if lam.is_so:
        return SO_PAIR
    return SPIN_FIXED if sigma(lam, ell) == lam else SPIN_PAIR


def count_sigma_fixed(r: int, s: int) -> int:
    """Number of sigma-fixed level-(2s+1) weights: |Y_{r,s}| - |Y_{r,s-1}|."""
    return comb(r + s, r) - comb(r + s - 1, r)
