"""Fock states and vectors for the level-one modules of so(2d+1), d related
to a tensor grid of generator indices (j, p), j in [-r..r], p in [-s..s].

A generator is a triple (tm, j, p) where tm is TWICE the mode: odd tm for the
NS sector (modes in Z+1/2), even for the R sector.  States store a wedge of
generators sorted ascending by (tm, j, p); reordering signs live in the
coefficients.  The stored generators are:

  * all tm < 0 (creation modes), and
  * in the R sector, zero modes: lowering phi_{j,p} (raw index < 0) in the
    standard realization, raising phi^{j,p} (raw index > 0) in the dual
    ("opposite Borel") realization used for the third slot of the forms.

The raw index pair (0,0) at tm = 0 is the odd generator e^0: it never enters
a wedge, acting instead by the scalar (-1)^degree / sqrt(2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import INV_SQRT2, ONE, ZERO, QSqrt2

NS = "NS"
R = "R"

Gen = tuple[int, int, int]  # (tm, j, p)


class SectorError(ValueError):
    """Generator mode incompatible with the sector of the state."""


def _index_positive(j: int, p: int) -> bool:
    return j > 0 or (j == 0 and p > 0)


@dataclass(frozen=True)
class FockState:
    sector: str
    wedge: tuple[Gen, ...]
    dual: bool = False

    def __post_init__(self):
        parity = 1 if self.sector == NS else 0
        for tm, j, p in self.wedge:
            if tm & 1 != parity:
                raise SectorError(f"mode {tm}/2 not allowed in sector {self.sector}")
        assert all(
            self.wedge[i] < self.wedge[i + 1] for i in range(len(self.wedge) - 1)
        ), f"wedge not canonically sorted: {self.wedge}"

    @property
    def degree(self) -> int:
        return len(self.wedge)

    @property
    def energy2(self) -> int:
        """Twice the energy: sum of -tm over the wedge."""
        return -sum(tm for tm, _, _ in self.wedge)

    def is_ground(self) -> bool:
        return all(tm == 0 for tm, _, _ in self.wedge)


def vacuum(sector: str, dual: bool = False) -> FockState:
    return FockState(sector, (), dual)


class FockVector:
    """Finite linear combination of Fock states over Q[sqrt(2)]."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[FockState, QSqrt2] | None = None):
        self.terms = {s: c for s, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    @classmethod
    def unit(cls, state: FockState, coeff=ONE) -> "FockVector":
        return cls({state: QSqrt2.of(coeff)})

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, ZERO) + c
        return FockVector(out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "FockVector":
        c = QSqrt2.of(scalar)
        return FockVector({s: c * v for s, v in self.terms.items()})

    __mul__ = __rmul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def energy2(self) -> int:
        return max((s.energy2 for s in self.terms), default=0)

    def coefficient(self, state: FockState) -> QSqrt2:
        return self.terms.get(state, ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for s, c in sorted(self.terms.items(), key=lambda kv: kv[0].wedge):
            gens = " ".join(_gen_str(g) for g in s.wedge) or "1"
            bits.append(f"({c}) {gens}")
        return "  +  ".join(bits)

    __repr__ = __str__


def _gen_str(g: Gen) -> str:
    tm, j, p = g
    mode = f"{tm//2}" if tm % 2 == 0 else f"{tm}/2"
    if _index_positive(j, p) or (j, p) == (0, 0):
        return f"phi^{{{j},{p}}}({mode})"
    return f"phi_{{{-j},{-p}}}({mode})"


def wedge_insert(state: FockState, gen: Gen):
    """Insert a generator into the wedge; returns (state, sign) or None on a
    repeated generator."""
    w = state.wedge
    lo, hi = 0, len(w)
    while lo < hi:
        mid = (lo + hi) // 2
        if w[mid] < gen:
            lo = mid + 1
        else:
            hi = mid
    if lo < len(w) and w[lo] == gen:
        return None
    new = w[:lo] + (gen,) + w[lo:]
    sign = -1 if lo & 1 else 1
    return FockState(state.sector, new, state.dual), sign


def _is_creation(gen: Gen, dual: bool) -> bool:
    tm, j, p = gen
    if tm < 0:
        return True
    if tm > 0:
        return False
    pos = _index_positive(j, p)
    return pos if dual else not pos


def clifford_apply(gen: Gen, v: FockVector) -> FockVector:
    """Action of a Clifford generator phi^{j,p}(tm/2) on a Fock vector.

    Creations wedge (with the reordering sign), annihilations contract via
    the pairing {phi^{a}(m), phi^{b}(n)} = delta_{a+b,0} delta_{m+n,0}, and
    the R-sector zero mode at raw index (0,0) acts by (-1)^deg / sqrt(2).
    """
    tm, j, p = gen
    out: dict[FockState, QSqrt2] = {}

    def add(state, coeff):
        if coeff:
            out[state] = out.get(state, ZERO) + coeff

    for state, coeff in v.terms.items():
        parity = 1 if state.sector == NS else 0
        if tm & 1 != parity:
            raise SectorError(f"mode {tm}/2 not allowed in sector {state.sector}")
        if tm == 0 and (j, p) == (0, 0):
            sign = -1 if state.degree & 1 else 1
            add(state, coeff * INV_SQRT2 * sign)
            continue
        if _is_creation(gen, state.dual):
            ins = wedge_insert(state, gen)
            if ins is not None:
                new, sign = ins
                add(new, coeff * sign)
        else:
            for i, (tm2, j2, p2) in enumerate(state.wedge):
                if tm + tm2 == 0 and j + j2 == 0 and p + p2 == 0:
                    rest = state.wedge[:i] + state.wedge[i + 1 :]
                    sign = -1 if i & 1 else 1
                    add(FockState(state.sector, rest, state.dual), coeff * sign)
                    # generators are distinct in a wedge: only one match
                    break
    return FockVector(out)
