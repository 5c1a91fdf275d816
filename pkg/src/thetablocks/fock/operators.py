"""Normal-ordered fermion bilinears B^{i,p}_{k,q}(m) and the embedded L/R
current actions on Fock vectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeff import QSqrt2
from .states import NS, FockVector, clifford_apply

Idx = tuple[int, int]


@dataclass(frozen=True)
class BilinearOp:
    """B^{upper}_{lower}(mode) = sum_{a+b=mode} :phi^{upper}(a) phi_{lower}(b):
    acting by Clifford multiplication; phi_{k,q} = phi^{-k,-q}."""

    upper: Idx
    lower: Idx
    mode: int

    def __str__(self):
        (i, p), (k, q) = self.upper, self.lower
        return f"B{{{i},{p};{k},{q}}}({self.mode})"


def _term(x: tuple, y: tuple, v: FockVector) -> FockVector:
    """phi^{x} then phi^{y} applied right-to-left: the product x(a) y(b)."""
    return clifford_apply(x, clifford_apply(y, v))


def apply_bilinear(op: BilinearOp, v: FockVector) -> FockVector:
    """Apply a normal-ordered bilinear; only finitely many mode splits act.

    Normal ordering: a > 0 > b swaps with a sign; a = b = 0 antisymmetrizes;
    all other splits act as written.
    """
    out = FockVector.zero()
    tm_op = 2 * op.mode
    ui, up = op.upper
    li, lp = op.lower
    for state, coeff in v.terms.items():
        sv = FockVector.unit(state, coeff)
        parity = 1 if state.sector == NS else 0
        budget = state.energy2
        lo = min(tm_op, 0) - budget
        hi = max(tm_op, 0) + budget
        ta = lo + ((parity - lo) % 2)
        while ta <= hi:
            tb = tm_op - ta
            x = (ta, ui, up)
            y = (tb, -li, -lp)
            if ta > 0 > tb:
                out = out - _term(y, x, sv)
            elif ta == 0 and tb == 0:
                half = QSqrt2(Fraction(1, 2))
                out = out + half * (_term(x, y, sv) - _term(y, x, sv))
            else:
                out = out + _term(x, y, sv)
            ta += 2
    return out


def apply_word(word, v: FockVector) -> FockVector:
    """Apply a word of bilinears, rightmost first."""
    for op in reversed(tuple(word)):
        v = apply_bilinear(op, v)
    return v


def apply_LR(i: int, j: int, mode: int, side: str, v: FockVector, r: int, s: int) -> FockVector:
    """Embedded action of B^i_j(mode): side "L" sums phi^{i,q} phi_{j,q} over
    q in [-s..s] (so(2r+1)); side "R" sums phi^{p,i} phi_{p,j} over
    p in [-r..r] (so(2s+1))."""
    out = FockVector.zero()
    if side == "L":
        if not (-r <= i <= r and -r <= j <= r):
            raise ValueError(f"index out of range for so({2*r+1}): ({i},{j})")
        for q in range(-s, s + 1):
            out = out + apply_bilinear(BilinearOp((i, q), (j, q), mode), v)
    elif side == "R":
        if not (-s <= i <= s and -s <= j <= s):
            raise ValueError(f"index out of range for so({2*s+1}): ({i},{j})")
        for p in range(-r, r + 1):
            out = out + apply_bilinear(BilinearOp((p, i), (p, j), mode), v)
    else:
        raise ValueError("side must be 'L' or 'R'")
    return out


@dataclass(frozen=True)
class SlotExpression:
    """A word of mode -1 bilinears over a base vector; ops[0] is outermost.

    The number of negative-mode operators is the termination measure of the
    gauge reduction in blocks.evaluate_block.
    """

    ops: tuple[BilinearOp, ...]
    base: FockVector

    def __post_init__(self):
        assert all(op.mode == -1 for op in self.ops), "slot words carry mode -1 ops"

    def value(self) -> FockVector:
        return apply_word(self.ops, self.base)
