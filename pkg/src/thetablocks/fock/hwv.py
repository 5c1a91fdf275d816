"""Highest weight vectors of the branching components inside the level-one
Fock modules of so(2d+1), in operator ("Kac-Moody") or wedge form."""

from __future__ import annotations

from .operators import BilinearOp, apply_word
from .states import NS, R, FockVector, clifford_apply, vacuum
from ..weights import YoungDiagram


def black_positions(y: YoungDiagram, r: int, s: int) -> list[tuple[int, int]]:
    """Positions (j, p), j in 1..r, p in -s..-1, complementary to the diagram:
    row j is black at the rightmost s - Y_j columns."""
    if not y.fits(r, s):
        raise ValueError(f"{y} does not fit in the {r}x{s} box")
    out = []
    for j in range(1, r + 1):
        for p in range(y.row(j) - s, 0):
            out.append((j, p))
    return out


def _wedge_vector(sector: str, dual: bool, gens) -> FockVector:
    """Wedge the listed generators left to right onto the vacuum."""
    v = FockVector.unit(vacuum(sector, dual))
    for g in reversed(list(gens)):
        v = clifford_apply(g, v)
    return v


def spin_hwv(y: YoungDiagram, r: int, s: int) -> FockVector:
    """v_Y: the R-sector vector of the component (Y + omega_r, Y* + omega_s),
    the wedge of lowered zero modes phi_{j,p} over the black positions."""
    return _wedge_vector(R, False, ((0, -j, -p) for j, p in black_positions(y, r, s)))


def spin_hwv_opposite(y: YoungDiagram, r: int, s: int) -> FockVector:
    """v^Y: the same index set with raised generators, in the dual realization."""
    return _wedge_vector(R, True, ((0, j, p) for j, p in black_positions(y, r, s)))


def ns_column_hwv(r: int, s: int) -> FockVector:
    """The NS vector of the component (omega_0, (2r+1) omega_1):
    wedge of phi^{j,1}(-1/2) over j = -r..r."""
    return _wedge_vector(NS, False, ((-1, j, 1) for j in range(-r, r + 1)))


def _removable_cells(y: YoungDiagram):
    rows = y.rows
    for i in range(len(rows), 0, -1):
        if i == len(rows) or rows[i - 1] > rows[i]:
            yield (i, rows[i - 1])


def _remove_cell(y: YoungDiagram, cell) -> YoungDiagram:
    i, _ = cell
    rows = list(y.rows)
    rows[i - 1] -= 1
    return YoungDiagram(tuple(rows))


def so_pair_hwv(y: YoungDiagram, r: int, s: int) -> FockVector:
    """NS-sector vector of the component (Y, Y^T): a chain of two-box
    operators B^{a,b}_{-c,-d}(-1) over the vacuum (|Y| even) or over
    phi^{1,1}(-1/2) (|Y| odd), removing the two largest removable cells at
    each step."""
    if not y.fits(r, s):
        raise ValueError(f"{y} does not fit in the {r}x{s} box")
    word = []
    cur = y
    while cur.size > 1:
        c1 = max(_removable_cells(cur))
        mid = _remove_cell(cur, c1)
        c2 = max(_removable_cells(mid))
        cur = _remove_cell(mid, c2)
        (a, b), (c, d) = min(c1, c2), max(c1, c2)
        word.append(BilinearOp((a, b), (-c, -d), -1))
    if cur.size == 1:
        base = _wedge_vector(NS, False, [(-1, 1, 1)])
    else:
        base = FockVector.unit(vacuum(NS))
    return apply_word(reversed(word), base)


def sigma_twist_ops(y: YoungDiagram, r: int, s: int) -> list[BilinearOp]:
    """The operators of the sigma-twisted component for Y in the r x (s-1)
    box: B^{1,k}_{0,0}(-1) over the black first-row columns k = 1..s - Y_1."""
    if not y.fits(r, s - 1):
        raise ValueError(f"sigma twist needs Y inside the {r}x{s-1} box, got {y}")
    return [BilinearOp((1, k), (0, 0), -1) for k in range(1, s - y.row(1) + 1)]


def filled_first_row(y: YoungDiagram, s: int) -> YoungDiagram:
    """Y' of the twist construction: the first row filled out to s columns."""
    rows = (s,) + y.rows[1:] if y.rows else (s,)
    return YoungDiagram(rows)


def sigma_twist_hwv(y: YoungDiagram, r: int, s: int) -> FockVector:
    """Vector of the component (sigma(Y + omega_r), Y* + omega_s)."""
    ops = sigma_twist_ops(y, r, s)
    return apply_word(ops, spin_hwv(filled_first_row(y, s), r, s))


def sigma_twist_hwv_opposite(y: YoungDiagram, r: int, s: int) -> FockVector:
    ops = [BilinearOp((0, 0), op.upper, -1) for op in sigma_twist_ops(y, r, s)]
    return apply_word(ops, spin_hwv_opposite(filled_first_row(y, s), r, s))
