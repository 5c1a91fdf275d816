"""Finite-dimensional so(2d+1) structure constants in the B^{i,p}_{k,q} basis.

B^u_l = E^u_l - E^{-l}_{-u} on the tensor grid of index pairs; brackets and
the normalized invariant form (X,Y) = Tr(XY)/2 are computed through sparse
E-matrices.  These feed the affine commutation relation

    X(m) Y(n) = Y(n) X(m) + [X,Y](m+n) + m delta_{m+n,0} (X,Y) c

used when gauge transfers push operators through slot words (level one: the
central element acts by 1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Idx = tuple[int, int]
BLabel = tuple[Idx, Idx]  # (upper, lower)


def _neg(t: Idx) -> Idx:
    return (-t[0], -t[1])


def _e_dict(label: BLabel) -> dict:
    u, l = label
    d: dict = {}
    d[(u, l)] = d.get((u, l), 0) + 1
    k = (_neg(l), _neg(u))
    d[k] = d.get(k, 0) - 1
    return {k: v for k, v in d.items() if v}


@lru_cache(maxsize=None)
def bracket(x: BLabel, y: BLabel) -> tuple:
    """[B^x, B^y] as a tuple of (BLabel, Fraction) pairs."""
    m: dict = {}
    for (a, b), ca in _e_dict(x).items():
        for (c, d), cb in _e_dict(y).items():
            coeff = ca * cb
            if b == c:
                m[(a, d)] = m.get((a, d), 0) + coeff
            if d == a:
                m[(c, b)] = m.get((c, b), 0) - coeff
    out = []
    for (a, b), c in m.items():
        if c and a != _neg(b):  # B^a_b = 0 when a = -b
            out.append(((a, b), Fraction(c, 2)))
    return tuple(out)


@lru_cache(maxsize=None)
def invariant_form(x: BLabel, y: BLabel) -> Fraction:
    """(X, Y) = Tr(XY)/2 in the defining representation."""
    tr = 0
    for (a, b), ca in _e_dict(x).items():
        for (c, d), cb in _e_dict(y).items():
            if b == c and d == a:
                tr += ca * cb
    return Fraction(tr, 2)
