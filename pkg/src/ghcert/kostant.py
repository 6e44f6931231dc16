"""Highest-weight cohomology of the nilradical via the Weyl-group formula,
and the Hom-vanishing check that settles the non-ideal branch.
"""

from dataclasses import dataclass
from fractions import Fraction

from ghcert.algebra import LieAlgebra
from ghcert.borel import BorelData
from ghcert.errors import NonDominant
from ghcert.linalg import inverse, matvec
from ghcert.rootsystem import WeylElement
from ghcert.weights import Weight


@dataclass(frozen=True)
class KostantSummand:
    w: WeylElement
    gamma: Weight
    dominant_for_m: bool


@dataclass
class CohomologyDecomposition:
    degree: int
    summands: list  # included (m-dominant) summands, sorted by gamma
    total_dim: int


def m_rho(borel: BorelData) -> Weight:
    rs = borel.L.rs
    half = [Fraction(0)] * rs.rank
    for c in borel.m_pos_roots:
        f = rs.root_to_weight(c)
        for i in range(rs.rank):
            half[i] += Fraction(f[i], 2)
    return Weight("g", tuple(half))


def m_weyl_dimension(borel: BorelData, gamma: Weight) -> int:
    """Dimension of the simple m-module with b_m-highest weight gamma."""
    rs = borel.L.rs
    rho_m = m_rho(borel)
    shifted = [g + r for g, r in zip(gamma.coords, rho_m.coords)]
    val = Fraction(1)
    for c in borel.m_pos_roots:
        val *= rs.weight_root_ip(shifted, c) / rs.weight_root_ip(rho_m.coords, c)
    assert val.denominator == 1 and val > 0
    return int(val)


def _conjugated_elements_of_length(borel: BorelData, r: int):
    """Weyl elements of length r with respect to the adapted positive system."""
    rs = borel.L.rs
    wb = [list(row) for row in borel.w_b]
    wb_inv = inverse(wb)
    out = []
    for el in rs.weyl_elements_of_length(r):
        m = [list(row) for row in el.matrix]
        conj = _matmul(_matmul(wb, m), wb_inv)
        out.append(WeylElement(el.word, tuple(tuple(x for x in row) for row in conj)))
    return out


def _matmul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(len(b[0]))]
        for i in range(n)
    ]


def kostant_cohomology(L: LieAlgebra, borel: BorelData, nu: Weight, r: int) -> CohomologyDecomposition:
    """Degree-r decomposition: one summand per length-r Weyl element whose
    shifted image is dominant for m; only those summands survive."""
    if not (borel.dominant(nu) and borel.integral(nu)):
        raise NonDominant(f"nu = {nu.coords} is not b-dominant integral")
    rho = borel.rho
    shifted = [n + p for n, p in zip(nu.coords, rho.coords)]
    included = []
    for el in _conjugated_elements_of_length(borel, r):
        img = matvec([list(row) for row in el.matrix], shifted)
        gamma = Weight("g", tuple(i - p for i, p in zip(img, rho.coords)))
        dom = borel.m_dominant(gamma)
        summand = KostantSummand(w=el, gamma=gamma, dominant_for_m=dom)
        if dom:
            included.append(summand)
    included.sort(key=lambda s: s.gamma.coords)
    total = sum(m_weyl_dimension(borel, s.gamma) for s in included)
    return CohomologyDecomposition(degree=r, summands=included, total_dim=total)


def verify_vanishing(L: LieAlgebra, borel: BorelData, nu: Weight, r: int) -> bool:
    """True iff the coefficient module's highest weight nu does not occur
    among the degree-r summands (so the Hom space over m vanishes)."""
    dec = kostant_cohomology(L, borel, nu, r)
    return all(s.gamma.coords != nu.coords for s in dec.summands)
