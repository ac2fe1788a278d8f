"""The fusion ring F_k[G] as a computable quotient.

Kac-Walton reduction: tensor in R[G], then straighten every term to the
level-k alcove under the rho-shifted affine Weyl group at scale k + h_vee,
with signs.  The Verlinde S-matrix supplies an independent numerical oracle
(double precision, exact integer rounding with a residual check).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .characters import VirtualCharacter, irreducible, tensor
from .rootdata import RootDatum, Weight
from .weyl import affine_level, enumerate_alcove, straighten, weyl_orbit_signed

WEYL_ORDER_BOUND = 51840  # E6; E7/E8 oracle sums are not desk-feasible


@dataclass(frozen=True)
class FusionElement:
    """Integer combination of alcove weights at a fixed level."""

    level: int
    terms: dict

    def canonical(self) -> tuple:
        return tuple(sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, FusionElement)
            and self.level == other.level
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.level, self.canonical()))


def fusion_reduce(datum: RootDatum, x: VirtualCharacter, k: int) -> FusionElement:
    """Linear reduction R[G] -> F_k[G]; idempotent on alcove-supported input."""
    if k < 1:
        raise ValueError("level must be >= 1")
    if x.chamber != ("G",):
        raise ValueError("fusion_reduce expects a G-dominant character")
    group = affine_level(datum, k + datum.dual_coxeter)
    acc: dict[Weight, int] = {}
    for w, c in x.terms.items():
        sw = straighten(datum, w, group)
        if sw.sign:
            nc = acc.get(sw.weight, 0) + c * sw.sign
            if nc:
                acc[sw.weight] = nc
            else:
                del acc[sw.weight]
    for w in acc:
        if datum.level(w) > k or any(c < 0 for c in w):
            raise AssertionError("reduced term escaped the alcove")
    return FusionElement(k, acc)


def fusion_product(datum: RootDatum, lam, mu, k: int) -> FusionElement:
    """Kac-Walton fusion product of two alcove weights."""
    lam, mu = tuple(lam), tuple(mu)
    alcove = set(enumerate_alcove(datum, k))
    if lam not in alcove or mu not in alcove:
        raise ValueError("fusion_product inputs must lie in the level-k alcove")
    prod = tensor(datum, irreducible(datum, lam), irreducible(datum, mu))
    out = fusion_reduce(datum, prod, k)
    if any(c < 0 for c in out.terms.values()):
        raise AssertionError("negative fusion coefficient")
    return out


def weyl_order(datum: RootDatum) -> int:
    fam, n = datum.lie_type.family, datum.n
    if fam == "A":
        return math.factorial(n + 1)
    if fam in "BC":
        return 2**n * math.factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840,
            ("E", 7): 2903040, ("E", 8): 696729600}[(fam, n)]


@dataclass(frozen=True, eq=False)
class SMatrix:
    """Verlinde S-matrix over the level-k alcove, with tolerance metadata."""

    level: int
    weights: tuple[Weight, ...]
    matrix: np.ndarray          # unitary within tolerance; symmetric
    tolerance: float

    def index(self, w) -> int:
        return self.weights.index(tuple(w))


@lru_cache(maxsize=None)
def _smatrix_cached(datum: RootDatum, k: int, tol: float) -> SMatrix:
    if weyl_order(datum) > WEYL_ORDER_BOUND:
        raise ValueError(
            f"|W| = {weyl_order(datum)} exceeds the S-matrix bound {WEYL_ORDER_BOUND}"
        )
    pts = tuple(enumerate_alcove(datum, k))
    m = k + datum.dual_coxeter
    n = datum.n
    gram = np.array(
        [[float(f) for f in row] for row in datum.gram], dtype=float
    )
    shifted = np.array([[c + 1 for c in w] for w in pts], dtype=float)
    right = shifted @ gram  # rows: (mu + rho) in pairing-ready form

    rows = []
    for w in pts:
        orbit = weyl_orbit_signed(datum, tuple(c + 1 for c in w))
        if orbit is None:
            raise AssertionError("alcove point with singular shift")
        vecs = np.array([p for p, _ in orbit], dtype=float)
        signs = np.array([s for _, s in orbit], dtype=float)
        phases = vecs @ right.T  # (|W|, N)
        rows.append(signs @ np.exp(-2j * np.pi / m * phases))
    raw = np.array(rows)

    norm2 = float(np.sum(np.abs(raw[0]) ** 2))
    smat = raw / math.sqrt(norm2)
    resid = float(np.max(np.abs(smat @ smat.conj().T - np.eye(len(pts)))))
    if resid > 1e-9:
        raise AssertionError(f"S-matrix unitarity residual {resid:.3e}")
    return SMatrix(level=k, weights=pts, matrix=smat, tolerance=tol)


def smatrix(datum: RootDatum, k: int, tolerance: float = 1e-6) -> SMatrix:
    return _smatrix_cached(datum, k, tolerance)


class OracleError(ArithmeticError):
    """The Verlinde oracle failed to round to an integer within tolerance."""


def verlinde_fusion(datum: RootDatum, lam, mu, nu, k: int,
                    tolerance: float = 1e-6) -> int:
    """N_{lam,mu}^nu by the Verlinde formula; never rounds silently."""
    sm = smatrix(datum, k, tolerance)
    i, j, l = sm.index(lam), sm.index(mu), sm.index(nu)
    s = sm.matrix
    val = np.sum(s[i] * s[j] * s[l].conj() / s[0])
    n = round(float(val.real))
    resid = abs(val - n)
    if resid >= tolerance:
        raise OracleError(
            f"Verlinde rounding residue {resid:.3e} for "
            f"{lam} x {mu} -> {nu} at level {k}"
        )
    return n


def verlinde_table(datum: RootDatum, k: int, tolerance: float = 1e-6):
    """All (lam, mu, nu, N) with N from the Verlinde oracle."""
    pts = enumerate_alcove(datum, k)
    for lam in pts:
        for mu in pts:
            for nu in pts:
                yield lam, mu, nu, verlinde_fusion(datum, lam, mu, nu, k, tolerance)


def kac_walton_table(datum: RootDatum, k: int):
    """All (lam, mu, nu, N) via exact Kac-Walton folding."""
    pts = enumerate_alcove(datum, k)
    for lam in pts:
        for mu in pts:
            prod = fusion_product(datum, lam, mu, k)
            for nu in pts:
                yield lam, mu, nu, prod.terms.get(nu, 0)
