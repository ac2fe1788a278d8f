"""Virtual characters of R[G] and the edge/vertex modules: weight systems,
tensor products, antisymmetrization, induction.

Coefficients are Python ints (arbitrary precision).  Weight-system
multiplicities come from Freudenthal's recursion, memoized on dominant
orbits; the full system is reconstructed by Weyl action.  Tensor products
use the Brauer-Klimyk rule iterating over the smaller factor's weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import weyl
from .rootdata import RootDatum, Weight
from .weyl import ReflectionGroupSpec, finite_parabolic, finite_weyl, straighten

# chamber tags: ('G',) | ('e', v) | ('v', v, k)
Chamber = tuple


def chamber_contains(datum: RootDatum, chamber: Chamber, w) -> bool:
    if chamber[0] == "G":
        return all(c >= 0 for c in w)
    if chamber[0] == "e":
        v = chamber[1]
        return all(c >= 0 for j, c in enumerate(w, start=1) if j != v)
    if chamber[0] == "v":
        _, v, k = chamber
        return (
            all(c >= 0 for j, c in enumerate(w, start=1) if j != v)
            and datum.level(w) <= k
        )
    raise ValueError(f"unknown chamber {chamber!r}")


@dataclass(frozen=True)
class VirtualCharacter:
    """Finitely supported integer combination of irreducibles of one chamber.

    `terms` maps highest weights to coefficients; zero coefficients are never
    stored.  Treat instances as immutable.
    """

    chamber: Chamber
    terms: dict

    def __post_init__(self):
        for w, c in self.terms.items():
            if c == 0:
                raise ValueError("zero coefficient stored in VirtualCharacter")

    @staticmethod
    def make(datum: RootDatum, chamber: Chamber, terms: dict) -> "VirtualCharacter":
        clean = {w: c for w, c in terms.items() if c}
        for w in clean:
            if not chamber_contains(datum, chamber, w):
                raise ValueError(f"weight {w} outside chamber {chamber}")
        return VirtualCharacter(chamber, clean)

    def canonical(self) -> tuple:
        return tuple(sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, VirtualCharacter)
            and self.chamber == other.chamber
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.chamber, self.canonical()))

    def scaled(self, c: int) -> "VirtualCharacter":
        if c == 0:
            return VirtualCharacter(self.chamber, {})
        return VirtualCharacter(self.chamber, {w: c * v for w, v in self.terms.items()})

    def plus(self, other: "VirtualCharacter") -> "VirtualCharacter":
        if self.chamber != other.chamber:
            raise ValueError("chamber mismatch")
        terms = dict(self.terms)
        for w, c in other.terms.items():
            nc = terms.get(w, 0) + c
            if nc:
                terms[w] = nc
            else:
                terms.pop(w, None)
        return VirtualCharacter(self.chamber, terms)

    def to_json_obj(self) -> list:
        return [
            {"coeff": c, "weight": list(w)} for w, c in sorted(self.terms.items())
        ]


def irreducible(datum: RootDatum, lam, chamber: Chamber = ("G",)) -> VirtualCharacter:
    return VirtualCharacter.make(datum, chamber, {tuple(lam): 1})


@dataclass(frozen=True)
class WeightSum:
    """Formal exponential sum: finitely supported integer map on the full
    weight lattice, no chamber constraint."""

    terms: dict

    def canonical(self) -> tuple:
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, WeightSum) and self.terms == other.terms

    def __hash__(self):
        return hash(self.canonical())


# -- exact geometry helpers ----------------------------------------------


@lru_cache(maxsize=None)
def _scaled_gram(datum: RootDatum):
    denom = 1
    for row in datum.gram:
        for f in row:
            denom = denom * f.denominator // _gcd(denom, f.denominator)
    mat = tuple(
        tuple(int(f * denom) for f in row) for row in datum.gram
    )
    return mat, denom


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def inner_scaled(datum: RootDatum, x, y) -> int:
    """denom * (x, y); exact integer."""
    mat, _ = _scaled_gram(datum)
    n = datum.n
    tot = 0
    for i in range(n):
        xi = x[i]
        if xi:
            row = mat[i]
            tot += xi * sum(row[j] * y[j] for j in range(n) if y[j])
    return tot


@lru_cache(maxsize=None)
def _adjugate(datum: RootDatum):
    """(det * inv_cartan, det) as integer data."""
    det = 1
    # det of the Cartan matrix = 1 / det(inv); compute from inv diagonalization
    inv = datum.inv_cartan
    d = Fraction(1)
    mat = [list(map(Fraction, row)) for row in datum.cartan]
    n = datum.n
    for col in range(n):
        piv = next(r for r in range(col, n) if mat[r][col] != 0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            d = -d
        d *= mat[col][col]
        f = mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col]:
                ratio = mat[r][col] / f
                mat[r] = [a - ratio * b for a, b in zip(mat[r], mat[col])]
    det = int(d)
    adj = tuple(
        tuple(int(inv[i][j] * det) for j in range(n)) for i in range(n)
    )
    return adj, det


def _root_cone_gap(datum: RootDatum, hi, lo):
    """det-scaled root coordinates of hi - lo (None when not >= 0)."""
    adj, det = _adjugate(datum)
    n = datum.n
    diff = [hi[j] - lo[j] for j in range(n)]
    out = []
    for i in range(n):
        v = sum(adj[i][j] * diff[j] for j in range(n))
        if v < 0:
            return None
        out.append(v)
    return out


def weyl_dimension(datum: RootDatum, lam) -> int:
    return _weyl_dimension(datum, tuple(lam))


@lru_cache(maxsize=None)
def _weyl_dimension(datum: RootDatum, lam: Weight) -> int:
    if any(c < 0 for c in lam):
        raise ValueError("dominant weight required")
    rho = datum.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    num = 1
    den = 1
    for alpha in datum.positive_roots:
        num *= inner_scaled(datum, lr, alpha)
        den *= inner_scaled(datum, rho, alpha)
    if num % den:
        raise AssertionError("Weyl dimension is not integral")
    return num // den


# -- weight systems -------------------------------------------------------


@lru_cache(maxsize=None)
def _weight_polytope(datum: RootDatum, lam: Weight) -> frozenset:
    """All weights of the irreducible with highest weight lam."""
    seen = {lam}
    rejected = set()
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for a in datum.alpha:
                cand = tuple(wi - ai for wi, ai in zip(w, a))
                if cand in seen or cand in rejected:
                    continue
                dom, _, _ = weyl._dominant_rep(datum, cand)
                if _root_cone_gap(datum, lam, dom) is not None:
                    seen.add(cand)
                    nxt.append(cand)
                else:
                    rejected.add(cand)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def _dominant_multiplicities(datum: RootDatum, lam: Weight) -> dict:
    """Freudenthal recursion on the dominant weights of the polytope."""
    wts = _weight_polytope(datum, lam)
    dominant = [w for w in wts if all(c >= 0 for c in w)]
    depth = {}
    for w in dominant:
        gap = _root_cone_gap(datum, lam, w)
        depth[w] = sum(gap)
    dominant.sort(key=lambda w: (depth[w], w))

    rho = datum.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    lr2 = inner_scaled(datum, lr, lr)
    mult: dict[Weight, int] = {lam: 1}
    for mu in dominant:
        if mu == lam:
            continue
        num = 0  # scaled by the gram denominator
        for alpha in datum.positive_roots:
            t = 1
            while True:
                nu = tuple(m + t * a for m, a in zip(mu, alpha))
                if nu not in wts:
                    break
                dom, _, _ = weyl._dominant_rep(datum, nu)
                num += mult[dom] * inner_scaled(datum, nu, alpha)
                t += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = lr2 - inner_scaled(datum, mr, mr)
        if denom <= 0 or (2 * num) % denom:
            raise AssertionError("Freudenthal recursion failed")
        mult[mu] = 2 * num // denom
    return mult


def weight_system(datum: RootDatum, lam) -> dict:
    """Multiplicity map of the irreducible with highest weight lam.

    The returned dict is cached; do not mutate it.
    """
    lam = tuple(lam)
    if any(c < 0 for c in lam):
        raise ValueError("dominant weight required")
    return _full_weight_system(datum, lam)


@lru_cache(maxsize=None)
def _full_weight_system(datum: RootDatum, lam: Weight) -> dict:
    mult = _dominant_multiplicities(datum, lam)
    out = {}
    for w in _weight_polytope(datum, lam):
        dom, _, _ = weyl._dominant_rep(datum, w)
        out[w] = mult[dom]
    return out


def character_dimension(datum: RootDatum, x: VirtualCharacter) -> int:
    return sum(c * weyl_dimension(datum, w) for w, c in x.terms.items())


# -- products and induction ----------------------------------------------


def tensor(datum: RootDatum, x: VirtualCharacter, y: VirtualCharacter) -> VirtualCharacter:
    """Tensor product decomposition in R[G] (Brauer-Klimyk straightening)."""
    if x.chamber != ("G",) or y.chamber != ("G",):
        raise ValueError("tensor requires G-dominant characters")
    group = finite_weyl(datum)
    acc: dict[Weight, int] = {}
    for lw, lc in x.terms.items():
        for mw, mc in y.terms.items():
            if weyl_dimension(datum, lw) < weyl_dimension(datum, mw):
                small, big = lw, mw
            else:
                small, big = mw, lw
            coeff = lc * mc
            for nu, m in weight_system(datum, small).items():
                shifted = tuple(b + v for b, v in zip(big, nu))
                sw = straighten(datum, shifted, group)
                if sw.sign:
                    key = sw.weight
                    nc = acc.get(key, 0) + coeff * m * sw.sign
                    if nc:
                        acc[key] = nc
                    else:
                        del acc[key]
    return VirtualCharacter.make(datum, ("G",), acc)


def antisymmetrize(datum: RootDatum, lam, group: ReflectionGroupSpec,
                   support_bound: int | None = None,
                   capacity: int = 1_000_000) -> WeightSum:
    """A^U_lam = sum over u in U of eps(u) * u(lam), for the unshifted action.

    Finite groups need no bound; the affine case requires `support_bound`
    (max |coordinate| kept).  Exceeding `capacity` orbit points raises.
    """
    lam = tuple(lam)
    unshifted = ReflectionGroupSpec(
        group.kind, datum, group.active, group.wall, tuple([0] * datum.n),
        group.scale,
    )
    if group.wall is not None and support_bound is None:
        raise ValueError("affine antisymmetrization requires a support bound")
    sw = straighten(datum, lam, unshifted)
    if sw.sign == 0:
        return WeightSum({})

    terms = {lam: 1}
    frontier = [(lam, 1)]
    wall = group.wall
    while frontier:
        nxt = []
        for w, s in frontier:
            images = [weyl.reflect(datum, i, w) for i in group.active]
            if wall is not None:
                images.append(weyl.affine_reflect(datum, wall // group.scale, w))
            for img in images:
                if img in terms:
                    continue
                if support_bound is not None and any(
                    abs(c) > support_bound for c in img
                ):
                    continue
                terms[img] = -s
                nxt.append((img, -s))
                if len(terms) > capacity:
                    raise ValueError("antisymmetrization capacity exceeded")
        frontier = nxt
    return WeightSum(terms)


def induct_to_G(datum: RootDatum, x: VirtualCharacter) -> VirtualCharacter:
    """d^{e,o}: straighten each term under the rho-shifted finite Weyl group,
    dropping singular terms."""
    group = finite_weyl(datum)
    acc: dict[Weight, int] = {}
    for w, c in x.terms.items():
        sw = straighten(datum, w, group)
        if sw.sign:
            nc = acc.get(sw.weight, 0) + c * sw.sign
            if nc:
                acc[sw.weight] = nc
            else:
                del acc[sw.weight]
    return VirtualCharacter.make(datum, ("G",), acc)


def edge_product(datum: RootDatum, v: int, x: VirtualCharacter,
                 y: VirtualCharacter) -> VirtualCharacter:
    """R[G]-module action: multiply the restriction of the G-character x
    into the edge module, against the C_e-dominant character y."""
    if x.chamber != ("G",):
        raise ValueError("coefficient must be a G-character")
    if y.chamber != ("e", v):
        raise ValueError(f"expected an ('e', {v}) character")
    nodes = tuple(j for j in range(1, datum.n + 1) if j != v)
    group = finite_parabolic(datum, nodes)
    acc: dict[Weight, int] = {}
    for gw, gc in x.terms.items():
        ws = weight_system(datum, gw)
        for ew, ec in y.terms.items():
            coeff = gc * ec
            for nu, m in ws.items():
                shifted = tuple(a + b for a, b in zip(ew, nu))
                sw = straighten(datum, shifted, group)
                if sw.sign:
                    nc = acc.get(sw.weight, 0) + coeff * m * sw.sign
                    if nc:
                        acc[sw.weight] = nc
                    else:
                        del acc[sw.weight]
    return VirtualCharacter.make(datum, ("e", v), acc)


def edge_to_vertex(datum: RootDatum, v: int, k: int,
                   x: VirtualCharacter) -> dict:
    """d^{e,v}: term-by-term vertex-group straightening; returns a signed
    integer map on the C_v chamber weights."""
    group = weyl.vertex_group(datum, v, k)
    acc: dict[Weight, int] = {}
    for w, c in x.terms.items():
        sw = straighten(datum, w, group)
        if sw.sign:
            nc = acc.get(sw.weight, 0) + c * sw.sign
            if nc:
                acc[sw.weight] = nc
            else:
                del acc[sw.weight]
    return acc
