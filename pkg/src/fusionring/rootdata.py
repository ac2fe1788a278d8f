"""Static root-system data for the simple, simply connected Lie groups.

All data is generated programmatically from Bourbaki family rules; nothing is
hand-entered per rank.  One convention rules everything downstream:

    cartan[i][j] = <alpha_j, alpha_i_vee>

so the fundamental coordinates of the simple root alpha_j are the j-th
*column* of the Cartan matrix, and pairing a weight with a simple coroot is
coordinate extraction: <lam, alpha_i_vee> = lam[i-1].

Node indices in the public API are 1-based Bourbaki numbers; the affine node
is 0.  Weights are plain tuples of ints in the fundamental-weight basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]

_RANK_BOUNDS = {"A": 1, "B": 3, "C": 2, "D": 4}


class CaseTwoVertexError(ValueError):
    """The affine diagram has no automorphism exchanging node 0 and the
    requested node; callers must use the w_0 reflection instead."""


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam in _RANK_BOUNDS:
            if n < _RANK_BOUNDS[fam]:
                raise ValueError(
                    f"type {fam} requires rank >= {_RANK_BOUNDS[fam]}, got {n}"
                )
        elif fam == "E":
            if n not in (6, 7, 8):
                raise ValueError(f"type E requires rank in (6, 7, 8), got {n}")
        elif fam == "F":
            if n != 4:
                raise ValueError(f"type F requires rank 4, got {n}")
        elif fam == "G":
            if n != 2:
                raise ValueError(f"type G requires rank 2, got {n}")
        else:
            raise ValueError(f"unknown family {fam!r}")

    @staticmethod
    def parse(text: str) -> "LieType":
        """Parse a textual code like "A5", "e8", "g2" (case-insensitive)."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse Lie type {text!r}")
        return LieType(text[0].upper(), int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _edges(t: LieType) -> list[tuple[int, int, int, int]]:
    """Bonds (i, j, a_ij, a_ji) of the finite diagram, 1-based."""
    fam, n = t.family, t.rank
    chain = [(i, i + 1, -1, -1) for i in range(1, n)]
    if fam == "A":
        return chain
    if fam == "B":  # alpha_n short: <alpha_{n-1}, alpha_n_vee> = -2
        chain[-1] = (n - 1, n, -1, -2)
        return chain
    if fam == "C":  # alpha_n long: <alpha_n, alpha_{n-1}_vee> = -2
        chain[-1] = (n - 1, n, -2, -1)
        return chain
    if fam == "D":
        return chain[:-1] + [(n - 2, n, -1, -1)]
    if fam == "E":
        return [(1, 3, -1, -1), (2, 4, -1, -1)] + [
            (i, i + 1, -1, -1) for i in range(3, n)
        ]
    if fam == "F":
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    # G2: alpha_1 short, alpha_2 long: a_12 = <alpha_2, alpha_1_vee> = -3
    return [(1, 2, -3, -1)]


_MARKS = {
    "A": lambda n: [1] * n,
    "B": lambda n: [1] + [2] * (n - 1),
    "C": lambda n: [2] * (n - 1) + [1],
    "D": lambda n: [1] + [2] * (n - 3) + [1, 1],
    "E": lambda n: {
        6: [1, 2, 2, 3, 2, 1],
        7: [2, 2, 3, 4, 3, 2, 1],
        8: [2, 3, 4, 6, 5, 4, 3, 2],
    }[n],
    "F": lambda n: [2, 3, 4, 2],
    "G": lambda n: [3, 2],
}

_SYMMETRIZER = {
    "A": lambda n: [1] * n,
    "B": lambda n: [2] * (n - 1) + [1],
    "C": lambda n: [1] * (n - 1) + [2],
    "D": lambda n: [1] * n,
    "E": lambda n: [1] * n,
    "F": lambda n: [2, 2, 1, 1],
    "G": lambda n: [1, 3],
}


def _mat_inverse(rows: tuple[tuple[int, ...], ...]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(i == j) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Immutable exact data for one simple type; shareable across threads."""

    lie_type: LieType
    n: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    highest_root: Weight
    dual_coxeter: int
    rho: Weight
    alpha: tuple[Weight, ...]          # alpha[i-1] = simple root, fund. coords
    gram: tuple[tuple[Fraction, ...], ...]   # (lambda_i, lambda_j), theta-normed
    inv_cartan: tuple[tuple[Fraction, ...], ...]

    # -- basic pairings -------------------------------------------------

    def level(self, w) -> int:
        return sum(a * c for a, c in zip(self.comarks, w))

    def inner(self, x, y) -> Fraction:
        g = self.gram
        return sum(
            x[i] * sum(g[i][j] * y[j] for j in range(self.n) if y[j])
            for i in range(self.n) if x[i]
        ) or Fraction(0)

    def norm2(self, x) -> Fraction:
        return self.inner(x, x)

    def pair_coroot(self, lam, beta: Weight) -> Fraction:
        """<lam, beta_vee> = 2 (lam, beta) / (beta, beta) for a root beta."""
        return 2 * self.inner(lam, beta) / self.inner(beta, beta)

    def root_coords(self, w) -> tuple[Fraction, ...]:
        inv = self.inv_cartan
        return tuple(
            sum(inv[i][j] * w[j] for j in range(self.n)) for i in range(self.n)
        )

    def is_positive_root_vector(self, w) -> bool:
        rc = self.root_coords(w)
        if all(c >= 0 for c in rc) and any(c > 0 for c in rc):
            return True
        if all(c <= 0 for c in rc) and any(c < 0 for c in rc):
            return False
        raise ValueError(f"{w} is not in the root lattice cone of a root")

    def in_root_cone(self, w) -> bool:
        """Whether w is a nonnegative integer combination of simple roots."""
        return all(c >= 0 and c.denominator == 1 for c in self.root_coords(w))

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        return _positive_roots(self)

    def affine_cartan(self) -> tuple[tuple[int, ...], ...]:
        """(n+1)x(n+1) matrix indexed by affine nodes 0..n, alpha_0 = -theta."""
        n, th = self.n, self.highest_root
        rows = [[0] * (n + 1) for _ in range(n + 1)]
        rows[0][0] = 2
        for j in range(1, n + 1):
            rows[0][j] = -self.level(self.alpha[j - 1])
            rows[j][0] = -th[j - 1]
            for i in range(1, n + 1):
                rows[i][j] = self.cartan[i - 1][j - 1]
        return tuple(tuple(r) for r in rows)

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(j == i - 1) for j in range(self.n))

    def to_json(self) -> str:
        """Debug dump of the static data."""
        return json.dumps(
            {
                "schema": "fusionring/rootdatum-v1",
                "type": str(self.lie_type),
                "cartan": [list(r) for r in self.cartan],
                "symmetrizer": list(self.symmetrizer),
                "marks": list(self.marks),
                "comarks": list(self.comarks),
                "highest_root": list(self.highest_root),
                "dual_coxeter": self.dual_coxeter,
            },
            sort_keys=True,
        )


@lru_cache(maxsize=None)
def _positive_roots(datum: RootDatum) -> tuple[Weight, ...]:
    from .weyl import reflect  # cycle-free at call time

    seen = set(datum.alpha)
    frontier = list(datum.alpha)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(1, datum.n + 1):
                img = reflect(datum, i, r)
                if img not in seen and datum.is_positive_root_vector(img):
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (datum.level(w), w)))


@lru_cache(maxsize=None)
def build_root_datum(t: LieType) -> RootDatum:
    """Construct and validate the full static datum for one simple type."""
    n = t.rank
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _edges(t):
        cartan[i - 1][j - 1] = aij
        cartan[j - 1][i - 1] = aji
    cartan = tuple(tuple(r) for r in cartan)

    sym = tuple(_SYMMETRIZER[t.family](n))
    for i in range(n):
        for j in range(n):
            if sym[i] * cartan[i][j] != sym[j] * cartan[j][i]:
                raise AssertionError("symmetrizer does not symmetrize cartan")

    marks = tuple(_MARKS[t.family](n))
    smax = max(sym)
    comarks = []
    for i in range(n):
        num = marks[i] * sym[i]
        if num % smax:
            raise AssertionError("comark not integral")
        comarks.append(num // smax)
    comarks = tuple(comarks)

    alpha = tuple(
        tuple(cartan[i][j] for i in range(n)) for j in range(n)
    )
    theta = tuple(
        sum(cartan[i][j] * marks[j] for j in range(n)) for i in range(n)
    )

    inv = _mat_inverse(cartan)
    d = [Fraction(s, smax) for s in sym]
    gram = tuple(
        tuple(d[i] * inv[i][j] for j in range(n)) for i in range(n)
    )

    datum = RootDatum(
        lie_type=t,
        n=n,
        cartan=cartan,
        symmetrizer=sym,
        marks=marks,
        comarks=comarks,
        highest_root=theta,
        dual_coxeter=1 + sum(comarks),
        rho=tuple([1] * n),
        alpha=alpha,
        gram=tuple(tuple(row) for row in gram),
        inv_cartan=tuple(tuple(row) for row in inv),
    )

    if datum.level(theta) != 2:
        raise AssertionError("highest root does not have level 2")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            expect = Fraction(int(i == j))
            if datum.pair_coroot(datum.fundamental_weight(i), alpha[j - 1]) != expect:
                raise AssertionError("<lambda_i, alpha_j_vee> != delta_ij")
    return datum


def root_datum(spec) -> RootDatum:
    """Accept a LieType, a RootDatum, or a textual code."""
    if isinstance(spec, RootDatum):
        return spec
    if isinstance(spec, LieType):
        return build_root_datum(spec)
    return build_root_datum(LieType.parse(spec))


# -- affine diagram automorphisms ---------------------------------------


@dataclass(frozen=True)
class DiagramMap:
    """An involutive affine-diagram automorphism with its induced linear map
    on the weight lattice (fundamental coordinates)."""

    permutation: tuple[int, ...]           # image of affine node i at index i
    matrix: tuple[tuple[int, ...], ...]    # acts on column vectors of coords

    def apply(self, w) -> Weight:
        return tuple(
            sum(row[j] * w[j] for j in range(len(w))) for row in self.matrix
        )

    @property
    def order(self) -> int:
        perm = self.permutation
        return 1 if all(perm[i] == i for i in range(len(perm))) else 2


def _find_involution(aff, fixed: dict[int, int]) -> tuple[int, ...] | None:
    """Backtracking search for an involution of the affine Cartan matrix
    extending `fixed`; deterministic (smallest free node, smallest image)."""
    m = len(aff)

    def consistent(assign, a, b):
        # adding pi(a) = b, pi(b) = a must preserve all matrix entries
        # against every already-assigned node (and the pair itself)
        if aff[a][a] != aff[b][b] or aff[a][b] != aff[b][a]:
            return False
        return all(
            aff[a][c] == aff[b][d] and aff[c][a] == aff[d][b]
            and aff[b][c] == aff[a][d] and aff[c][b] == aff[d][a]
            for c, d in assign.items()
        )

    def extend(assign):
        if len(assign) == m:
            return dict(assign)
        a = min(x for x in range(m) if x not in assign)
        taken = set(assign.values())
        for b in range(m):
            if b in taken or (b != a and b in assign):
                continue
            if not consistent(assign, a, b):
                continue
            assign[a] = b
            assign[b] = a
            res = extend(assign)
            if res is not None:
                return res
            del assign[a]
            if b != a:
                del assign[b]
        return None

    res = extend(dict(fixed))
    if res is None:
        return None
    return tuple(res[i] for i in range(m))


def affine_automorphism_swapping(t: LieType, i: int) -> DiagramMap:
    """The order-2 affine-diagram automorphism exchanging nodes 0 and i,
    with its induced linear action on the weight lattice.

    Raises CaseTwoVertexError when no such automorphism exists (the "case-2
    vertex" signal; callers then use the w_0 reflection).
    """
    datum = build_root_datum(t)
    if not 1 <= i <= datum.n:
        raise ValueError(f"node {i} out of range for {t}")
    aff = datum.affine_cartan()
    perm = _find_involution(aff, {0: i, i: 0})
    if perm is None:
        raise CaseTwoVertexError(
            f"{t} has no affine-diagram automorphism exchanging nodes 0 and {i} "
            "(case-2 vertex)"
        )
    # involutivity is structural in the search; verify anyway
    for a in range(datum.n + 1):
        if perm[perm[a]] != a:
            raise AssertionError("diagram map is not an involution")

    n = datum.n
    minus_theta = tuple(-c for c in datum.highest_root)
    cols = []
    for j in range(1, n + 1):
        tgt = perm[j]
        cols.append(minus_theta if tgt == 0 else datum.alpha[tgt - 1])
    inv = datum.inv_cartan
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            val = sum(Fraction(cols[m][r]) * inv[m][c] for m in range(n))
            if val.denominator != 1:
                raise AssertionError("diagram map is not weight-lattice integral")
            row.append(int(val))
        rows.append(tuple(row))
    return DiagramMap(permutation=perm, matrix=tuple(rows))
