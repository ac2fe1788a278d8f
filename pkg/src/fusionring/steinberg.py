"""Steinberg bases and their affine variants.

A Steinberg basis for a full-rank centralizer is computed algorithmically:
the minimal coset representatives keeping the centralizer's positive roots
positive come from a BFS over the W-orbit of a chamber vector, each with a
reduced word; the paper's printed lists serve only as test vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootdata import (
    CaseTwoVertexError,
    DiagramMap,
    RootDatum,
    Weight,
    affine_automorphism_swapping,
)
from .weyl import affine_reflect, reflect, word_action_inv

WeylWord = tuple[int, ...]


class UnsupportedBasisError(ValueError):
    """No affine Steinberg construction is available for this (vertex, level)."""


@dataclass(frozen=True)
class SteinbergEntry:
    word: WeylWord          # w, leftmost letter applied last
    positive_weight: Weight  # lambda_w, sum over left descents
    basis_weight: Weight     # w^{-1} lambda_w


@dataclass(frozen=True)
class SteinbergBasis:
    subset: tuple[int, ...]              # simple roots of the centralizer
    entries: tuple[SteinbergEntry, ...]  # ordered by (length, lex word)


def _root_sign(datum: RootDatum, vec) -> int:
    return 1 if datum.is_positive_root_vector(vec) else -1


@lru_cache(maxsize=None)
def _positive_weyl_group_cached(datum: RootDatum, subset: tuple[int, ...]):
    n = datum.n
    xi = tuple(int(j not in subset) for j in range(1, n + 1))
    start = xi
    words = {start: ()}
    frontier = [start]
    while frontier:
        level_children: dict[Weight, WeylWord] = {}
        for x in frontier:
            for i in range(1, n + 1):
                if x[i - 1] > 0:
                    child = reflect(datum, i, x)
                    if child in words:
                        continue
                    cand = (i,) + words[x]
                    prev = level_children.get(child)
                    if prev is None or cand < prev:
                        level_children[child] = cand
        words.update(level_children)
        frontier = list(level_children)
    out = sorted(words.values(), key=lambda w: (len(w), w))
    return tuple(out)


def positive_weyl_group(datum: RootDatum, subset) -> list[WeylWord]:
    """Minimal-length representatives {w : w(R_S^+) > 0} as reduced words,
    ordered by BFS level then lexicographic word."""
    subset = tuple(sorted(subset))
    if any(not 1 <= i <= datum.n for i in subset):
        raise ValueError(f"subset {subset} out of range")
    return list(_positive_weyl_group_cached(datum, subset))


def left_descents(datum: RootDatum, word: WeylWord) -> list[int]:
    """Simple nodes i with w^{-1}(alpha_i) < 0."""
    out = []
    for i in range(1, datum.n + 1):
        img = word_action_inv(datum, word, datum.alpha[i - 1])
        if _root_sign(datum, img) < 0:
            out.append(i)
    return out


def steinberg_basis(datum: RootDatum, subset) -> SteinbergBasis:
    """B_E = {w^{-1} lambda_w} with lambda_w the sum of fundamental weights
    at the left descents of w, over the E-positive Weyl group."""
    subset = tuple(sorted(subset))
    entries = []
    seen = set()
    for word in positive_weyl_group(datum, subset):
        lam_w = [0] * datum.n
        for i in left_descents(datum, word):
            lam_w[i - 1] += 1
        lam_w = tuple(lam_w)
        basis = word_action_inv(datum, word, lam_w)
        entries.append(SteinbergEntry(word, lam_w, basis))
        seen.add(basis)
    if len(seen) != len(entries):
        raise AssertionError("Steinberg basis weights are not pairwise distinct")
    for e in entries:
        for j in range(1, datum.n + 1):
            if j in subset and e.basis_weight[j - 1] < 0:
                raise AssertionError("Steinberg basis weight left the chamber C_S")
    return SteinbergBasis(subset=subset, entries=tuple(entries))


# -- affine variants -------------------------------------------------------

# the paper's vertex for each type (Bourbaki node)
PAPER_VERTEX = {"A": 1, "B": 1, "C": 1, "D": 1, "G": 2, "F": 1}


def paper_vertex(datum: RootDatum) -> int:
    fam, n = datum.lie_type.family, datum.n
    if fam == "E":
        return {6: 1, 7: 7, 8: 8}[n]
    return PAPER_VERTEX[fam]


@dataclass(frozen=True)
class AffineSteinbergBasis:
    level: int
    vertex: int
    ab_e: tuple[Weight, ...]   # ordered like the underlying Steinberg entries
    ab_v: tuple[Weight, ...]   # AB_e intersected with C_v
    transform: str             # 'diagram-map' | 'w0-reflection' | 'shift-only'
    edge_only: bool            # True: Steinberg basis for Z_e only, AB_v empty
    base: SteinbergBasis
    diagram_map: DiagramMap | None = None

    @property
    def complement(self) -> tuple[Weight, ...]:
        inside = set(self.ab_v)
        return tuple(w for w in self.ab_e if w not in inside)


def in_vertex_chamber(datum: RootDatum, v: int, k: int, w) -> bool:
    """Membership in C_v: W^v-dominant, i.e. all walls of the chamber of
    W^v containing the level-k alcove are respected."""
    return all(
        c >= 0 for j, c in enumerate(w, start=1) if j != v
    ) and datum.level(w) <= k


def _case_one_map(datum: RootDatum, v: int) -> DiagramMap | None:
    try:
        return affine_automorphism_swapping(datum.lie_type, v)
    except CaseTwoVertexError:
        return None


def affine_steinberg_basis(datum: RootDatum, v: int, k: int) -> AffineSteinbergBasis:
    """Build (AB_e, AB_v) for the paper's supported (vertex, level) cases.

    Case-1 vertices (A:1, B:1, D:1, E6:1, E7:7) transform by the affine
    diagram automorphism for any k; case-2 vertices (C:1 any k; G2:2, F4:1,
    E8:8 at even k) use the w_0 reflection with the shift k lambda_v / h_v.
    G2 at odd k uses the shift-only construction; F4/E8 at odd k return an
    edge-only Steinberg basis with the shift (k+1) lambda_v / 2.
    """
    if k < 1:
        raise UnsupportedBasisError("level must be >= 1")
    fam = datum.lie_type.family
    if v != paper_vertex(datum):
        raise UnsupportedBasisError(
            f"vertex {v} of {datum.lie_type} is not a supported case "
            f"(paper vertex is {paper_vertex(datum)})"
        )
    subset = tuple(j for j in range(1, datum.n + 1) if j != v)
    base = steinberg_basis(datum, subset)
    comark = datum.comarks[v - 1]

    rmap = _case_one_map(datum, v)
    transform = "diagram-map" if rmap is not None else "w0-reflection"
    edge_only = False

    if rmap is not None:
        if comark != 1:
            raise AssertionError("case-1 vertices must have comark 1")
        shift_num = k  # shift = k * lambda_v
        apply_r = rmap.apply
    else:
        if comark == 1:  # type C
            shift_num = k
            apply_r = lambda w: affine_reflect(datum, 0, w)
        elif k % comark == 0:
            shift_num = k // comark
            apply_r = lambda w: affine_reflect(datum, 0, w)
        elif fam == "G":
            # shift-only construction, no reflection
            transform = "shift-only"
            shift_num = (k + 1) // 2
            apply_r = lambda w: tuple(w)
        elif fam in ("F", "E"):
            # twisted R_k[Z_v]: the shifted set remains a basis for Z_e only
            transform = "w0-reflection"
            edge_only = True
            shift_num = (k + 1) // 2
            apply_r = lambda w: affine_reflect(datum, 0, w)
        else:
            raise UnsupportedBasisError(
                f"level {k} is not divisible by the dual Coxeter label "
                f"{comark} of node {v}"
            )

    ab_e = []
    for e in base.entries:
        w = apply_r(e.basis_weight)
        w = tuple(
            c + shift_num * int(j == v) for j, c in enumerate(w, start=1)
        )
        ab_e.append(w)
    ab_e = tuple(ab_e)
    if len(set(ab_e)) != len(ab_e):
        raise AssertionError("affine Steinberg weights are not distinct")
    if edge_only:
        ab_v = ()
    else:
        ab_v = tuple(w for w in ab_e if in_vertex_chamber(datum, v, k, w))
    return AffineSteinbergBasis(
        level=k,
        vertex=v,
        ab_e=ab_e,
        ab_v=ab_v,
        transform=transform,
        edge_only=edge_only,
        base=base,
        diagram_map=rmap,
    )
