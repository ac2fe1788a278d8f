"""Pure-Python straightening kernel (reference implementation).

The compiled `_speedups` module mirrors `straighten_core` exactly; this
version is always available and additionally supports a pluggable wall-choice
policy plus a per-step potential check (the runtime stand-in for the
termination proof: linear reflections preserve the scaled norm and strictly
decrease the inversion count, affine reflections strictly decrease the scaled
norm).
"""

from __future__ import annotations

BACKEND_NAME = "python"


def straighten_core(x, alpha_cols, comarks, theta, active, wall, max_steps):
    """Reflect x into {x_i >= 0 for i in active} cut with {level <= wall}.

    x           -- list/tuple of ints (already shifted by the caller)
    alpha_cols  -- alpha_cols[i] is the i-th simple root, fundamental coords
    comarks     -- level functional coefficients
    theta       -- highest root, fundamental coords
    active      -- 0-based indices of participating simple walls, ascending
    wall        -- affine level wall, or -1 for a purely linear group
    max_steps   -- hard iteration guard

    Returns (tuple(result), sign, steps); sign is 0 when the result lies on
    a reflecting wall of the group.
    """
    n = len(x)
    x = list(x)
    sign = 1
    steps = 0
    while True:
        moved = False
        for i in active:
            c = x[i]
            if c < 0:
                col = alpha_cols[i]
                for j in range(n):
                    x[j] -= c * col[j]
                sign = -sign
                steps += 1
                moved = True
                break
        if moved:
            if steps > max_steps:
                raise RuntimeError("straightening exceeded its iteration bound")
            continue
        if wall >= 0:
            lvl = 0
            for j in range(n):
                lvl += comarks[j] * x[j]
            if lvl > wall:
                d = lvl - wall
                for j in range(n):
                    x[j] -= d * theta[j]
                sign = -sign
                steps += 1
                if steps > max_steps:
                    raise RuntimeError("straightening exceeded its iteration bound")
                continue
        break
    for i in active:
        if x[i] == 0:
            sign = 0
            break
    if sign and wall >= 0:
        if sum(comarks[j] * x[j] for j in range(n)) == wall:
            sign = 0
    return tuple(x), sign, steps


def straighten_core_policy(x, alpha_cols, comarks, theta, active, wall,
                           max_steps, choose, norm2=None):
    """Policy-driven variant used by the confluence property tests.

    `choose(options)` picks the next violated wall from a non-empty list
    (0-based simple index, or -1 for the affine wall).  When `norm2` is
    given (a callable returning a scaled integer norm), every affine step
    asserts strict decrease of the potential.
    """
    n = len(x)
    x = list(x)
    sign = 1
    steps = 0
    while True:
        options = [i for i in active if x[i] < 0]
        lvl = sum(comarks[j] * x[j] for j in range(n)) if wall >= 0 else 0
        if wall >= 0 and lvl > wall:
            options.append(-1)
        if not options:
            break
        pick = choose(options)
        if pick == -1:
            before = norm2(x) if norm2 is not None else None
            d = lvl - wall
            for j in range(n):
                x[j] -= d * theta[j]
            if norm2 is not None and not norm2(x) < before:
                raise RuntimeError("affine step failed to decrease the potential")
        else:
            c = x[pick]
            col = alpha_cols[pick]
            for j in range(n):
                x[j] -= c * col[j]
        sign = -sign
        steps += 1
        if steps > max_steps:
            raise RuntimeError("straightening exceeded its iteration bound")
    for i in active:
        if x[i] == 0:
            sign = 0
    if sign and wall >= 0:
        if sum(comarks[j] * x[j] for j in range(n)) == wall:
            sign = 0
    return tuple(x), sign, steps
