# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled straightening kernel; mirrors _kernels_py.straighten_core.

Coordinates stay far below 2**62 for every supported rank/level (they are
bounded by the finite orbit of the input), so plain C long long arithmetic
is exact here.
"""

BACKEND_NAME = "compiled"

cdef int _MAXN = 16


def straighten_core(x, alpha_cols, comarks, theta, active, long long wall,
                    long long max_steps):
    cdef long long xv[16]
    cdef long long al[16][16]
    cdef long long cm[16]
    cdef long long th[16]
    cdef int act[16]
    cdef int n = len(x)
    cdef int na = len(active)
    cdef int i, j, k, found
    cdef long long c, lvl, d, steps = 0, sign = 1

    if n > _MAXN:
        raise ValueError("rank too large for the compiled kernel")
    for i in range(n):
        xv[i] = x[i]
        cm[i] = comarks[i]
        th[i] = theta[i]
        col = alpha_cols[i]
        for j in range(n):
            al[i][j] = col[j]
    for i in range(na):
        act[i] = active[i]

    while True:
        found = -1
        for k in range(na):
            i = act[k]
            if xv[i] < 0:
                found = i
                break
        if found >= 0:
            c = xv[found]
            for j in range(n):
                xv[j] -= c * al[found][j]
            sign = -sign
            steps += 1
            if steps > max_steps:
                raise RuntimeError("straightening exceeded its iteration bound")
            continue
        if wall >= 0:
            lvl = 0
            for j in range(n):
                lvl += cm[j] * xv[j]
            if lvl > wall:
                d = lvl - wall
                for j in range(n):
                    xv[j] -= d * th[j]
                sign = -sign
                steps += 1
                if steps > max_steps:
                    raise RuntimeError("straightening exceeded its iteration bound")
                continue
        break

    for k in range(na):
        if xv[act[k]] == 0:
            sign = 0
            break
    if sign != 0 and wall >= 0:
        lvl = 0
        for j in range(n):
            lvl += cm[j] * xv[j]
        if lvl == wall:
            sign = 0
    return tuple([xv[i] for i in range(n)]), sign, steps
