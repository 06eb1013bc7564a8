# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for the exhaustive-enumeration hot loops.

Mirrors _kernels_py exactly; see that module for the semantics.
"""

from libc.stdlib cimport malloc, free

BACKEND_NAME = "c"


def curve_affine_count(long p, long a, long b):
    cdef long x, y, rhs, count = 0
    for x in range(p):
        rhs = ((a * x % p) * x % p * x % p + b * x % p) % p
        for y in range(p):
            if (y * y + rhs) % p == 0:
                count += 1
    return count


def curve_slice_counts(long p, long a, long b):
    cdef long x, i, c, v
    cdef long *values = <long *> malloc(p * sizeof(long))
    if values == NULL:
        raise MemoryError()
    out = []
    try:
        for x in range(p):
            values[x] = ((a * x % p) * x % p * x % p + b * x % p) % p
        for i in range(p):
            c = (i * i) % p
            v = 0
            for x in range(p):
                if (values[x] + c) % p == 0:
                    v += 1
            out.append(v)
    finally:
        free(values)
    return out


def curve_is_singular(long p, long a, long b):
    cdef long x, y
    for x in range(p):
        if (3 * a % p * x % p * x % p + b) % p != 0:
            continue
        for y in range(p):
            if (2 * y) % p == 0 and (y * y % p + (a * x % p) * x % p * x % p + b * x % p) % p == 0:
                return True
    return False


def functional_graph_decompose(nxt):
    cdef Py_ssize_t n = len(nxt)
    cdef Py_ssize_t start, s, i, at, d, base
    cdef long *nx = <long *> malloc(n * sizeof(long))
    cdef long *dist = <long *> malloc(n * sizeof(long))
    cdef char *state = <char *> malloc(n)
    cdef char *cyc = <char *> malloc(n)
    cdef long *path = <long *> malloc(n * sizeof(long))
    cdef Py_ssize_t plen
    if nx == NULL or dist == NULL or state == NULL or cyc == NULL or path == NULL:
        free(nx); free(dist); free(state); free(cyc); free(path)
        raise MemoryError()
    try:
        for i in range(n):
            nx[i] = nxt[i]
            dist[i] = -1
            state[i] = 0
            cyc[i] = 0
        for start in range(n):
            if state[start] != 0:
                continue
            plen = 0
            s = start
            while state[s] == 0:
                state[s] = 1
                path[plen] = s
                plen += 1
                s = nx[s]
            if state[s] == 1:
                at = 0
                while path[at] != s:
                    at += 1
                for i in range(at, plen):
                    cyc[path[i]] = 1
                    dist[path[i]] = 0
                    state[path[i]] = 2
                base = 0
                i = at - 1
            else:
                base = dist[s]
                i = plen - 1
            # unwind the tail (path entries still in state 1), walking
            # outward from the cycle so distances increase by one
            d = base
            while i >= 0 and state[path[i]] == 1:
                d += 1
                dist[path[i]] = d
                state[path[i]] = 2
                i -= 1
        on_cycle = [cyc[i] != 0 for i in range(n)]
        dists = [dist[i] for i in range(n)]
        return on_cycle, dists
    finally:
        free(nx); free(dist); free(state); free(cyc); free(path)


def collatz_sweep_reaches_one(long limit, long budget):
    cdef long start, steps
    cdef unsigned long long x
    cdef unsigned long long cap = (<unsigned long long> 1 << 62)
    cdef char *known = <char *> malloc(limit + 1)
    cdef long *path = <long *> malloc((budget + 1) * sizeof(long))
    cdef Py_ssize_t plen, i
    if known == NULL or path == NULL:
        free(known); free(path)
        raise MemoryError()
    try:
        for i in range(limit + 1):
            known[i] = 0
        if limit >= 1:
            known[1] = 1
        for start in range(1, limit + 1):
            x = start
            steps = 0
            plen = 0
            while x != 1 and not (x <= <unsigned long long> limit and known[x]):
                if steps >= budget:
                    return start
                if x <= <unsigned long long> limit:
                    path[plen] = <long> x
                    plen += 1
                if x % 2 == 0:
                    x = x // 2
                else:
                    if x > cap:
                        return start  # would overflow; treat as failure
                    x = 3 * x + 1
                steps += 1
            for i in range(plen):
                known[path[i]] = 1
        return 0
    finally:
        free(known); free(path)
