# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  API and results are identical to ``_kernels_py``."""

from libc.stdlib cimport calloc, free

DEF MAX_LEN = 256


cdef struct State:
    int c
    int length
    int a[MAX_LEN]
    long long *e_b
    long long *ep_b
    long long *k_b
    long long mom[4]


cdef inline int _cmp_variant(State *st, int kind) noexcept nogil:
    # Lexicographic compare of a against a transformed copy of itself:
    # kind 0 = reverse, 1 = negate, 2 = negated reverse.  Returns sign(a - t).
    cdef int i, x, y, n = st.length
    for i in range(n):
        x = st.a[i]
        if kind == 0:
            y = st.a[n - 1 - i]
        elif kind == 1:
            y = -st.a[i]
        else:
            y = -st.a[n - 1 - i]
        if x < y:
            return -1
        if x > y:
            return 1
    return 0


cdef void _leaf(State *st, int half_sum, int ell) noexcept nogil:
    cdef int b = half_sum - ell + 1
    cdef int i, x, y, n = st.length
    cdef bint pal = True, anti = True
    cdef long long bb = b
    st.e_b[b] += 1
    st.mom[0] += bb
    st.mom[2] += bb * bb
    for i in range(n // 2):
        x = st.a[i]
        y = st.a[n - 1 - i]
        if x != y:
            pal = False
        if x != -y:
            anti = False
    if pal or anti:
        st.ep_b[b] += 1
        st.mom[1] += bb
        st.mom[3] += bb * bb
    if _cmp_variant(st, 0) <= 0 and _cmp_variant(st, 1) <= 0 and _cmp_variant(st, 2) <= 0:
        st.k_b[b] += 1


cdef void _dfs(State *st, int pos, int cp, int half_sum, int ell) noexcept nogil:
    cdef int last = st.length - 1
    cdef int remaining = last - pos
    cdef int sign, s, need, v, vmax
    for sign in range(-1, 2, 2):
        s = 0
        if pos > 0 and ((st.a[pos - 1] < 0) != (sign < 0)):
            s = 1
        if pos == last:
            need = st.c - cp + s
            if need >= 2 and need % 2 == 0:
                v = need // 2
                st.a[pos] = sign * v
                _leaf(st, half_sum + v, ell + s)
            continue
        vmax = (st.c - cp - remaining + s) // 2
        for v in range(1, vmax + 1):
            st.a[pos] = sign * v
            _dfs(st, pos + 1, cp + 2 * v - s, half_sum + v, ell + s)


def census_length(int c, int length):
    cdef int size = c + 2
    cdef int i
    e_b = [0] * size
    ep_b = [0] * size
    k_b = [0] * size
    moments = [0, 0, 0, 0]
    if length < 2 or length % 2 or length > c:
        return e_b, ep_b, k_b, moments
    if length > MAX_LEN:
        raise ValueError(f"tuple length {length} exceeds compiled limit {MAX_LEN}")
    cdef State *st = <State *> calloc(1, sizeof(State))
    cdef long long *buf = <long long *> calloc(3 * size, sizeof(long long))
    if st == NULL or buf == NULL:
        free(st)
        free(buf)
        raise MemoryError()
    st.c = c
    st.length = length
    st.e_b = buf
    st.ep_b = buf + size
    st.k_b = buf + 2 * size
    try:
        with nogil:
            _dfs(st, 0, 0, 0, 0)
        for i in range(size):
            e_b[i] = buf[i]
            ep_b[i] = buf[size + i]
            k_b[i] = buf[2 * size + i]
        for i in range(4):
            moments[i] = st.mom[i]
    finally:
        free(buf)
        free(st)
    return e_b, ep_b, k_b, moments


def _binomial_walk(Py_ssize_t top, Py_ssize_t steps):
    cdef Py_ssize_t t, n
    cdef list out = []
    value = 1
    for t in range(steps):
        if top - t < t:
            value = 0
        out.append(value)
        if value:
            n = top - t
            if n == 0:
                value = 0
                continue
            value = value * (n - t) // n
            value = value * (n - 1 - t) // (t + 1)
    return out


def k_row(Py_ssize_t c):
    cdef Py_ssize_t n = (c + 2) // 2
    cdef Py_ssize_t b, j, t, h
    if c < 3:
        return []
    cdef list e = [0] * (n + 1)
    cdef list ep = [0] * (n + 1)
    if c % 2:
        e[2] = 2
    walk = _binomial_walk(c - 2, n - 1)
    for j in range(1, n - 1):
        e[j + 2] = walk[j] << j
    if c % 2 == 0:
        h = (c - 4) // 2
        walk = _binomial_walk(h, (n - 3) // 2 + 1)
        b = 3
        t = 0
        while b <= n:
            ep[b] = walk[t] << ((b - 1) // 2)
            b += 2
            t += 1
    else:
        h = (c - 3) // 2
        walk = _binomial_walk(h, (n - 2) // 2 + 1)
        b = 2
        t = 0
        while b <= n:
            ep[b] = walk[t] << (b // 2)
            b += 2
            t += 1
    cdef list row = []
    for b in range(2, n + 1):
        total = e[b] + ep[b]
        if total & 3:
            raise ArithmeticError(f"e + e_p not divisible by 4 at c={c}, b={b}")
        row.append(total >> 2)
    return row
