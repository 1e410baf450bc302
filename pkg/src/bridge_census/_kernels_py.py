"""Pure-Python hot kernels; the compiled ``_kernels`` module mirrors this API."""

from __future__ import annotations


def census_length(c: int, length: int):
    """Count even continued fractions of one length with crossing number ``c``.

    Returns ``(e_b, ep_b, k_b, moments)``: three lists indexed by braid index
    (size ``c + 2``) holding all tuples, (anti-)palindromic tuples and
    orbit-canonical tuples, plus ``[sum b, sum b over palindromes, sum b^2,
    sum b^2 over palindromes]`` accumulated tuple by tuple.
    """
    size = c + 2
    e_b = [0] * size
    ep_b = [0] * size
    k_b = [0] * size
    moments = [0, 0, 0, 0]
    if length < 2 or length % 2 or length > c:
        return e_b, ep_b, k_b, moments
    a = [0] * length
    last = length - 1

    def leaf(half_sum, ell):
        b = half_sum - ell + 1
        e_b[b] += 1
        moments[0] += b
        moments[2] += b * b
        pal = True
        anti = True
        for i in range(length // 2):
            x, y = a[i], a[last - i]
            if x != y:
                pal = False
            if x != -y:
                anti = False
        if pal or anti:
            ep_b[b] += 1
            moments[1] += b
            moments[3] += b * b
        t = tuple(a)
        rev = t[::-1]
        if t <= rev and t <= tuple(-x for x in t) and t <= tuple(-x for x in rev):
            k_b[b] += 1

    def dfs(pos, cp, half_sum, ell):
        remaining = last - pos
        for sign in (-1, 1):
            s = 1 if pos and (a[pos - 1] < 0) != (sign < 0) else 0
            if pos == last:
                need = c - cp + s
                if need >= 2 and need % 2 == 0:
                    v = need // 2
                    a[pos] = sign * v
                    leaf(half_sum + v, ell + s)
                continue
            vmax = (c - cp - remaining + s) // 2
            for v in range(1, vmax + 1):
                a[pos] = sign * v
                dfs(pos + 1, cp + 2 * v - s, half_sum + v, ell + s)

    dfs(0, 0, 0, 0)
    return e_b, ep_b, k_b, moments


def _binomial_walk(top: int, steps: int):
    """Yield ``C(top - t, t)`` for ``t = 0, 1, ..., steps - 1``.

    Consecutive terms are linked by exact small-integer updates, so each step
    costs two bignum-by-word multiplications and divisions.
    """
    value = 1
    for t in range(steps):
        if top - t < t:
            value = 0
        yield value
        if value:
            n = top - t
            # C(n, t) -> C(n - 1, t) -> C(n - 1 - 1 + 1, t + 1) = C(n - 1, t + 1)
            if n == 0:
                value = 0
                continue
            value = value * (n - t) // n
            value = value * (n - 1 - t) // (t + 1)


def k_row(c: int) -> list[int]:
    """Return ``[k_{c,2}, ..., k_{c,n}]`` with ``n = ceil((c+1)/2)``.

    Built from ``k = (e + e_p) / 4`` with both rows generated incrementally.
    """
    n = (c + 2) // 2
    if c < 3:
        return []
    e = [0] * (n + 1)
    if c % 2:
        e[2] = 2
    # e(c, b) = 2^(b-2) C(c-b, b-2) for 3 <= b <= n; with j = b - 2 this is C((c-2) - j, j).
    for j, binom in enumerate(_binomial_walk(c - 2, n - 1)):
        b = j + 2
        if b >= 3:
            e[b] = binom << j
    ep = [0] * (n + 1)
    if c % 2 == 0:
        # b odd: 2^((b-1)/2) C(h - t, t), h = (c-4)/2, t = (b-3)/2
        h = (c - 4) // 2
        b = 3
        for t, binom in enumerate(_binomial_walk(h, (n - 3) // 2 + 1)):
            if b > n:
                break
            ep[b] = binom << ((b - 1) // 2)
            b += 2
    else:
        # b even: 2^(b/2) C(h - t, t), h = (c-3)/2, t = (b-2)/2
        h = (c - 3) // 2
        b = 2
        for t, binom in enumerate(_binomial_walk(h, (n - 2) // 2 + 1)):
            if b > n:
                break
            ep[b] = binom << (b // 2)
            b += 2
    row = []
    for b in range(2, n + 1):
        total = e[b] + ep[b]
        if total & 3:
            raise ArithmeticError(f"e + e_p not divisible by 4 at c={c}, b={b}")
        row.append(total >> 2)
    return row
