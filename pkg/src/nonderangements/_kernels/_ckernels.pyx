# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bijection kernels; a line-for-line port of ``pure.py``."""

BACKEND = "cython"

cdef enum:
    MAXN = 62

cdef int _load(int* s, object images, int n) except -1:
    cdef int m = len(images)
    cdef int i
    if n > MAXN or m > n:
        raise ValueError(f"compiled kernels support n <= {MAXN}")
    s[0] = 0
    i = 1
    for y in images:
        s[i] = y
        i += 1
    for i in range(m + 1, n + 1):
        s[i] = i
    return 0


cdef tuple _dump(int* s, int lo, int hi):
    return tuple([s[i] for i in range(lo, hi + 1)])


cdef inline int _preimage(int* s, int n, int x):
    cdef int i
    for i in range(1, n + 1):
        if s[i] == x:
            return i
    return 0


cdef inline void _swap_values(int* s, int n, int a, int b):
    cdef int pa, pb
    if a != b:
        pa = _preimage(s, n, a)
        pb = _preimage(s, n, b)
        s[pa] = b
        s[pb] = a


cdef inline void _splice_out(int* s, int n, int x):
    cdef int pre
    if s[x] != x:
        pre = _preimage(s, n, x)
        s[pre] = s[x]
        s[x] = x


cdef inline bint _has_fixed(int* s, int m, int skip):
    cdef int i
    for i in range(1, m + 1):
        if s[i] == i and i != skip:
            return True
    return False


cdef inline bint _still_has_fixed_without(int* s, int x):
    cdef int p
    if _has_fixed(s, x - 1, 0):
        return True
    p = s[x]
    return p != x and s[p] == x


def phi(e):
    cdef int s[MAXN + 2]
    cdef int n = len(e)
    cdef int k, a, b, w, m = 1
    cdef bint prev_r = False
    if n > MAXN:
        raise ValueError(f"compiled kernels support n <= {MAXN}")
    for k in range(n + 1):
        s[k] = k
    for k in range(2, n + 1):
        a = e[k - 2]
        b = e[k - 1]
        if a == b:
            prev_r = True
            continue
        w = b if b > a else b + 1
        if not prev_r and _has_fixed(s, k - 1, w):
            _swap_values(s, k, w, k)
        else:
            _swap_values(s, k, w, k - 1)
        m = k
        prev_r = False
    return _dump(s, 1, m)


def phi_inverse(images, int n):
    cdef int s[MAXN + 2]
    cdef int word[MAXN + 2]
    cdef int e[MAXN + 2]
    cdef int m = len(images)
    cdef int k, pre, w
    _load(s, images, n)
    for k in range(n + 1):
        word[k] = 0
    for k in range(n, 1, -1):
        if m == k - 1:
            continue
        if s[k] != k:
            word[k] = s[k]
            pre = _preimage(s, k, k)
            s[pre] = s[k]
            s[k] = k
            m = k - 1
        elif _still_has_fixed_without(s, k - 1):
            word[k] = s[k - 1]
            _splice_out(s, k - 1, k - 1)
            m = k - 2
        else:
            w = _preimage(s, k - 1, k - 1)
            word[k] = w
            _splice_out(s, k - 1, w)
            m = k - 1
    e[1] = 0
    for k in range(2, n + 1):
        w = word[k]
        if w == 0:
            e[k] = e[k - 1]
        elif w > e[k - 1]:
            e[k] = w
        else:
            e[k] = w - 1
    return _dump(e, 1, n)


def split(images):
    cdef int s[MAXN + 2]
    cdef int rank[MAXN + 2]
    cdef int n = len(images)
    cdef int i, x, r, pre
    _load(s, images, n)
    i = s[n]
    if s[i] == n:
        r = 0
        for x in range(1, n):
            if x != i:
                r += 1
                rank[x] = r
        return i, tuple([rank[s[x]] for x in range(1, n) if x != i])
    pre = _preimage(s, n, n)
    s[pre] = i
    return i, _dump(s, 1, n - 1)


def split_inverse(int i, images, int n):
    cdef int s[MAXN + 2]
    cdef int x, y, pre
    if n > MAXN:
        raise ValueError(f"compiled kernels support n <= {MAXN}")
    if len(images) == n - 1:
        _load(s, images, n)
        pre = _preimage(s, n - 1, i)
        s[pre] = n
        s[n] = i
        return _dump(s, 1, n)
    x = 1
    for y in images:
        s[x if x < i else x + 1] = y if y < i else y + 1
        x += 1
    s[i] = n
    s[n] = i
    return _dump(s, 1, n)


def varphi(images):
    cdef int s[MAXN + 2]
    cdef int n = len(images)
    cdef int i, j
    _load(s, images, n)
    if s[n] != n:
        i = s[n]
        _splice_out(s, n, n)
        return i, _dump(s, 1, n - 1)
    if _still_has_fixed_without(s, n - 1):
        i = s[n - 1]
        _splice_out(s, n, n - 1)
        return i, _dump(s, 1, n - 2)
    j = _preimage(s, n, n - 1)
    _splice_out(s, n, j)
    return j, _dump(s, 1, n - 1)


def varphi_inverse(int i, images, int n):
    cdef int s[MAXN + 2]
    _load(s, images, n)
    if len(images) == n - 1 and _has_fixed(s, n - 1, i):
        _swap_values(s, n, i, n)
    else:
        _swap_values(s, n, i, n - 1)
    return _dump(s, 1, n)


def varphi_alt(images):
    cdef int s[MAXN + 2]
    cdef int n = len(images)
    cdef int i
    _load(s, images, n)
    if s[n] != n or _still_has_fixed_without(s, n - 1):
        return varphi(images)
    i = s[n - 1]
    _splice_out(s, n, i)
    return i, _dump(s, 1, n - 1)


def varphi_alt_inverse(int i, images, int n):
    cdef int s[MAXN + 2]
    _load(s, images, n)
    if len(images) == n - 2:
        _swap_values(s, n, i, n - 1)
    elif _has_fixed(s, n - 1, i):
        _swap_values(s, n, i, n)
    elif i != n - 1:
        s[i] = s[n - 1]
        s[n - 1] = i
    return _dump(s, 1, n)


def theta(images):
    cdef int s[MAXN + 2]
    cdef int n = len(images)
    cdef int x, k, c, d, t, a1, a2
    _load(s, images, n)
    if s[n] != n:
        x = s[n]
        _splice_out(s, n, x)
        return _dump(s, 1, n), x
    if _has_fixed(s, n - 1, 0):
        return tuple(images), n
    k = 0
    while 2 * k + 2 <= n and s[2 * k + 1] == 2 * k + 2 and s[2 * k + 2] == 2 * k + 1:
        k += 1
    c = 2 * k + 1
    if c == n:
        raise ValueError("theta is undefined on (1,2)(3,4)...(n-2,n-1)(n)")
    a1 = s[c]
    if s[a1] != c:
        a2 = s[a1]
        if k == 0:
            s[a1] = a1
            s[1] = a2
            return _dump(s, 1, n), a1
        s[1] = 1
        for t in range(1, k):
            s[2 * t] = 2 * t + 1
            s[2 * t + 1] = 2 * t
        s[2 * k] = a1
        s[a1] = 2 * k
        s[c] = a2
        return _dump(s, 1, n), 1
    d = c + 1
    a2 = s[d]
    s[1] = 1
    for t in range(1, k + 1):
        s[2 * t] = 2 * t + 1
        s[2 * t + 1] = 2 * t
    s[d] = a1
    s[a1] = a2
    return _dump(s, 1, n), 1


def theta_inverse(images, int mark):
    cdef int s[MAXN + 2]
    cdef int n = len(images)
    cdef int k, c, d, t, a1, a2
    _load(s, images, n)
    if mark == n:
        return tuple(images)
    if s[n] != n or _has_fixed(s, n - 1, mark):
        s[mark] = s[n]
        s[n] = mark
        return _dump(s, 1, n)
    if mark != 1:
        s[mark] = s[1]
        s[1] = mark
        return _dump(s, 1, n)
    k = 1
    while 2 * k + 1 <= n and s[2 * k] == 2 * k + 1 and s[2 * k + 1] == 2 * k:
        k += 1
    c = 2 * k
    if c == n:
        raise ValueError("theta inverse is undefined on (*1)(2,3)...(n-2,n-1)(n)")
    a1 = s[c]
    if s[a1] == c:
        d = c + 1
        a2 = s[d]
        for t in range(1, k + 1):
            s[2 * t - 1] = 2 * t
            s[2 * t] = 2 * t - 1
        s[d] = a1
        s[a1] = a2
        return _dump(s, 1, n)
    a2 = s[a1]
    for t in range(1, k):
        s[2 * t - 1] = 2 * t
        s[2 * t] = 2 * t - 1
    s[c - 1] = a1
    s[a1] = c - 1
    s[c] = a2
    return _dump(s, 1, n)
