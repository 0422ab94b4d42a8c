"""Pure-Python bijection kernels on one-line tuples.

Every permutation here is a tuple of images of ``1..m``.  Inputs are
trusted; validation happens in the public modules.  ``_ckernels.pyx``
mirrors this file function for function.
"""

BACKEND = "pure"


def _array(images, n):
    """1-based list holding ``images`` followed by fixed points up to ``n``."""
    return [0, *images, *range(len(images) + 1, n + 1)]


def _preimage(s, x):
    return s.index(x, 1)


def _swap_values(s, a, b):
    if a != b:
        pa = s.index(a, 1)
        pb = s.index(b, 1)
        s[pa], s[pb] = b, a


def _splice_out(s, x):
    """Take ``x`` out of its cycle and make it a fixed point."""
    if s[x] != x:
        pre = s.index(x, 1)
        s[pre] = s[x]
        s[x] = x


def _has_fixed(s, m, skip=0):
    return any(s[i] == i and i != skip for i in range(1, m + 1))


def _still_has_fixed_without(s, x):
    """Does ``s`` restricted to ``[x]`` keep a fixed point once ``x`` is deleted?"""
    if _has_fixed(s, x - 1):
        return True
    # deleting x from a 2-cycle (p, x) fixes p
    p = s[x]
    return p != x and s[p] == x


# -- phi ----------------------------------------------------------------------


def phi(e):
    n = len(e)
    s = list(range(n + 1))
    m = 1
    prev_r = False
    for k in range(2, n + 1):
        a, b = e[k - 2], e[k - 1]
        if a == b:
            prev_r = True
            continue
        w = b if b > a else b + 1
        if not prev_r and _has_fixed(s, k - 1, skip=w):
            _swap_values(s, w, k)
        else:
            _swap_values(s, w, k - 1)
        m = k
        prev_r = False
    return tuple(s[1 : m + 1])


def phi_inverse(images, n):
    s = _array(images, n)
    m = len(images)
    word = [0] * (n + 1)  # 0 encodes R
    for k in range(n, 1, -1):
        if m == k - 1:
            continue
        if s[k] != k:
            word[k] = s[k]
            pre = _preimage(s, k)
            s[pre] = s[k]
            s[k] = k
            m = k - 1
        elif _still_has_fixed_without(s, k - 1):
            word[k] = s[k - 1]
            _splice_out(s, k - 1)
            m = k - 2
        else:
            w = _preimage(s, k - 1)
            word[k] = w
            _splice_out(s, w)
            m = k - 1
    e = [0]
    for k in range(2, n + 1):
        w = word[k]
        if w == 0:
            e.append(e[-1])
        elif w > e[-1]:
            e.append(w)
        else:
            e.append(w - 1)
    return tuple(e[:n])


# -- classical derangement split --------------------------------------------


def split(images):
    n = len(images)
    s = _array(images, n)
    i = s[n]
    if s[i] == n:
        up = [x for x in range(1, n) if x != i]
        rank = {x: r for r, x in enumerate(up, 1)}
        return i, tuple(rank[s[x]] for x in up)
    pre = _preimage(s, n)
    s[pre] = i
    return i, tuple(s[1:n])


def split_inverse(i, images, n):
    if len(images) == n - 1:
        s = [0, *images, 0]
        pre = _preimage(s, i)
        s[pre] = n
        s[n] = i
        return tuple(s[1:])
    s = [0] * (n + 1)
    for x, y in enumerate(images, 1):
        s[x if x < i else x + 1] = y if y < i else y + 1
    s[i] = n
    s[n] = i
    return tuple(s[1:])


# -- first non-derangement recurrence ---------------------------------------


def varphi(images):
    n = len(images)
    s = _array(images, n)
    if s[n] != n:
        i = s[n]
        _splice_out(s, n)
        return i, tuple(s[1:n])
    if _still_has_fixed_without(s, n - 1):
        i = s[n - 1]
        _splice_out(s, n - 1)
        return i, tuple(s[1 : n - 1])
    j = _preimage(s, n - 1)
    _splice_out(s, j)
    return j, tuple(s[1:n])


def varphi_inverse(i, images, n):
    s = _array(images, n)
    if len(images) == n - 1 and _has_fixed(s, n - 1, skip=i):
        _swap_values(s, i, n)
    else:
        _swap_values(s, i, n - 1)
    return tuple(s[1:])


def varphi_alt(images):
    n = len(images)
    s = _array(images, n)
    if s[n] != n or _still_has_fixed_without(s, n - 1):
        return varphi(images)
    i = s[n - 1]
    _splice_out(s, i)
    return i, tuple(s[1:n])


def varphi_alt_inverse(i, images, n):
    s = _array(images, n)
    if len(images) == n - 2:
        _swap_values(s, i, n - 1)
    elif _has_fixed(s, n - 1, skip=i):
        _swap_values(s, i, n)
    elif i != n - 1:
        # i is the lone fixed point: put it back right after n - 1
        s[i] = s[n - 1]
        s[n - 1] = i
    return tuple(s[1:])


# -- second non-derangement recurrence --------------------------------------


def theta(images):
    """Return ``(images, mark)``."""
    n = len(images)
    s = _array(images, n)
    if s[n] != n:
        x = s[n]
        _splice_out(s, x)
        return tuple(s[1:]), x
    if _has_fixed(s, n - 1):
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
            return tuple(s[1:]), a1
        s[1] = 1
        for t in range(1, k):
            s[2 * t], s[2 * t + 1] = 2 * t + 1, 2 * t
        s[2 * k], s[a1] = a1, 2 * k
        s[c] = a2
        return tuple(s[1:]), 1
    d = c + 1
    a2 = s[d]
    s[1] = 1
    for t in range(1, k + 1):
        s[2 * t], s[2 * t + 1] = 2 * t + 1, 2 * t
    s[d] = a1
    s[a1] = a2
    return tuple(s[1:]), 1


def theta_inverse(images, mark):
    n = len(images)
    s = _array(images, n)
    if mark == n:
        return tuple(images)
    if s[n] != n or _has_fixed(s, n - 1, skip=mark):
        s[mark] = s[n]
        s[n] = mark
        return tuple(s[1:])
    if mark != 1:
        s[mark] = s[1]
        s[1] = mark
        return tuple(s[1:])
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
            s[2 * t - 1], s[2 * t] = 2 * t, 2 * t - 1
        s[d] = a1
        s[a1] = a2
        return tuple(s[1:])
    a2 = s[a1]
    for t in range(1, k):
        s[2 * t - 1], s[2 * t] = 2 * t, 2 * t - 1
    s[c - 1], s[a1] = a1, c - 1
    s[c] = a2
    return tuple(s[1:])
