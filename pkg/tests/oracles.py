"""Definition-literal reference implementations for cross-checking.

Everything here is written the slow, obvious way on purpose: no shared
code with the package, so agreement between the two is evidence.
"""


def factors(w):
    out = {""}
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            out.add(w[i:j])
    return out


def profile(w):
    by_len = [set() for _ in range(len(w) + 1)]
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            by_len[j - i].add(w[i:j])
    return [1] + [len(s) for s in by_len[1:]]


def right_extensions(w, u):
    out = set()
    start = w.find(u)
    while start != -1:
        end = start + len(u)
        if end < len(w):
            out.add(w[end])
        start = w.find(u, start + 1)
    return out


def left_extensions(w, u):
    return {c[::-1] for c in right_extensions(w[::-1], u[::-1])}


def right_specials(w, n):
    return {u for u in factors(w) if len(u) == n
            and len(right_extensions(w, u)) >= 2}


def left_specials(w, n):
    return {u for u in factors(w) if len(u) == n
            and len(left_extensions(w, u)) >= 2}


def param_r(w):
    n = 1
    while right_specials(w, n):
        n += 1
    return n


def param_k(w):
    for n in range(1, len(w) + 1):
        suf = w[len(w) - n:]
        if sum(w[i:i + n] == suf for i in range(len(w) - n + 1)) == 1:
            return n
    raise AssertionError("unreachable for non-empty words")


def params(w):
    return param_r(w), param_k(w), param_r(w[::-1]), param_k(w[::-1])


def heart(w):
    if len(set(w)) == len(w):
        return "", w, ""
    i = 0
    while w.count(w[i]) == 1:
        i += 1
    j = len(w)
    while w.count(w[j - 1]) == 1:
        j -= 1
    return w[:i], w[i:j], w[j:]


def minimal_period(w):
    for p in range(1, len(w) + 1):
        if all(w[i] == w[i + p] for i in range(len(w) - p)):
            return p
    raise AssertionError("unreachable")


def gt_pairs(w):
    """All (m, M) pairs satisfying the trapezoid profile template."""
    c = profile(w)
    k = len(set(w))
    n = len(w)
    out = []
    for m in range(1, n + 1):
        for big in range(m, n + 1):
            if any(c[i] != k + i - 1 for i in range(1, m + 1)):
                continue
            if any(c[i] != c[m] for i in range(m, big + 1)):
                continue
            if any(c[i + 1] != c[i] - 1 for i in range(big, n)):
                continue
            out.append((m, big))
    return out


def pal_factors(w):
    return {u for u in factors(w) if u == u[::-1]}


def is_rich(w):
    return len(pal_factors(w)) == len(w) + 1


def lpp(w):
    for j in range(len(w), 0, -1):
        if w[:j] == w[j - 1::-1]:
            return w[:j]
    raise AssertionError("unreachable")


def lps(w):
    return lpp(w[::-1])[::-1]


def complete_returns(w, u):
    pos = [i for i in range(len(w) - len(u) + 1) if w[i:i + len(u)] == u]
    return [w[a:b + len(u)] for a, b in zip(pos, pos[1:])]
