"""Pure-Python versions of the compiled kernels, same signatures."""


def rank_mod_p(a, p):
    """Rank of an integer matrix modulo ``p``."""
    m = [[int(x) % p for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        top = [x * inv % p for x in m[r]]
        m[r] = top
        for i in range(r + 1, rows):
            f = m[i][c]
            if f:
                row = m[i]
                m[i] = [(x - f * y) % p for x, y in zip(row, top)]
        r += 1
    return r
