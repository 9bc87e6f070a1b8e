"""Test-only oracles, independent of the production code paths.

- tensor_eta_product: multiplies eta basis elements by materializing them as
  signed sums of pure tensors in M_n(A)^{otimes d} and re-collecting orbits.
- lr_brute / multi_lr_brute: Littlewood-Richardson coefficients by direct
  skew-filling enumeration with the reverse lattice word condition.
- ssyt_count: Kostka numbers by filling enumeration.
"""
from itertools import permutations, product

from schurify.partitions import conjugate, trim


# ---------------------------------------------------------------------------
# tensor-materialization multiplication oracle
# ---------------------------------------------------------------------------

def _eta_tensor_vec(T, orbit):
    """eta_orbit as a vector on the pure-tensor word basis."""
    ctx = T.ctx
    m = ctx.factorial(orbit, "c")
    out = {}
    for w in set(permutations(orbit)):
        sgn = -1 if ctx.triple_stat(w) else 1
        out[w] = out.get(w, 0) + sgn * m
    return out


def _pure_mul(T, u, v):
    """Product of two pure tensors, with the Koszul sign for interleaving."""
    d = len(u)
    for k in range(d):
        if u[k][2] != v[k][1]:
            return {}
    sgn = -1 if T.ctx.pair_stat(
        tuple(b for (b, _r, _s) in u), tuple(b for (b, _r, _s) in v)
    ) else 1
    factor_items = []
    for k in range(d):
        f = T.alg.mul_basis(u[k][0], v[k][0])
        if not f:
            return {}
        factor_items.append(list(f.items()))
    out = {}
    for combo in product(*factor_items):
        word = tuple((combo[k][0], u[k][1], v[k][2]) for k in range(d))
        c = sgn
        for (_b, cc) in combo:
            c *= cc
        out[word] = out.get(word, 0) + c
    return out


def tensor_eta_product(T, o1, o2):
    """eta_{o1} * eta_{o2} computed in M_n(A)^{otimes d}, on the eta basis."""
    ctx = T.ctx
    acc = {}
    for u, c1 in _eta_tensor_vec(T, o1).items():
        for v, c2 in _eta_tensor_vec(T, o2).items():
            for w, c in _pure_mul(T, u, v).items():
                acc[w] = acc.get(w, 0) + c1 * c2 * c
    out = {}
    for w, c in acc.items():
        if not c:
            continue
        if w != tuple(sorted(w, key=ctx.key)):
            continue  # read each orbit off its canonical representative
        den = ctx.factorial(w, "c")
        assert c % den == 0, (w, c, den)
        out[w] = c // den
    return out


def word_parity(T, word):
    return sum(T.alg.parity[b] for (b, _r, _s) in word) % 2


# ---------------------------------------------------------------------------
# brute-force LR / Kostka
# ---------------------------------------------------------------------------

def _skew_fillings(lam, mu, content):
    """All semistandard fillings of lam/mu with the given content, as grids
    (None on the mu part)."""
    lam = trim(lam)
    mu = tuple(mu) + (0,) * (len(lam) - len(mu))
    cells = [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]
    remaining = list(content)

    def rec(k, grid):
        if k == len(cells):
            yield [row[:] for row in grid]
            return
        r, c = cells[k]
        for v in range(len(remaining)):
            if not remaining[v]:
                continue
            if c > 0 and c - 1 >= mu[r] and grid[r][c - 1] is not None and grid[r][c - 1] > v:
                continue
            if r > 0 and c < lam[r - 1] and grid[r - 1][c] is not None and grid[r - 1][c] >= v:
                continue
            remaining[v] -= 1
            grid[r][c] = v
            yield from rec(k + 1, grid)
            grid[r][c] = None
            remaining[v] += 1

    grid = [[None] * lam[r] for r in range(len(lam))]
    yield from rec(0, grid)


def _is_lattice(lam, mu, grid):
    """Reverse reading word (rows top to bottom, right to left) is a lattice word."""
    counts = {}
    for row in grid:
        for v in reversed(row):
            if v is None:
                continue
            counts[v] = counts.get(v, 0) + 1
            if v > 0 and counts[v] > counts.get(v - 1, 0):
                return False
    return True


def lr_brute(lam, mu, nu):
    """c^lam_{mu,nu} by enumerating LR skew tableaux of shape lam/mu, content nu."""
    lam, mu, nu = trim(lam), trim(mu), trim(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if any(m > l for m, l in zip(list(mu) + [0] * len(lam), lam)) or len(mu) > len(lam):
        return 0
    return sum(1 for g in _skew_fillings(lam, mu, nu) if _is_lattice(lam, mu, g))


def multi_lr_brute(lam, factors, twists=None):
    """Multi-factor coefficient by iterating the two-factor brute force."""
    factors = [trim(f) for f in factors]
    if twists:
        factors = [conjugate(f) if t % 2 else f for f, t in zip(factors, twists)]
    state = {(): 1}
    for f in factors:
        nxt = {}
        for nu, c in state.items():
            target = sum(nu) + sum(f)
            for cand in _partitions_of(target):
                k = lr_brute(cand, nu, f)
                if k:
                    nxt[cand] = nxt.get(cand, 0) + c * k
        state = nxt
    return state.get(trim(lam), 0)


def _partitions_of(m):
    out = []

    def rec(left, mx, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for p in range(min(left, mx), 0, -1):
            rec(left - p, p, acc + [p])

    rec(m, m, [])
    return out


def ssyt_count(lam, mu):
    """Kostka number by direct semistandard filling enumeration (no lattice
    condition; content need not be a partition)."""
    return sum(1 for _g in _skew_fillings(trim(lam), (), tuple(mu)))
