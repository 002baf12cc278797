"""Small exact linear algebra over the rationals.

Matrices are lists of rows; entries are ``int`` or ``Fraction``.  Everything
here is tiny (rank at most a few dozen), so plain Gaussian elimination on
``Fraction`` is both fast enough and exact.
"""

from fractions import Fraction


def frac_vec(v):
    return tuple(Fraction(x) for x in v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def matvec(m, v):
    return tuple(dot(row, v) for row in m)


def vecmat(v, m):
    """Row vector times matrix."""
    ncols = len(m[0]) if m else 0
    return tuple(sum((v[i] * m[i][j] for i in range(len(m))), Fraction(0)) for j in range(ncols))


def matmul(a, b):
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def transpose(m):
    return [list(col) for col in zip(*m)]


def rref(m):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    rows = [[Fraction(x) for x in row] for row in m]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri = rows[i]
                rr = rows[r]
                rows[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m):
    if not m:
        return 0
    return len(rref(m)[1])


def solve(a, b):
    """Solve ``a x = b`` exactly. Returns one solution or ``None`` if inconsistent.

    Free variables (if any) are set to zero.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    rows, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(rows, pivots):
        x[c] = row[n]
    return tuple(x)


def inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rows[:n]]


def nullspace(a, ncols=None):
    """Basis of ``{x : a x = 0}`` as a list of vectors."""
    if not a:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    n = len(a[0])
    rows, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, c in zip(rows, pivots):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis
