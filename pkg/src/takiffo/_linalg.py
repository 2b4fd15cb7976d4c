"""Small exact linear algebra helpers over Fraction.

Matrices are tuples of row tuples; vectors are tuples.  Everything here is
tiny (rank <= 8), so plain Gaussian elimination is plenty.
"""

from fractions import Fraction


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(m, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def mat_mul(a, b):
    n, k = len(a), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(k))
        for i in range(n)
    )


def mat_inv(m):
    """Exact inverse of a square matrix, entries promoted to Fraction."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        d = aug[col][col]
        aug[col] = [x / d for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve_columns(columns, target):
    """Solve sum_j x_j * columns[j] = target exactly.

    The columns need not span; returns the coefficient tuple or None when the
    system is inconsistent.  Columns are assumed linearly independent.
    """
    n = len(target)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])]
           for i in range(n)]
    row = 0
    pivots = []
    for col in range(k):
        piv = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if piv is None:
            return None  # dependent columns; not expected
        aug[row], aug[piv] = aug[piv], aug[row]
        d = aug[row][col]
        aug[row] = [x / d for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, n):
        if aug[r][k] != 0:
            return None
    return tuple(aug[i][k] for i in range(len(pivots)))


def invert_unitriangular(m):
    """Inverse of a lower unitriangular integer matrix, exactly, over int."""
    n = len(m)
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            s = sum(m[i][t] * inv[t][j] for t in range(j, i))
            inv[i][j] = -s
    return tuple(tuple(r) for r in inv)
