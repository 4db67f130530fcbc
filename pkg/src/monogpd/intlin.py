"""Exact integer linear algebra: Smith normal form with transform
tracking, unimodular inverses, and lattice computations modulo a
diagonal of finite orders.  Everything uses Python's arbitrary-precision
integers; no floats anywhere."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def identity_matrix(n: int) -> list[list[int]]:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a[0])} vs {len(b)}")
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(cols):
                    oi[j] += v * bk[j]
    return out


def mat_vec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def mat_copy(a) -> list[list[int]]:
    return [list(row) for row in a]


def transpose(a: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*a)] if a else []


@dataclass(frozen=True)
class SNFResult:
    """U @ A @ V == S with U, V unimodular and S diagonal, each diagonal
    entry nonnegative and dividing the next."""

    U: tuple[tuple[int, ...], ...]
    S: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(len(self.S), len(self.S[0]) if self.S else 0)
        return tuple(self.S[i][i] for i in range(n))


def smith_normal_form(a: list[list[int]]) -> SNFResult:
    """Smith normal form by pivoting on a minimal-magnitude nonzero entry,
    with row/column transforms accumulated into U and V."""
    s = mat_copy(a)
    rows = len(s)
    cols = len(s[0]) if s else 0
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in s:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row dst += k * row src
        srow = s[src]
        drow = s[dst]
        for j in range(cols):
            drow[j] += k * srow[j]
        usrc = u[src]
        udst = u[dst]
        for j in range(rows):
            udst[j] += k * usrc[j]

    def add_col(dst, src, k):
        for r in s:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        # find minimal-magnitude nonzero entry in the trailing block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = s[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # reduce the pivot row and column until the pivot divides everything
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    add_row(i, t, -q)
                    if s[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    add_col(j, t, -q)
                    if s[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # ensure the pivot divides every remaining entry
        p = s[t][t]
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if s[i][j] % p:
                    add_row(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if s[t][t] < 0:
            negate_row(t)
        t += 1

    return SNFResult(
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in s),
        tuple(tuple(r) for r in v),
    )


def det_bareiss(a: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = mat_copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def unimodular_inverse(a) -> list[list[int]]:
    """Inverse of an integer matrix with determinant +-1, via exact
    fraction elimination; asserts integrality of the result."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for row in aug:
        vals = row[n:]
        if any(x.denominator != 1 for x in vals):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in vals])
    return out


def column_lattice_basis(g: list[list[int]]) -> list[list[int]]:
    """A basis (as a matrix of columns) for the lattice spanned by the
    columns of g.  Columns of U^-1 S, with the zero columns dropped."""
    if not g or not g[0]:
        return [[] for _ in g]
    snf = smith_normal_form(g)
    uinv = unimodular_inverse([list(r) for r in snf.U])
    b = mat_mul(uinv, [list(r) for r in snf.S])
    cols = [j for j in range(len(b[0])) if any(row[j] for row in b)]
    return [[row[j] for j in cols] for row in b]


def solve_integer(a: list[list[int]], z: list[int]) -> list[int] | None:
    """One integer solution x of A x = z, or None if none exists."""
    rows = len(a)
    cols = len(a[0]) if a else 0
    if rows == 0 or cols == 0:
        if any(z):
            return None
        return [0] * cols
    snf = smith_normal_form(a)
    y = mat_vec([list(r) for r in snf.U], z)
    w = [0] * cols
    d = snf.diagonal
    for i in range(rows):
        di = d[i] if i < len(d) else 0
        if di:
            if y[i] % di:
                return None
            w[i] = y[i] // di
        elif y[i]:
            return None
    return mat_vec([list(r) for r in snf.V], w)


def lattice_kernel_mod(m: list[list[int]], target_factors: list[int]) -> list[list[int]]:
    """Basis (columns) of the full-rank lattice {x in Z^cols : M x == 0
    modulo the given target factors}.  Computed as the projection onto the
    first coordinates of the integer kernel of [M | -diag(factors)]."""
    cols = len(m[0]) if m else 0
    rows = len(m)
    if rows != len(target_factors):
        raise ValueError("row count does not match target factor count")
    if cols == 0:
        return []
    if rows == 0:
        return identity_matrix(cols)
    aug = [list(m[i]) + [-target_factors[i] if j == i else 0 for j in range(rows)]
           for i in range(rows)]
    snf = smith_normal_form(aug)
    d = snf.diagonal
    n = cols + rows
    kernel_cols = [j for j in range(n) if j >= len(d) or d[j] == 0]
    v = snf.V
    gens = [[v[i][j] for j in kernel_cols] for i in range(cols)]
    return column_lattice_basis(gens)
