"""Exact linear algebra: Smith normal form over Z, integer kernels and
homology of chain maps, and Gaussian elimination over F_p and Q."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols_b = len(b[0])
    out = [[0] * cols_b for _ in a]
    for i, row in enumerate(a):
        for k, aik in enumerate(row):
            if aik:
                brow = b[k]
                orow = out[i]
                for j in range(cols_b):
                    orow[j] += aik * brow[j]
    return out


def mat_vec(a: Matrix, v: Sequence[int]) -> List[int]:
    return [sum(aij * vj for aij, vj in zip(row, v)) for row in a]


def smith_normal_form(a: Matrix) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*A*V = D, U and V unimodular, D diagonal with
    nonnegative entries forming a divisibility chain d1 | d2 | ...
    """
    m = len(a)
    n = len(a[0]) if a else 0
    d = [row[:] for row in a]
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        drow, srow = d[dst], d[src]
        for j in range(n):
            drow[j] += c * srow[j]
        urow, usrow = u[dst], u[src]
        for j in range(m):
            urow[j] += c * usrow[j]

    def add_col(dst, src, c):
        for row in d:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < m and t < n:
        # pick the nonzero pivot of least magnitude in the remaining block
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    if d[i][t]:
                        swap_rows(i, t)
                        done = False
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    if d[t][j]:
                        swap_cols(j, t)
                        done = False
            if done:
                break
        if d[t][t] < 0:
            negate_row(t)
        t += 1

    # enforce divisibility chain
    r = t
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            if d[i + 1][i + 1] % d[i][i] != 0:
                # fold entry i+1 into row/column i and re-clear
                add_col(i, i + 1, 1)
                g_i = i
                while True:
                    done = True
                    if d[g_i + 1][g_i]:
                        q = d[g_i + 1][g_i] // d[g_i][g_i]
                        add_row(g_i + 1, g_i, -q)
                        if d[g_i + 1][g_i]:
                            swap_rows(g_i + 1, g_i)
                            done = False
                    if d[g_i][g_i + 1]:
                        q = d[g_i][g_i + 1] // d[g_i][g_i]
                        add_col(g_i + 1, g_i, -q)
                        if d[g_i][g_i + 1]:
                            swap_cols(g_i + 1, g_i)
                            done = False
                    if done:
                        break
                if d[g_i][g_i] < 0:
                    negate_row(g_i)
                if d[g_i + 1][g_i + 1] < 0:
                    negate_row(g_i + 1)
                changed = True
    return u, d, v


def diagonal_of(d: Matrix) -> List[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def invariant_factors(a: Matrix) -> List[int]:
    _, d, _ = smith_normal_form(a)
    return [x for x in diagonal_of(d) if x]


def integer_kernel(a: Matrix) -> List[List[int]]:
    """Basis (list of column vectors) of the integer kernel of A."""
    if not a or not a[0]:
        n = len(a[0]) if a else 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    u, d, v = smith_normal_form(a)
    n = len(a[0])
    diag = diagonal_of(d)
    basis = []
    for j in range(n):
        if j >= len(diag) or diag[j] == 0:
            basis.append([v[i][j] for i in range(n)])
    return basis


def solve_integer(a: Matrix, b: Sequence[int]) -> Optional[List[int]]:
    """One integer solution x of A x = b, or None."""
    if not a:
        return None if any(b) else []
    u, d, v = smith_normal_form(a)
    n = len(a[0])
    c = mat_vec(u, list(b))
    diag = diagonal_of(d)
    y = [0] * n
    for i, ci in enumerate(c):
        di = diag[i] if i < len(diag) else 0
        if di:
            q, r = divmod(ci, di)
            if r:
                return None
            y[i] = q
        elif ci:
            return None
    return mat_vec(v, y)


def cokernel_structure(a: Matrix, rows: int) -> Tuple[int, List[int]]:
    """Structure of Z^rows / col-span(A): (free rank, torsion orders > 1)."""
    if not a or not a[0]:
        return rows, []
    facs = invariant_factors(a)
    free = rows - len(facs)
    torsion = [f for f in facs if f != 1]
    return free, torsion


def homology(a: Matrix, b: Matrix) -> Tuple[int, List[int]]:
    """Structure of ker(A)/im(B) as (free rank, torsion orders > 1).

    A: p x n, B: n x q with A*B = 0.  A or B may be empty (no rows/cols).
    """
    n = len(a[0]) if (a and a[0]) else (len(b) if b else 0)
    if n == 0:
        return 0, []
    if a and a[0]:
        kbasis = integer_kernel(a)
    else:
        kbasis = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    k = len(kbasis)
    if k == 0:
        return 0, []
    if not b or not b[0]:
        return k, []
    # express the columns of B in kernel coordinates
    kmat = [[kbasis[j][i] for j in range(k)] for i in range(n)]  # n x k
    q = len(b[0])
    x = [[0] * q for _ in range(k)]
    for col in range(q):
        rhs = [b[i][col] for i in range(n)]
        sol = solve_integer(kmat, rhs)
        assert sol is not None, "image does not lie in kernel"
        for i in range(k):
            x[i][col] = sol[i]
    return cokernel_structure(x, k)


def p_local_part(free: int, torsion: List[int], p: int) -> Tuple[int, List[int]]:
    """Strip torsion prime to p (p-localization of a finitely generated group)."""
    out = []
    for t in torsion:
        e = 0
        while t % p == 0:
            t //= p
            e += 1
        if e:
            out.append(p ** e)
    return free, sorted(out)


# ---------------------------------------------------------------------------
# field linear algebra (F_p via int arithmetic, Q via Fraction)

class FieldOps:
    """Tiny field abstraction so one elimination routine serves F_p and Q."""

    def __init__(self, p: Optional[int]):
        self.p = p

    def of_int(self, c: int):
        return c % self.p if self.p else Fraction(c)

    def add(self, x, y):
        return (x + y) % self.p if self.p else x + y

    def mul(self, x, y):
        return (x * y) % self.p if self.p else x * y

    def neg(self, x):
        return (-x) % self.p if self.p else -x

    def inv(self, x):
        return pow(x, -1, self.p) if self.p else 1 / x

    def is_zero(self, x) -> bool:
        return (x % self.p == 0) if self.p else x == 0


class RowSpace:
    """Reduced row space over a field, supporting incremental insertion and
    reduction of vectors (dense lists in a fixed basis)."""

    def __init__(self, ops: FieldOps, width: int):
        self.ops = ops
        self.width = width
        self.rows = {}  # pivot index -> reduced row (pivot coefficient 1)

    def reduce(self, vec):
        ops = self.ops
        v = list(vec)
        for piv in sorted(self.rows):
            c = v[piv]
            if not ops.is_zero(c):
                row = self.rows[piv]
                nc = ops.neg(c)
                for j in range(piv, self.width):
                    v[j] = ops.add(v[j], ops.mul(nc, row[j]))
        return v

    def insert(self, vec) -> bool:
        """Insert a vector; returns True if it enlarged the space."""
        ops = self.ops
        v = self.reduce(vec)
        piv = None
        for j in range(self.width):
            if not ops.is_zero(v[j]):
                piv = j
                break
        if piv is None:
            return False
        inv = ops.inv(v[piv])
        v = [ops.mul(inv, x) for x in v]
        # back-substitute into existing rows
        for p2, row in list(self.rows.items()):
            c = row[piv]
            if not ops.is_zero(c):
                nc = ops.neg(c)
                self.rows[p2] = [ops.add(row[j], ops.mul(nc, v[j]))
                                 for j in range(self.width)]
        self.rows[piv] = v
        return True

    def contains(self, vec) -> bool:
        v = self.reduce(vec)
        return all(self.ops.is_zero(x) for x in v)

    @property
    def rank(self) -> int:
        return len(self.rows)


def field_kernel(rows: List[list], width: int, ops: FieldOps) -> List[list]:
    """Kernel basis of the linear map x -> M x where `rows` are the rows of M
    (length `width` each); returns column vectors of length width."""
    # eliminate on the transpose-augmented system
    aug = []
    for j in range(width):
        col = [ops.of_int(0)] * len(rows) + [ops.of_int(0)] * width
        for i, r in enumerate(rows):
            col[i] = r[j]
        col[len(rows) + j] = ops.of_int(1)
        aug.append(col)
    # row reduce the `aug` vectors; kernel vectors are those whose first part
    # reduces to zero
    space = RowSpace(ops, len(rows) + width)
    kernel = []
    for v in aug:
        red = space.reduce(v)
        if all(ops.is_zero(x) for x in red[:len(rows)]):
            kernel.append(red[len(rows):])
        else:
            # pivot lands in the leading block, so tails stay consistent
            space.insert(red)
    return kernel


def field_rank(rows: List[list], width: int, ops: FieldOps) -> int:
    space = RowSpace(ops, width)
    for r in rows:
        space.insert(r)
    return space.rank
