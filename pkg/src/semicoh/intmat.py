"""Exact arbitrary-precision integer matrix algebra.

Everything here is integer arithmetic; no floating point anywhere.
Hot paths (products, Smith elimination) run on int64 numpy arrays while
every entry provably fits, and fall back to pure-Python big integers the
moment a bound check fails, so results are exact in all cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

import numpy as np

from .errors import DegreeOutOfRange, NotASublattice, NotSquare, NotUnimodular
from .intpoly import IntPolynomial

# int64 stays exact while |entries| < 2**26 through one elimination round
# (quotient * entry products < 2**52, and row sums over <= 2**9 terms
# stay below 2**62).
_NP_SAFE = 1 << 26
_NP_MIN_DIM = 24


class _Int64Risk(Exception):
    """Raised internally when an int64 fast path can no longer be trusted."""


def _xgcd(a: int, b: int):
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged rows")
        self.data = rows

    # -- constructors --------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.scalar(n, 1)

    @classmethod
    def scalar(cls, n: int, c: int) -> "IntMatrix":
        return cls([[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_columns(cls, columns, rows: int) -> "IntMatrix":
        return cls([[col[i] for col in columns] for i in range(rows)])

    # -- basics ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]!r})"

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and all(
            self.data[i][j] == (1 if i == j else 0)
            for i in range(self.rows) for j in range(self.cols)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.data))) if self.rows else IntMatrix([])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def max_abs(self) -> int:
        return max((abs(x) for row in self.data for x in row), default=0)

    def trace(self) -> int:
        if not self.is_square():
            raise NotSquare("trace needs a square matrix")
        return sum(self.data[i][i] for i in range(self.rows))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return IntMatrix([ra + rb for ra, rb in zip(self.data, other.data)])

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ])

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in row] for row in self.data])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return IntMatrix(_matmul(self.data, other.data))

    def __pow__(self, k: int) -> "IntMatrix":
        if not self.is_square():
            raise NotSquare("powers need a square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result


def _matmul(a, b):
    """Exact product of two list-of-row matrices, numpy-accelerated."""
    inner = len(b)
    if inner == 0 or len(a) == 0 or len(b[0]) == 0:
        return [[0] * (len(b[0]) if b else 0) for _ in range(len(a))]
    amax = max((abs(x) for row in a for x in row), default=0)
    bmax = max((abs(x) for row in b for x in row), default=0)
    if min(len(a), inner, len(b[0])) >= 4 and inner * amax * bmax < (1 << 62):
        out = np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)
        return out.tolist()
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


# ---------------------------------------------------------------------------
# Smith normal form engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D a nonnegative diagonal chain."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d.data[i][i] for i in range(min(self.d.rows, self.d.cols)))

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(x for x in self.diagonal if x != 0)


class _PySmith:
    """Reference big-integer elimination with optional transform tracking."""

    def __init__(self, data, m, n, need_u, need_uinv, need_v):
        self.m, self.n = m, n
        self.a = [list(row) for row in data]
        self.u = [[int(i == j) for j in range(m)] for i in range(m)] if need_u else None
        self.uinv = [[int(i == j) for j in range(m)] for i in range(m)] if need_uinv else None
        self.v = [[int(i == j) for j in range(n)] for i in range(n)] if need_v else None

    # row_i -= q * row_k ; inverse op adds back on Uinv columns
    def row_addmul(self, i, k, q):
        ai, ak = self.a[i], self.a[k]
        for j in range(self.n):
            if ak[j]:
                ai[j] -= q * ak[j]
        if self.u is not None:
            ui, uk = self.u[i], self.u[k]
            for j in range(self.m):
                if uk[j]:
                    ui[j] -= q * uk[j]
        if self.uinv is not None:
            for row in self.uinv:
                if row[i]:
                    row[k] += q * row[i]

    def row_swap(self, i, k):
        self.a[i], self.a[k] = self.a[k], self.a[i]
        if self.u is not None:
            self.u[i], self.u[k] = self.u[k], self.u[i]
        if self.uinv is not None:
            for row in self.uinv:
                row[i], row[k] = row[k], row[i]

    def row_negate(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.u is not None:
            self.u[i] = [-x for x in self.u[i]]
        if self.uinv is not None:
            for row in self.uinv:
                row[i] = -row[i]

    def row_transform2(self, i, k, x, y, u, v):
        """rows (i,k) <- (x*ri + y*rk, u*ri + v*rk); x*v - y*u == 1."""
        for arr, width in ((self.a, self.n), (self.u, self.m)):
            if arr is None:
                continue
            ri, rk = arr[i], arr[k]
            for j in range(width):
                p, q = ri[j], rk[j]
                ri[j] = x * p + y * q
                rk[j] = u * p + v * q
        if self.uinv is not None:
            for row in self.uinv:
                p, q = row[i], row[k]
                row[i] = v * p - u * q
                row[k] = -y * p + x * q

    def col_addmul(self, j, k, q):
        for row in self.a:
            if row[k]:
                row[j] -= q * row[k]
        if self.v is not None:
            for row in self.v:
                if row[k]:
                    row[j] -= q * row[k]

    def col_swap(self, j, k):
        for row in self.a:
            row[j], row[k] = row[k], row[j]
        if self.v is not None:
            for row in self.v:
                row[j], row[k] = row[k], row[j]

    def col_negate(self, j):
        for row in self.a:
            row[j] = -row[j]
        if self.v is not None:
            for row in self.v:
                row[j] = -row[j]

    def find_pivot(self, k):
        best = None
        for i in range(k, self.m):
            row = self.a[i]
            for j in range(k, self.n):
                x = row[j]
                if x:
                    if x < 0:
                        x = -x
                    if best is None or x < best[0]:
                        best = (x, i, j)
                        if x == 1:
                            return best
        return best

    def run(self):
        m, n, a = self.m, self.n, self.a
        limit = min(m, n)
        for k in range(limit):
            pivot = self.find_pivot(k)
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != k:
                self.row_swap(pi, k)
            if pj != k:
                self.col_swap(pj, k)
            while True:
                if a[k][k] < 0:
                    self.row_negate(k)
                piv = a[k][k]
                dirty = False
                for i in range(k + 1, m):
                    x = a[i][k]
                    if x:
                        self.row_addmul(i, k, x // piv)
                        if a[i][k]:
                            dirty = True
                if dirty:
                    best = min(
                        (i for i in range(k + 1, m) if a[i][k]),
                        key=lambda i: abs(a[i][k]),
                    )
                    self.row_swap(best, k)
                    continue
                for j in range(k + 1, n):
                    x = a[k][j]
                    if x:
                        self.col_addmul(j, k, x // piv)
                        if a[k][j]:
                            dirty = True
                if dirty:
                    best = min(
                        (j for j in range(k + 1, n) if a[k][j]),
                        key=lambda j: abs(a[k][j]),
                    )
                    self.col_swap(best, k)
                    continue
                break
        self._fix_chain(limit)
        return self

    def _fix_chain(self, limit):
        a = self.a
        for i in range(limit):
            for j in range(i + 1, limit):
                di, dj = a[i][i], a[j][j]
                if dj == 0 and di == 0:
                    continue
                if di != 0 and dj % di == 0:
                    continue
                # fold column j into column i, then split gcd/lcm
                self.col_addmul(i, j, -1)
                g, x, y = _xgcd(di, dj)
                self.row_transform2(i, j, x, y, -(dj // g), di // g)
                # clear the (i, j) fill-in; divisible by the new pivot g
                if a[i][j]:
                    self.col_addmul(j, i, a[i][j] // g)
        for i in range(limit):
            if a[i][i] < 0:
                self.row_negate(i)


class _NpSmith:
    """int64 mirror of _PySmith; raises _Int64Risk before any overflow."""

    def __init__(self, data, m, n, need_u, need_uinv, need_v):
        self.m, self.n = m, n
        self.a = np.array(data, dtype=np.int64).reshape(m, n)
        self.u = np.eye(m, dtype=np.int64) if need_u else None
        self.uinv = np.eye(m, dtype=np.int64) if need_uinv else None
        self.v = np.eye(n, dtype=np.int64) if need_v else None
        if self.a.size and abs(self.a).max() >= _NP_SAFE:
            raise _Int64Risk

    def _check(self):
        for arr in (self.a, self.u, self.uinv, self.v):
            if arr is not None and arr.size and abs(arr).max() >= _NP_SAFE:
                raise _Int64Risk

    def run(self):
        m, n, a = self.m, self.n, self.a
        limit = min(m, n)
        for k in range(limit):
            sub = abs(a[k:, k:])
            if not sub.any():
                break
            masked = np.where(sub > 0, sub, np.iinfo(np.int64).max)
            pi, pj = np.unravel_index(np.argmin(masked), masked.shape)
            self._row_swap(k, k + pi)
            self._col_swap(k, k + pj)
            while True:
                self._check()
                if a[k, k] < 0:
                    self._row_negate(k)
                piv = a[k, k]
                col = a[k + 1 :, k]
                nz = np.nonzero(col)[0]
                if nz.size:
                    idx = nz + k + 1
                    q = col[nz] // piv
                    a[idx] -= q[:, None] * a[k]
                    if self.u is not None:
                        self.u[idx] -= q[:, None] * self.u[k]
                    if self.uinv is not None:
                        self.uinv[:, k] += self.uinv[:, idx] @ q
                    rem = np.nonzero(a[k + 1 :, k])[0]
                    if rem.size:
                        i = rem[np.argmin(abs(a[k + 1 :, k][rem]))] + k + 1
                        self._row_swap(k, i)
                        continue
                row = a[k, k + 1 :]
                nz = np.nonzero(row)[0]
                if nz.size:
                    idx = nz + k + 1
                    q = row[nz] // piv
                    a[:, idx] -= a[:, k : k + 1] * q[None, :]
                    if self.v is not None:
                        self.v[:, idx] -= self.v[:, k : k + 1] * q[None, :]
                    rem = np.nonzero(a[k, k + 1 :])[0]
                    if rem.size:
                        j = rem[np.argmin(abs(a[k, k + 1 :][rem]))] + k + 1
                        self._col_swap(k, j)
                        continue
                break
        self._fix_chain(limit)
        self._check()
        return self

    def _row_swap(self, i, k):
        if i == k:
            return
        self.a[[i, k]] = self.a[[k, i]]
        if self.u is not None:
            self.u[[i, k]] = self.u[[k, i]]
        if self.uinv is not None:
            self.uinv[:, [i, k]] = self.uinv[:, [k, i]]

    def _col_swap(self, j, k):
        if j == k:
            return
        self.a[:, [j, k]] = self.a[:, [k, j]]
        if self.v is not None:
            self.v[:, [j, k]] = self.v[:, [k, j]]

    def _row_negate(self, i):
        self.a[i] = -self.a[i]
        if self.u is not None:
            self.u[i] = -self.u[i]
        if self.uinv is not None:
            self.uinv[:, i] = -self.uinv[:, i]

    def _fix_chain(self, limit):
        a = self.a
        for i in range(limit):
            for j in range(i + 1, limit):
                di, dj = int(a[i, i]), int(a[j, j])
                if (dj == 0 and di == 0) or (di != 0 and dj % di == 0):
                    continue
                self._check()
                a[:, i] += a[:, j]
                if self.v is not None:
                    self.v[:, i] += self.v[:, j]
                g, x, y = _xgcd(di, dj)
                u, v = -(dj // g), di // g
                if max(abs(x), abs(y), abs(u), abs(v)) >= _NP_SAFE:
                    raise _Int64Risk
                ri, rj = a[i].copy(), a[j].copy()
                a[i] = x * ri + y * rj
                a[j] = u * ri + v * rj
                if self.u is not None:
                    ri, rj = self.u[i].copy(), self.u[j].copy()
                    self.u[i] = x * ri + y * rj
                    self.u[j] = u * ri + v * rj
                if self.uinv is not None:
                    ci, cj = self.uinv[:, i].copy(), self.uinv[:, j].copy()
                    self.uinv[:, i] = v * ci - u * cj
                    self.uinv[:, j] = -y * ci + x * cj
                if a[i, j]:
                    q = int(a[i, j]) // g
                    a[:, j] -= q * a[:, i]
                    if self.v is not None:
                        self.v[:, j] -= q * self.v[:, i]
        for i in range(limit):
            if a[i, i] < 0:
                self._row_negate(i)


def _smith_engine(matrix: IntMatrix, need_u=False, need_uinv=False, need_v=False):
    m, n = matrix.rows, matrix.cols
    if (
        min(m, n) >= _NP_MIN_DIM
        and matrix.max_abs() < _NP_SAFE
    ):
        try:
            eng = _NpSmith(matrix.data, m, n, need_u, need_uinv, need_v).run()
            return {
                "d": [int(eng.a[i, i]) for i in range(min(m, n))],
                "u": eng.u.tolist() if eng.u is not None else None,
                "uinv": eng.uinv.tolist() if eng.uinv is not None else None,
                "v": eng.v.tolist() if eng.v is not None else None,
            }
        except _Int64Risk:
            pass
    eng = _PySmith(matrix.data, m, n, need_u, need_uinv, need_v).run()
    return {
        "d": [eng.a[i][i] for i in range(min(m, n))],
        "u": eng.u,
        "uinv": eng.uinv,
        "v": eng.v,
    }


def smith_transforms(a: IntMatrix, *, u=False, uinv=False, v=False) -> dict:
    """Smith elimination with exactly the transforms the caller needs.

    Returns {"diagonal": tuple, "u": IntMatrix|None, "uinv": ..., "v": ...}.
    """
    res = _smith_engine(a, need_u=u, need_uinv=uinv, need_v=v)
    return {
        "diagonal": tuple(res["d"]),
        "u": IntMatrix(res["u"]) if res["u"] is not None else None,
        "uinv": IntMatrix(res["uinv"]) if res["uinv"] is not None else None,
        "v": IntMatrix(res["v"]) if res["v"] is not None else None,
    }


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Diagonalize over Z: U @ a @ V = D with a divisibility chain on D.

    Total: works for any shape, including empty matrices.
    """
    res = _smith_engine(a, need_u=True, need_v=True)
    d = IntMatrix.zeros(a.rows, a.cols)
    data = [list(row) for row in d.data]
    for i, x in enumerate(res["d"]):
        data[i][i] = x
    return SmithDecomposition(IntMatrix(res["u"]), IntMatrix(data), IntMatrix(res["v"]))


def invariant_factors(a: IntMatrix) -> tuple[int, ...]:
    """Nonzero Smith diagonal entries (no transform tracking)."""
    res = _smith_engine(a)
    return tuple(x for x in res["d"] if x != 0)


def rank(a: IntMatrix) -> int:
    return len(invariant_factors(a))


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Basis of the saturated integer kernel {x : a x = 0}, as columns.

    The span is pure: Z^cols / span is torsion-free.  A zero kernel gives
    a matrix with zero columns.
    """
    res = _smith_engine(a, need_v=True)
    d = res["d"]
    v = res["v"]
    r = sum(1 for x in d if x != 0)
    cols = list(range(r, a.cols))
    return IntMatrix([[v[i][j] for j in cols] for i in range(a.cols)])


def solve_columns(basis: IntMatrix, targets: IntMatrix) -> IntMatrix:
    """Integer coordinates C with basis @ C == targets.

    ``basis`` must have independent columns.  Raises NotASublattice when a
    target column is not an integral combination of the basis columns.
    """
    if basis.rows != targets.rows:
        raise ValueError("row mismatch")
    res = _smith_engine(basis, need_u=True, need_v=True)
    d = res["d"]
    k = basis.cols
    if sum(1 for x in d if x != 0) != k:
        raise NotASublattice("ambient columns are not independent")
    ub = _matmul(res["u"], targets.data)
    for i in range(k, basis.rows):
        if any(ub[i][j] != 0 for j in range(targets.cols)):
            raise NotASublattice("column outside the rational span")
    w = []
    for i in range(k):
        di = d[i]
        row = []
        for j in range(targets.cols):
            q, r = divmod(ub[i][j], di)
            if r:
                raise NotASublattice("column not integrally in the span")
            row.append(q)
        w.append(row)
    return IntMatrix(_matmul(res["v"], w))


def lattice_quotient(ambient_basis: IntMatrix, sub_basis: IntMatrix):
    """V / W as a canonical abelian group.

    ``ambient_basis`` columns span V; ``sub_basis`` columns generate W
    (they may be dependent).  Invariant factors come from the Smith form
    of the coordinate matrix of W in the basis of V.
    """
    from .abelian import AbelianGroup

    coords = solve_columns(ambient_basis, sub_basis)
    factors = invariant_factors(coords)
    return AbelianGroup.from_factors(ambient_basis.cols - len(factors), factors)


def saturate_span(m: IntMatrix) -> IntMatrix:
    """Basis of the saturation (pure closure) of the column span."""
    res = _smith_engine(m, need_uinv=True)
    r = sum(1 for x in res["d"] if x != 0)
    uinv = res["uinv"]
    return IntMatrix([[uinv[i][j] for j in range(r)] for i in range(m.rows)])


def restrict_to_basis(a: IntMatrix, basis: IntMatrix) -> IntMatrix:
    """Matrix of a on the span of ``basis``; NotASublattice if not stable."""
    return solve_columns(basis, a @ basis)


def complete_to_unimodular(m: IntMatrix) -> IntMatrix:
    """Extend the columns of a saturated basis to a basis of the whole Z^n."""
    res = _smith_engine(m, need_uinv=True)
    if any(x != 1 for x in res["d"]):
        raise NotASublattice("columns do not form a saturated independent set")
    return IntMatrix(res["uinv"])


def det(a: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if not a.is_square():
        raise NotSquare("determinant needs a square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [list(row) for row in a.data]
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
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(a: IntMatrix) -> IntPolynomial:
    """det(xI - a) by the fraction-free Faddeev-LeVerrier recursion.

    >>> print(charpoly(IntMatrix([[0, -1], [1, -1]])))
    x^2 + x + 1
    """
    if not a.is_square():
        raise NotSquare("characteristic polynomial needs a square matrix")
    n = a.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = IntMatrix.identity(n)
    for k in range(1, n + 1):
        am = a @ m
        t = am.trace()
        if t % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        c = -(t // k)
        coeffs[n - k] = c
        if k < n:
            m = am + IntMatrix.scalar(n, c)
    return IntPolynomial.of(*coeffs)


def wedge_power(a: IntMatrix, gamma: int) -> IntMatrix:
    """Exterior power: the C(n, gamma)-dimensional matrix of gamma-minors.

    Rows and columns are indexed by lexicographically ordered index
    subsets; entry (R, S) is the minor det a[R, S], so the construction is
    functorial: wedge(a @ b) = wedge(a) @ wedge(b).
    """
    if not a.is_square():
        raise NotSquare("exterior powers need a square matrix")
    n = a.rows
    if gamma < 0 or gamma > n:
        raise DegreeOutOfRange(f"wedge degree {gamma} outside 0..{n}")
    subsets = list(combinations(range(n), gamma))
    index = {s: i for i, s in enumerate(subsets)}
    dim = len(subsets)
    out = [[0] * dim for _ in range(dim)]
    cols = [a.column(j) for j in range(n)]
    for jj, s in enumerate(subsets):
        # expand column_{s1} ^ ... ^ column_{s_gamma} over the wedge basis
        acc: dict[tuple[int, ...], int] = {(): 1}
        for j in s:
            col = cols[j]
            nxt: dict[tuple[int, ...], int] = {}
            for t, coeff in acc.items():
                for r in range(n):
                    x = col[r]
                    if x == 0 or r in t:
                        continue
                    pos = 0
                    while pos < len(t) and t[pos] < r:
                        pos += 1
                    key = t[:pos] + (r,) + t[pos:]
                    term = coeff * x if (len(t) - pos) % 2 == 0 else -coeff * x
                    nxt[key] = nxt.get(key, 0) + term
            acc = {k: v for k, v in nxt.items() if v}
        for t, coeff in acc.items():
            out[index[t]][jj] = coeff
    return IntMatrix(out)


def contragredient(a: IntMatrix) -> IntMatrix:
    """Inverse transpose of a unimodular matrix, exactly."""
    if not a.is_square():
        raise NotSquare("contragredient needs a square matrix")
    res = _smith_engine(a, need_u=True, need_v=True)
    if any(x != 1 for x in res["d"]):
        raise NotUnimodular("matrix determinant is not +-1")
    inv = _matmul(res["v"], res["u"])
    return IntMatrix(inv).transpose()


def matrix_order(a: IntMatrix, bound: int) -> int | None:
    """Smallest k in 1..bound with a^k == identity, or None."""
    if not a.is_square():
        raise NotSquare("order needs a square matrix")
    power = IntMatrix.identity(a.rows)
    for k in range(1, bound + 1):
        power = power @ a
        if power.is_identity():
            return k
    return None


def gcd_of(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
