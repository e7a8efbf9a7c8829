"""Exact linear algebra over the rationals.

Matrices are small and dense; the commutation systems that define hom spaces
are assembled sparsely and reduced with :func:`sparse_nullspace`.  Every basis
returned here is deterministic: pivots are chosen left to right, so equal
inputs always give equal outputs.  Stable representations rely on this to keep
identity maps identity after taking kernels and cokernels.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _narrow(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


class Matrix:
    """Immutable dense matrix with :class:`~fractions.Fraction` entries.

    The shape is stored explicitly so that ``0 x n`` and ``n x 0`` matrices are
    distinguishable, which matters for maps into or out of zero spaces.
    """

    __slots__ = ("nrows", "ncols", "rows", "_hash")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(_frac(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"ragged matrix: expected {ncols} columns, got {len(r)}")
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows
        self._hash = None

    @classmethod
    def _make(cls, rows: tuple, ncols: int) -> "Matrix":
        # trusted fast path: rows is already a tuple of Fraction tuples
        m = cls.__new__(cls)
        m.nrows = len(rows)
        m.ncols = ncols
        m.rows = rows
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._make(((ZERO,) * ncols,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._make(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        return cls((tuple(col[i] for col in columns) for i in range(nrows)), len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ncols, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc += a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._make(tuple(out), other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix._make(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix._make(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    @property
    def T(self) -> "Matrix":
        return Matrix._make(tuple(self.columns()), self.nrows)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            a == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, a in enumerate(r)
        )

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(a for r in self.rows for a in r)

    def rank(self) -> int:
        return len(rref(self)[1])

    def select_rows(self, idx: Sequence[int]) -> "Matrix":
        return Matrix._make(tuple(self.rows[i] for i in idx), self.ncols)

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix._make(tuple(tuple(r[j] for j in idx) for r in self.rows), len(idx))


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and the pivot columns."""
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(m: Matrix) -> Matrix:
    """Basis of ``{x : m x = 0}`` as the columns of the returned matrix.

    Each basis vector has a 1 in one free coordinate and 0 in the others, so
    the rows indexed by the free coordinates form an identity block.
    """
    red, pivots = rref(m)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    cols = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        cols.append(v)
    return Matrix.from_columns(cols, m.ncols)


def free_coordinates(m: Matrix) -> list[int]:
    """Coordinates that are free in :func:`nullspace` of ``m``."""
    pivots = set(rref(m)[1])
    return [j for j in range(m.ncols) if j not in pivots]


def column_basis(m: Matrix) -> Matrix:
    """The pivot columns of ``m``: a basis of its column space drawn from ``m`` itself."""
    return m.select_columns(rref(m)[1])


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Return some ``x`` with ``a @ x == b`` or ``None`` when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if a.nrows != b.nrows:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    aug = Matrix((ra + rb for ra, rb in zip(a.rows, b.rows)), a.ncols + b.ncols)
    red, pivots = rref(aug)
    if any(p >= a.ncols for p in pivots):
        return None
    x = [[ZERO] * b.ncols for _ in range(a.ncols)]
    for row, p in zip(red, pivots):
        x[p] = row[a.ncols:]
    return Matrix(x, b.ncols)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise ValueError("only square matrices are invertible")
    x = solve(m, Matrix.identity(m.nrows))
    if x is None or (m @ x) != Matrix.identity(m.nrows):
        raise ValueError("matrix is singular")
    return x


def is_invertible(m: Matrix) -> bool:
    return m.nrows == m.ncols and m.rank() == m.nrows


def hstack(blocks: Sequence[Matrix], nrows: int) -> Matrix:
    for b in blocks:
        if b.nrows != nrows:
            raise ValueError("hstack row mismatch")
    return Matrix((sum((b.rows[i] for b in blocks), ()) for i in range(nrows)), sum(b.ncols for b in blocks))


def vstack(blocks: Sequence[Matrix], ncols: int) -> Matrix:
    for b in blocks:
        if b.ncols != ncols:
            raise ValueError("vstack column mismatch")
    return Matrix((r for b in blocks for r in b.rows), ncols)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    ncols = sum(b.ncols for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.rows:
            rows.append((ZERO,) * offset + r + (ZERO,) * (ncols - offset - b.ncols))
        offset += b.ncols
    return Matrix(rows, ncols)


def complement_basis(basis: Matrix) -> Matrix:
    """Standard basis vectors completing the columns of ``basis`` to a basis of the ambient space."""
    n = basis.nrows
    pivots = set(rref(basis.T)[1])
    cols = []
    for i in range(n):
        if i not in pivots:
            v = [ZERO] * n
            v[i] = ONE
            cols.append(v)
    return Matrix.from_columns(cols, n)


def in_span(vectors: Sequence[Sequence], target: Sequence) -> bool:
    if not vectors:
        return all(not x for x in target)
    a = Matrix.from_columns(vectors, len(target))
    return solve(a, Matrix([[x] for x in target], 1)) is not None


def span_rank(vectors: Sequence[Sequence], length: int) -> int:
    if not vectors:
        return 0
    return Matrix(vectors, length).rank()


def sparse_nullspace(equations: Iterable[dict[int, Fraction]], nvars: int, *, with_free: bool = False):
    """Nullspace basis of a sparse homogeneous system.

    ``equations`` are dicts ``{variable: coefficient}``.  The system is kept in
    fully reduced form while rows are added, so the cost stays proportional to
    the (small) number of pivots.  The basis vector for free variable ``f`` has
    ``x_f = 1`` and zeros at the other free variables.  With ``with_free`` the
    list of free variables is returned as well.
    """
    # Entries are kept as ints while they are integral: the systems met in
    # practice have 0/1 structure constants, and int arithmetic is much cheaper.
    pivot_rows: dict[int, dict[int, Fraction | int]] = {}
    for eq in equations:
        row = {k: _narrow(v) for k, v in eq.items() if v}
        for p in [k for k in row if k in pivot_rows]:
            c = row.get(p)
            if not c:
                continue
            for k, v in pivot_rows[p].items():
                nv = _narrow(row.get(k, 0) - c * v)
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if not row:
            continue
        p = min(row)
        lead = row[p]
        if lead != 1:
            inv = lead if lead == -1 else Fraction(1) / lead
            row = {k: _narrow(v * inv) for k, v in row.items()}
        for other in pivot_rows.values():
            c = other.get(p)
            if c:
                for k, v in row.items():
                    nv = _narrow(other.get(k, 0) - c * v)
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        pivot_rows[p] = row
    basis = []
    free = [f for f in range(nvars) if f not in pivot_rows]
    for f in free:
        v = [ZERO] * nvars
        v[f] = ONE
        for p, row in pivot_rows.items():
            c = row.get(f)
            if c:
                v[p] = Fraction(-c)
        basis.append(v)
    return (basis, free) if with_free else basis


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; anything else raises :class:`ValueError`."""
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    return str(x)
