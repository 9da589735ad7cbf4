"""Dense exact matrices over Q or F_p, with the rank/kernel/image/solve kernels.

Row-reduction is written twice, specialized per field: the Fraction and the
int-mod-p inner loops look alike but share no code so each stays tight. Both
skip zero entries, which is where almost all time goes on the sparse matrices
the resolution pipelines produce.

All matrices are immutable after construction; every operation returns a new
matrix, so values can be shared freely across threads.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatch, ParseError, ShapeMismatch
from .field import Field


def _rref_q(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        rowr = rows[r]
        inv = 1 / rowr[c]
        if inv != 1:
            for j in range(c, ncols):
                if rowr[j]:
                    rowr[j] *= inv
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                rowi = rows[i]
                for j in range(c, ncols):
                    if rowr[j]:
                        rowi[j] -= f * rowr[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _rref_p(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        rowr = rows[r]
        inv = pow(rowr[c], p - 2, p)
        if inv != 1:
            for j in range(c, ncols):
                if rowr[j]:
                    rowr[j] = rowr[j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                rowi = rows[i]
                for j in range(c, ncols):
                    if rowr[j]:
                        rowi[j] = (rowi[j] - f * rowr[j]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


class ExactMatrix:
    """rows x cols matrix with entries in `field`, row-major, immutable."""

    __slots__ = ("field", "rows", "cols", "entries", "_rref_cache")

    def __init__(self, field: Field, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise ShapeMismatch("negative dimensions")
        entries = tuple(field.coerce(x) for x in entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"expected {rows * cols} entries, got {len(entries)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._rref_cache = None

    # ---- constructors ----

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "ExactMatrix":
        z = field.zero()
        return cls(field, rows, cols, (z,) * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        z, o = field.zero(), field.one()
        ent = [z] * (n * n)
        for i in range(n):
            ent[i * n + i] = o
        return cls(field, n, n, ent)

    @classmethod
    def from_rows(cls, field: Field, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != nc:
                raise ShapeMismatch("ragged rows")
            flat.extend(r)
        return cls(field, nr, nc, flat)

    @classmethod
    def from_cols(cls, field: Field, cols, nrows: int | None = None) -> "ExactMatrix":
        cols = [list(c) for c in cols]
        if nrows is None:
            if not cols:
                raise ShapeMismatch("from_cols with no columns needs nrows")
            nrows = len(cols[0])
        for c in cols:
            if len(c) != nrows:
                raise ShapeMismatch("ragged columns")
        flat = [cols[j][i] for i in range(nrows) for j in range(len(cols))]
        return cls(field, nrows, len(cols), flat)

    # ---- access ----

    def get(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for x in self.entries)

    # ---- arithmetic ----

    def _check_field(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        f = self.field
        n, m, k = self.rows, self.cols, other.cols
        z = f.zero()
        out = [z] * (n * k)
        se, oe = self.entries, other.entries
        if f.p is None:
            for i in range(n):
                base = i * m
                for t in range(m):
                    a = se[base + t]
                    if a:
                        ob = t * k
                        rb = i * k
                        for j in range(k):
                            b = oe[ob + j]
                            if b:
                                out[rb + j] += a * b
        else:
            p = f.p
            for i in range(n):
                base = i * m
                for t in range(m):
                    a = se[base + t]
                    if a:
                        ob = t * k
                        rb = i * k
                        for j in range(k):
                            b = oe[ob + j]
                            if b:
                                out[rb + j] = (out[rb + j] + a * b) % p
        return ExactMatrix(f, n, k, out)

    __matmul__ = mul

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("add: shapes differ")
        f = self.field
        return ExactMatrix(f, self.rows, self.cols,
                           [f.add(a, b) for a, b in zip(self.entries, other.entries)])

    def sub(self, other: "ExactMatrix") -> "ExactMatrix":
        return self.add(other.neg())

    def neg(self) -> "ExactMatrix":
        f = self.field
        return ExactMatrix(f, self.rows, self.cols, [f.neg(a) for a in self.entries])

    def scale(self, c) -> "ExactMatrix":
        f = self.field
        c = f.coerce(c)
        return ExactMatrix(f, self.rows, self.cols, [f.mul(c, a) for a in self.entries])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.cols, self.rows,
                           [self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)])

    def apply(self, vec) -> tuple:
        """Matrix times column vector (given as a tuple/list), returns a tuple."""
        if len(vec) != self.cols:
            raise ShapeMismatch("apply: vector length != cols")
        f = self.field
        z = f.zero()
        out = []
        e = self.entries
        for i in range(self.rows):
            s = z
            base = i * self.cols
            for j, v in enumerate(vec):
                if v:
                    a = e[base + j]
                    if a:
                        s = f.add(s, f.mul(a, v))
            out.append(s)
        return tuple(out)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack: row counts differ")
        ent = []
        for i in range(self.rows):
            ent.extend(self.row(i))
            ent.extend(other.row(i))
        return ExactMatrix(self.field, self.rows, self.cols + other.cols, ent)

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack: col counts differ")
        return ExactMatrix(self.field, self.rows + other.rows, self.cols,
                           self.entries + other.entries)

    def select_columns(self, js) -> "ExactMatrix":
        js = list(js)
        ent = []
        for i in range(self.rows):
            base = i * self.cols
            for j in js:
                ent.append(self.entries[base + j])
        return ExactMatrix(self.field, self.rows, len(js), ent)

    # ---- elimination kernels ----

    def _rref(self):
        if self._rref_cache is None:
            rows = [list(self.row(i)) for i in range(self.rows)]
            if self.field.p is None:
                self._rref_cache = _rref_q(rows, self.cols)
            else:
                self._rref_cache = _rref_p(rows, self.cols, self.field.p)
        return self._rref_cache

    def rank(self) -> int:
        return len(self._rref()[1])

    def pivot_cols(self) -> list[int]:
        return list(self._rref()[1])

    def kernel_basis(self) -> "ExactMatrix":
        """cols x (cols - rank) matrix whose columns span ker(self)."""
        red, pivots = self._rref()
        f = self.field
        z, o = f.zero(), f.one()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        cols = []
        for fc in free:
            v = [z] * self.cols
            v[fc] = o
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(red[r][fc])
            cols.append(v)
        return ExactMatrix.from_cols(f, cols, nrows=self.cols)

    def image_basis(self) -> "ExactMatrix":
        """rows x rank matrix: the original pivot columns (span the column space)."""
        return self.select_columns(self._rref()[1])

    def reduce(self):
        """(rank, kernel_basis, image_basis, pivot_cols)."""
        return self.rank(), self.kernel_basis(), self.image_basis(), self.pivot_cols()

    def solve(self, b: "ExactMatrix"):
        """Some x with self @ x = b, or None if any column of b is outside the image."""
        self._check_field(b)
        if b.rows != self.rows:
            raise ShapeMismatch("solve: row counts differ")
        aug = self.hstack(b)
        red, pivots = aug._rref()
        for r, pc in enumerate(pivots):
            if pc >= self.cols:
                return None  # pivot in the augmented block: inconsistent
        f = self.field
        z = f.zero()
        out = [[z] * b.cols for _ in range(self.cols)]
        for r, pc in enumerate(pivots):
            for j in range(b.cols):
                out[pc][j] = red[r][self.cols + j]
        flat = [out[i][j] for i in range(self.cols) for j in range(b.cols)]
        return ExactMatrix(f, self.cols, b.cols, flat)

    def inverse(self):
        if self.rows != self.cols:
            raise ShapeMismatch("inverse of non-square matrix")
        if self.rank() != self.rows:
            return None
        return self.solve(ExactMatrix.identity(self.field, self.rows))

    # ---- misc ----

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        if self.rows * self.cols > 64:
            return f"ExactMatrix({self.rows}x{self.cols} over {self.field})"
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix[{body}]"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [self.field.show(x) for x in self.entries]}

    @classmethod
    def from_json(cls, field: Field, data: dict) -> "ExactMatrix":
        try:
            return cls(field, int(data["rows"]), int(data["cols"]), data["entries"])
        except KeyError as exc:
            raise ParseError(f"matrix JSON missing key {exc}") from exc


def compose(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Matrix product a @ b (module-map composition: apply b, then a)."""
    return a.mul(b)


def reduce(m: ExactMatrix):
    return m.reduce()


def solve(m: ExactMatrix, b: ExactMatrix):
    return m.solve(b)


# ---- span utilities on column vectors (tuples) ----

def vec_add(field: Field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))

def vec_sub(field: Field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))

def vec_scale(field: Field, c, v):
    return tuple(field.mul(c, a) for a in v)

def vec_is_zero(field: Field, v) -> bool:
    z = field.zero()
    return all(a == z for a in v)

def zero_vec(field: Field, n: int) -> tuple:
    return (field.zero(),) * n

def unit_vec(field: Field, n: int, i: int) -> tuple:
    v = [field.zero()] * n
    v[i] = field.one()
    return tuple(v)


def span_basis(field: Field, vectors, dim: int) -> list[tuple]:
    """Deterministic basis of the span: the input vectors at pivot positions."""
    vectors = list(vectors)
    if not vectors:
        return []
    m = ExactMatrix.from_cols(field, vectors, nrows=dim)
    return [vectors[j] for j in m.pivot_cols()]


def coords_in_span(field: Field, basis: list[tuple], v, dim: int):
    """Coordinates of v in the given basis, or None if v is outside the span."""
    if not basis:
        return [] if vec_is_zero(field, v) else None
    m = ExactMatrix.from_cols(field, basis, nrows=dim)
    x = m.solve(ExactMatrix.from_cols(field, [v], nrows=dim))
    if x is None:
        return None
    return [x.get(i, 0) for i in range(len(basis))]


def quotient_reps(field: Field, sub_basis: list[tuple], big_basis: list[tuple], dim: int) -> list[tuple]:
    """Representatives (drawn from big_basis, in order) of a basis of span(big)/span(sub)."""
    cols = list(sub_basis) + list(big_basis)
    if not cols:
        return []
    m = ExactMatrix.from_cols(field, cols, nrows=dim)
    k = len(sub_basis)
    return [big_basis[j - k] for j in m.pivot_cols() if j >= k]
