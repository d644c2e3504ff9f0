"""Exact dense linear algebra over any field object with zero()/one() elements.

Pivoting picks the first symbolically nonzero entry; there is no rounding
anywhere, so rank, kernel and solve are exact.
"""


class Matrix:
    """A dense matrix over a field object."""

    def __init__(self, field, rows):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    def transpose(self):
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.nrows)]
                                   for j in range(self.ncols)])

    def _echelon(self, augment=None):
        """Row-reduce (optionally with an augmented column); returns (rows, aug, pivots)."""
        rows = [list(r) for r in self.rows]
        aug = list(augment) if augment is not None else None
        pivots = []
        row = 0
        for col in range(self.ncols):
            pivot = None
            for r in range(row, len(rows)):
                if rows[r][col]:
                    pivot = r
                    break
            if pivot is None:
                continue
            rows[row], rows[pivot] = rows[pivot], rows[row]
            if aug is not None:
                aug[row], aug[pivot] = aug[pivot], aug[row]
            inv = rows[row][col]
            rows[row] = [x / inv for x in rows[row]]
            if aug is not None:
                aug[row] = aug[row] / inv
            for r in range(len(rows)):
                if r != row and rows[r][col]:
                    factor = rows[r][col]
                    rows[r] = [a - factor * b for a, b in zip(rows[r], rows[row])]
                    if aug is not None:
                        aug[r] = aug[r] - factor * aug[row]
            pivots.append(col)
            row += 1
            if row == len(rows):
                break
        return rows, aug, pivots

    def rank(self):
        _, _, pivots = self._echelon()
        return len(pivots)

    def rref(self):
        rows, _, pivots = self._echelon()
        return Matrix(self.field, rows), pivots

    def kernel_basis(self):
        """Vectors spanning {x : A x = 0}, one per free column."""
        rows, _, pivots = self._echelon()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for fc in free:
            vec = [zero] * self.ncols
            vec[fc] = one
            for i, pc in enumerate(pivots):
                vec[pc] = -rows[i][fc]
            basis.append(vec)
        return basis

    def solve(self, b):
        """A particular solution of A x = b, or None if inconsistent."""
        if len(b) != self.nrows:
            raise ValueError("dimension mismatch")
        rows, aug, pivots = self._echelon(augment=b)
        zero = self.field.zero()
        for i in range(len(pivots), self.nrows):
            if aug[i]:
                return None
        x = [zero] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = aug[i]
        return x


def linear_solve(matrix, b):
    """A particular solution of A x = b, or None when the system is inconsistent."""
    return matrix.solve(b)


def kernel_basis(matrix):
    return matrix.kernel_basis()


def rank(matrix):
    return matrix.rank()


def row_space_basis(field, vectors):
    """An rref basis for the span of the given vectors (dropping zero rows)."""
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    rows, _, pivots = Matrix(field, vecs)._echelon()
    return [rows[i] for i in range(len(pivots))]


def in_span(field, basis, vector):
    """Whether vector lies in the span of basis (a list of equal-length vectors)."""
    if not any(vector):
        return True
    if not basis:
        return False
    m = Matrix(field, basis + [vector])
    return m.rank() == Matrix(field, basis).rank()
