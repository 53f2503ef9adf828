"""Dense exact linear algebra over a cyclotomic field.

Matrices are immutable-by-convention row-major grids of
`CyclotomicNumber`s sharing one conductor.  Everything here is exact:
Gaussian elimination needs no pivot strategy beyond "first nonzero".
"""

from __future__ import annotations

from typing import Sequence

from .poly import ExactPolynomial, squarefree_part, root_of_unity_order  # noqa: F401  (re-exported)
from .scalars import CyclotomicNumber, as_scalar


class ExactMatrix:
    __slots__ = ("rows", "cols", "conductor", "entries")

    def __init__(self, entries: Sequence[Sequence], conductor: int | None = None):
        if conductor is None:
            conductor = 1
            for row in entries:
                for e in row:
                    if isinstance(e, CyclotomicNumber):
                        conductor = max(conductor, e.conductor)
        self.entries = [[as_scalar(e, conductor) for e in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")
        self.conductor = conductor

    @classmethod
    def identity(cls, n: int, conductor: int = 1) -> "ExactMatrix":
        one = CyclotomicNumber.one(conductor)
        zero = CyclotomicNumber.zero(conductor)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], conductor)

    @classmethod
    def zeros(cls, rows: int, cols: int, conductor: int = 1) -> "ExactMatrix":
        zero = CyclotomicNumber.zero(conductor)
        return cls([[zero] * cols for _ in range(rows)], conductor)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], conductor: int) -> "ExactMatrix":
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)], conductor)

    def column(self, j: int) -> list[CyclotomicNumber]:
        return [self.entries[i][j] for i in range(self.rows)]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in add")
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            self.conductor,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in sub")
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            self.conductor,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in row] for row in self.entries], self.conductor)

    def scale(self, c) -> "ExactMatrix":
        c = as_scalar(c, self.conductor)
        return ExactMatrix([[a * c for a in row] for row in self.entries], self.conductor)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in mul")
        zero = CyclotomicNumber.zero(self.conductor)
        out = [[zero] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            arow = self.entries[i]
            orow = out[i]
            for k in range(self.cols):
                a = arow[k]
                if a.is_zero():
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    b = brow[j]
                    if not b.is_zero():
                        orow[j] = orow[j] + a * b
        return ExactMatrix(out, self.conductor)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product; index (i, j) of the tensor maps to i*cols(B)+j."""
        out = []
        for i in range(self.rows):
            for p in range(other.rows):
                row = []
                for j in range(self.cols):
                    a = self.entries[i][j]
                    row.extend(a * other.entries[p][q] for q in range(other.cols))
                out.append(row)
        return ExactMatrix(out, max(self.conductor, other.conductor))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.conductor,
        )

    def __pow__(self, n: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        result = ExactMatrix.identity(self.rows, self.conductor)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base if n > 1 else base
            n >>= 1
        return result

    def apply(self, vector: Sequence) -> list[CyclotomicNumber]:
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch in apply")
        out = []
        for row in self.entries:
            acc = CyclotomicNumber.zero(self.conductor)
            for a, v in zip(row, vector):
                if not a.is_zero():
                    acc = acc + a * v
            out.append(acc)
        return out

    def add_scalar_identity(self, c) -> "ExactMatrix":
        c = as_scalar(c, self.conductor)
        out = [list(row) for row in self.entries]
        for i in range(self.rows):
            out[i][i] = out[i][i] + c
        return ExactMatrix(out, self.conductor)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                if self.entries[i][j] != (1 if i == j else 0):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, conductor={self.conductor})"

    def vectorize(self) -> list[CyclotomicNumber]:
        return [e for row in self.entries for e in row]

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(row) + ExactMatrix.identity(n, self.conductor).entries[i]
               for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [e * inv for e in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return ExactMatrix([row[n:] for row in aug], self.conductor)


def solve_linear_system(m: ExactMatrix, rhs: Sequence) -> list[CyclotomicNumber] | None:
    """One exact solution of m x = rhs, or None if the system is inconsistent.

    For underdetermined consistent systems the free variables are set to
    zero.
    """
    n, cols = m.rows, m.cols
    if len(rhs) != n:
        raise ValueError("right-hand side length mismatch")
    zero = CyclotomicNumber.zero(m.conductor)
    aug = [list(row) + [as_scalar(rhs[i], m.conductor)] for i, row in enumerate(m.entries)]
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, n) if not aug[i][c].is_zero()), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [e * inv for e in aug[r]]
        for i in range(n):
            if i != r and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if not aug[i][cols].is_zero():
            return None
    x = [zero] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x


class SpanSolver:
    """Incremental exact row reduction with dependency tracking.

    Vectors are appended one at a time; when a vector lies in the span of
    the earlier ones, the expressing coefficients are returned instead of
    inserting it.
    """

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.pivots: list[tuple[int, list[CyclotomicNumber], list[CyclotomicNumber]]] = []
        self.count = 0

    def _reduce(self, vec):
        vec = list(vec)
        combo = [CyclotomicNumber.zero(self.conductor)] * self.count
        for pos, pvec, pcombo in self.pivots:
            c = vec[pos]
            if c.is_zero():
                continue
            for i, x in enumerate(pvec):
                if not x.is_zero():
                    vec[i] = vec[i] - c * x
            for i, x in enumerate(pcombo):
                if not x.is_zero():
                    combo[i] = combo[i] - c * x
        return vec, combo

    def express(self, vec) -> list[CyclotomicNumber] | None:
        """Coefficients writing vec over the inserted vectors, or None."""
        red, combo = self._reduce(vec)
        if any(not x.is_zero() for x in red):
            return None
        return [-c for c in combo]

    def insert(self, vec) -> list[CyclotomicNumber] | None:
        """Insert vec; if dependent, return expressing coefficients instead."""
        red, combo = self._reduce(vec)
        pos = next((i for i, x in enumerate(red) if not x.is_zero()), None)
        combo = combo + [CyclotomicNumber.one(self.conductor)]
        self.count += 1
        if pos is None:
            self.count -= 1
            return [-c for c in combo[:-1]]
        inv = red[pos].inverse()
        pvec = [x * inv for x in red]
        pcombo = [x * inv for x in combo]
        # pad earlier pivot combos so all have length == count
        self.pivots = [(p, v, c + [CyclotomicNumber.zero(self.conductor)])
                       for p, v, c in self.pivots]
        self.pivots.append((pos, pvec, pcombo))
        return None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def solve_in_span(targets: Sequence[ExactMatrix], candidate: ExactMatrix):
    """Express candidate in span(targets) or return None ("independent")."""
    if not targets:
        return None if not candidate.is_zero() else []
    conductor = candidate.conductor
    solver = SpanSolver(conductor)
    for t in targets:
        if (t.rows, t.cols) != (candidate.rows, candidate.cols):
            raise ValueError("shape mismatch among span matrices")
        solver.insert(t.vectorize())
    coeffs = solver.express(candidate.vectorize())
    if coeffs is None:
        return None
    return coeffs


def _local_min_poly(a: ExactMatrix, v: list) -> ExactPolynomial:
    """Least monic polynomial with f(a)v = 0, by a Krylov dependence."""
    solver = SpanSolver(a.conductor)
    w = list(v)
    for _ in range(a.rows + 1):
        coeffs = solver.insert(w)
        if coeffs is not None:
            return ExactPolynomial([-c for c in coeffs] + [1], a.conductor)
        w = a.apply(w)
    raise AssertionError("no dependency up to the dimension bound")  # pragma: no cover


def minimal_polynomial(a: ExactMatrix) -> ExactPolynomial:
    """Monic least-degree polynomial annihilating the square matrix a.

    The lcm of local minimal polynomials over the standard basis
    vectors; each new vector is first screened by evaluating the current
    candidate on it, so only genuinely new invariant factors cost a
    Krylov run.
    """
    from .poly import poly_gcd

    if a.rows != a.cols:
        raise ValueError("minimal polynomial of a non-square matrix")
    n = a.rows
    if n == 0:
        return ExactPolynomial([1], a.conductor)
    one = CyclotomicNumber.one(a.conductor)
    zero = CyclotomicNumber.zero(a.conductor)
    m = ExactPolynomial([1], a.conductor)
    for j in range(n):
        v = [one if i == j else zero for i in range(n)]
        # Horner evaluation of w = m(a) v without forming m(a)
        w = [zero] * n
        for c in reversed(m.coeffs):
            w = a.apply(w)
            if not c.is_zero():
                w = [wi + c * vi for wi, vi in zip(w, v)]
        if all(x.is_zero() for x in w):
            continue
        local = _local_min_poly(a, v)
        g = poly_gcd(m, local)
        m = (m * local) // g
        if m.degree == n:
            break
    return m.monic()


def is_nilpotent(a: ExactMatrix) -> bool:
    """True iff the minimal polynomial is a pure power of x."""
    if a.rows == 0:
        return True
    mp = minimal_polynomial(a)
    return all(c.is_zero() for c in mp.coeffs[:-1])


def default_order_bound(f: ExactPolynomial) -> int:
    """Search bound for root-of-unity orders of the roots of f.

    Any root of f of order d has phi(d) <= deg(f) * phi(conductor), and
    phi(d) >= sqrt(d/2), so a quadratic bound with slack is safe for the
    sizes handled here.
    """
    from .scalars import euler_phi

    return (max(f.degree, 1) * euler_phi(f.conductor)) ** 2 + 240
