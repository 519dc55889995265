"""Exact matrices over the Laurent ring: determinants, adjugate inverses,
Smith normal form with unimodular transforms, kernels, and span membership.

The Laurent ring is a PID (a localization of the rational polynomial ring),
so Smith normal form exists; pivoting works on ordinary-polynomial degrees
after stripping t-power units, which keeps the Euclidean algorithm honest.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    RationalFn,
    as_poly,
    divexact,
    divides,
    laurent_quo,
)

DEFAULT_DEGREE_CAP = 512


class DegreeCapError(RuntimeError):
    """Intermediate polynomial degree exceeded the configured cap."""


class SingularMatrixError(ValueError):
    """Inversion was requested for a matrix with zero determinant."""


class LambdaMatrix:
    """Immutable rectangular matrix of Laurent polynomials."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(tuple(as_poly(x) for x in row) for row in entries)
        if grid and any(len(r) != len(grid[0]) for r in grid):
            raise ValueError("ragged rows")
        self._e = grid
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0

    @classmethod
    def identity(cls, n: int) -> "LambdaMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "LambdaMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self._e[i][j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self._e[i]

    def col(self, j: int) -> tuple[LaurentPoly, ...]:
        return tuple(r[j] for r in self._e)

    def to_lists(self) -> list[list[LaurentPoly]]:
        return [list(r) for r in self._e]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self._e for e in r)

    def transpose(self) -> "LambdaMatrix":
        return LambdaMatrix(zip(*self._e)) if self._e else LambdaMatrix([])

    def conjugate(self) -> "LambdaMatrix":
        return LambdaMatrix([[e.conjugate() for e in r] for r in self._e])

    def __neg__(self) -> "LambdaMatrix":
        return LambdaMatrix([[-e for e in r] for r in self._e])

    def __add__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return LambdaMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._e, other._e)]
        )

    def __sub__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        return self + (-other)

    def __mul__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if not isinstance(other, LambdaMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.transpose()._e
        out = []
        for r in self._e:
            out.append([_dot(r, c) for c in cols])
        return LambdaMatrix(out)

    def hstack(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return LambdaMatrix([r1 + r2 for r1, r2 in zip(self._e, other._e)])

    @staticmethod
    def block_diag(a: "LambdaMatrix", b: "LambdaMatrix") -> "LambdaMatrix":
        out = []
        for r in a._e:
            out.append(list(r) + [ZERO] * b.cols)
        for r in b._e:
            out.append([ZERO] * a.cols + list(r))
        return LambdaMatrix(out)

    def submatrix(self, drop_row: int, drop_col: int) -> "LambdaMatrix":
        return LambdaMatrix(
            [
                [e for j, e in enumerate(r) if j != drop_col]
                for i, r in enumerate(self._e)
                if i != drop_row
            ]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaMatrix):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in r) for r in self._e)
        return f"LambdaMatrix[{self.rows}x{self.cols}]({body})"


def _dot(u: Sequence[LaurentPoly], v: Sequence[LaurentPoly]) -> LaurentPoly:
    acc = ZERO
    for a, b in zip(u, v):
        if not (a.is_zero() or b.is_zero()):
            acc = acc + a * b
    return acc


def mat_vec(M: LambdaMatrix, v: Sequence[LaurentPoly]) -> tuple[LaurentPoly, ...]:
    if len(v) != M.cols:
        raise ValueError("vector length mismatch")
    return tuple(_dot(r, v) for r in M._e)


def det(M: LambdaMatrix, degree_cap: int = DEFAULT_DEGREE_CAP) -> LaurentPoly:
    """Exact determinant by fraction-free expansion over column subsets."""
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return ONE
    worst = sum(
        max((e.span() for e in M.row(i) if not e.is_zero()), default=0) for i in range(n)
    )
    if worst > degree_cap:
        raise DegreeCapError(f"determinant degree could reach {worst}, cap {degree_cap}")
    memo: dict[int, LaurentPoly] = {0: ONE}

    def expand(mask: int) -> LaurentPoly:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = n - bin(mask).count("1")
        acc = ZERO
        sign = 1
        for j in range(n):
            bit = 1 << j
            if mask & bit:
                e = M.entry(row, j)
                if not e.is_zero():
                    term = e * expand(mask & ~bit)
                    acc = acc + (term if sign > 0 else -term)
                sign = -sign
        memo[mask] = acc
        return acc

    return expand((1 << n) - 1)


def inverse_qt(M: LambdaMatrix) -> tuple[tuple[RationalFn, ...], ...]:
    """Adjugate-over-determinant inverse, as a grid over the fraction field."""
    if not M.is_square():
        raise ValueError("inverse of a non-square matrix")
    d = det(M)
    if d.is_zero():
        raise SingularMatrixError("matrix is singular")
    n = M.rows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            cof = det(M.submatrix(j, i))
            if (i + j) % 2:
                cof = -cof
            row.append(RationalFn(cof, d))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class SnfResult:
    """U*M*V = D with U, V unimodular and D diagonal with divisibility."""

    U: LambdaMatrix
    D: LambdaMatrix
    V: LambdaMatrix
    diagonal: tuple[LaurentPoly, ...]
    invariant_factors: tuple[LaurentPoly, ...]
    rank: int


def snf(M: LambdaMatrix, degree_cap: int = DEFAULT_DEGREE_CAP) -> SnfResult:
    """Smith normal form over the Laurent ring.

    Pivots are chosen with minimal ordinary degree, ties broken by lowest
    row then column index, so the output is deterministic.  Diagonal entries
    are monic ordinary polynomials in a divisibility chain; the non-unit
    ones are the invariant factors.
    """
    r, c = M.rows, M.cols
    D = M.to_lists()
    U = LambdaMatrix.identity(r).to_lists()
    V = LambdaMatrix.identity(c).to_lists()

    def check_cap():
        for row in D:
            for e in row:
                if not e.is_zero() and e.span() > degree_cap:
                    raise DegreeCapError(
                        f"intermediate degree {e.span()} exceeds cap {degree_cap}"
                    )

    def swap_rows(a, b):
        if a != b:
            D[a], D[b] = D[b], D[a]
            U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        if a != b:
            for row in D:
                row[a], row[b] = row[b], row[a]
            for row in V:
                row[a], row[b] = row[b], row[a]

    def scale_row(i, unit):
        D[i] = [unit * e for e in D[i]]
        U[i] = [unit * e for e in U[i]]

    def addmul_row(i, k, q):
        # row_i -= q * row_k
        D[i] = [a - q * b for a, b in zip(D[i], D[k])]
        U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def addmul_col(j, k, q):
        for row in D:
            row[j] = row[j] - q * row[k]
        for row in V:
            row[j] = row[j] - q * row[k]

    def find_pivot(k):
        best = None
        for i in range(k, r):
            for j in range(k, c):
                e = D[i][j]
                if e.is_zero():
                    continue
                s = e.span()
                if best is None or s < best[0]:
                    best = (s, i, j)
        return best

    guard = 0
    k = 0
    while k < min(r, c):
        found = find_pivot(k)
        if found is None:
            break
        _, pi, pj = found
        swap_rows(k, pi)
        swap_cols(k, pj)
        while True:
            guard += 1
            if guard > 100000:
                raise RuntimeError("Smith normal form failed to converge")
            piv = D[k][k]
            unit = LaurentPoly({-piv.valuation(): 1 / piv.leading_coefficient()})
            if not unit.is_one():
                scale_row(k, unit)
            piv = D[k][k]
            dirty = False
            for i in range(k + 1, r):
                if not D[i][k].is_zero():
                    addmul_row(i, k, laurent_quo(D[i][k], piv))
                    if not D[i][k].is_zero():
                        dirty = True
            for j in range(k + 1, c):
                if not D[k][j].is_zero():
                    addmul_col(j, k, laurent_quo(D[k][j], piv))
                    if not D[k][j].is_zero():
                        dirty = True
            check_cap()
            if dirty:
                _, pi, pj = find_pivot(k)
                swap_rows(k, pi)
                swap_cols(k, pj)
                continue
            bad = None
            for i in range(k + 1, r):
                for j in range(k + 1, c):
                    if not D[i][j].is_zero() and not divides(piv, D[i][j]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                addmul_row(k, bad, -ONE)
                continue
            break
        k += 1

    diag = tuple(D[i][i] for i in range(min(r, c)))
    rank = sum(1 for d in diag if not d.is_zero())
    invariant = tuple(d for d in diag if not d.is_zero() and not d.is_unit())
    return SnfResult(
        U=LambdaMatrix(U),
        D=LambdaMatrix(D),
        V=LambdaMatrix(V),
        diagonal=diag,
        invariant_factors=invariant,
        rank=rank,
    )


def kernel(M: LambdaMatrix, _snf: SnfResult | None = None) -> LambdaMatrix:
    """Matrix whose columns generate the kernel of M over the Laurent ring."""
    s = _snf if _snf is not None else snf(M)
    cols = [s.V.col(j) for j in range(s.rank, M.cols)]
    if not cols:
        return LambdaMatrix.zeros(M.cols, 0)
    return LambdaMatrix(zip(*cols))


def in_span(v: Sequence[LaurentPoly], M: LambdaMatrix, _snf: SnfResult | None = None):
    """Coefficients w with M*w = v when v lies in the column span, else None."""
    v = [as_poly(x) for x in v]
    if len(v) != M.rows:
        raise ValueError("vector length mismatch")
    s = _snf if _snf is not None else snf(M)
    u = mat_vec(s.U, v)
    z = [ZERO] * M.cols
    for i in range(M.rows):
        if i < s.rank:
            d = s.diagonal[i]
            if u[i].is_zero():
                continue
            if not divides(d, u[i]):
                return None
            z[i] = divexact(u[i], d)
        elif not u[i].is_zero():
            return None
    return mat_vec(s.V, z)
