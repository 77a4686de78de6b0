"""Exact integer matrices and the little linear algebra the witnesses need.

Everything is plain Python integers in immutable row-major tuples, so
arithmetic is exact at any size and values hash and compare structurally.
The three nontrivial algorithms:

  * Bareiss fraction-free elimination for determinants (integer-only,
    intermediate entries stay divisors of minors).
  * Row Hermite-style elimination carrying a transformation matrix, used
    to extract the saturated left kernel: the full lattice of integer
    vectors v with v A = 0, not merely a finite-index sublattice. The
    rows recording zero pivots across all columns form a basis of that
    kernel because unimodular row operations preserve the row lattice.
  * Binary exponentiation for matrix powers.

standard_form(g) is the block form J with upper-right +I_g, lower-left
-I_g; a matrix A is symplectic for it when A^T J A = J.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "IntMatrix",
    "identity",
    "standard_form",
    "determinant",
    "left_kernel",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; entries row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @staticmethod
    def from_rows(rows: list[list[int]]) -> "IntMatrix":
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return IntMatrix(n, m, tuple(x for r in rows for x in r))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [0] * (n * m)
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for t in range(k):
                av = arow[t]
                if av == 0:
                    continue
                brow = b[t * m : (t + 1) * m]
                base = i * m
                for j in range(m):
                    out[base + j] += av * brow[j]
        return IntMatrix(n, m, tuple(out))

    def __pow__(self, e: int) -> "IntMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices have powers")
        if e < 0:
            raise ValueError("negative powers not supported")
        result = identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        n = self.cols
        return all(
            x == (1 if i % (n + 1) == 0 else 0) for i, x in enumerate(self.entries)
        ) if n else True

    def is_antisymmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == -self[j, i] for i in range(self.rows) for j in range(i + 1)
        )


def identity(n: int) -> IntMatrix:
    return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))


def standard_form(g: int) -> IntMatrix:
    """The 2g x 2g alternating block form J: +I_g upper right, -I_g lower left."""
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    n = 2 * g
    entries = [0] * (n * n)
    for i in range(g):
        entries[i * n + (g + i)] = 1
        entries[(g + i) * n + i] = -1
    return IntMatrix(n, n, tuple(entries))


def determinant(matrix: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if matrix.rows != matrix.cols:
        raise ValueError("determinant needs a square matrix")
    n = matrix.rows
    if n == 0:
        return 1
    a = [list(matrix.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def left_kernel(matrix: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the saturated left kernel {v integer row : v @ matrix = 0}.

    Works on the augmented block [matrix | I]: unimodular row operations
    (swap, negate, add integer multiples) reduce the left block to
    row-echelon form while the right block tracks the operations. Rows
    whose left part becomes zero give the kernel basis; saturation holds
    because the operations are invertible over the integers, so the rows
    always span the full lattice Z^rows.
    """
    n, m = matrix.rows, matrix.cols
    left = [list(matrix.row(i)) for i in range(n)]
    right = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    top = 0
    for col in range(m):
        # gcd-style elimination: repeatedly reduce the column below `top`
        while True:
            live = [i for i in range(top, n) if left[i][col] != 0]
            if not live:
                break
            pivot = min(live, key=lambda i: abs(left[i][col]))
            if pivot != top:
                left[top], left[pivot] = left[pivot], left[top]
                right[top], right[pivot] = right[pivot], right[top]
            if left[top][col] < 0:
                left[top] = [-x for x in left[top]]
                right[top] = [-x for x in right[top]]
            done = True
            p = left[top][col]
            for i in range(top + 1, n):
                q = left[i][col] // p  # floor: remainders land in [0, p)
                if q:
                    left[i] = [x - q * y for x, y in zip(left[i], left[top])]
                    right[i] = [x - q * y for x, y in zip(right[i], right[top])]
                if left[i][col] != 0:
                    done = False
            if done:
                break
        if left[top][col] != 0:
            top += 1
            if top == n:
                break
    return [tuple(right[i]) for i in range(top, n) if all(x == 0 for x in left[i])]
