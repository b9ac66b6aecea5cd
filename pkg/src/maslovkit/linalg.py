"""Matrix algebra over the library's exact coefficient rings.

Provides dense matrices of Laurent polynomials with the dagger
(involution-transpose), Smith normal form over F_p and over the Euclidean
domain F_p[x, x^-1], kernels, membership solving, determinants and inverses.

The Euclidean size function on F_p[x, x^-1] is the exponent spread
(max degree - min degree); every nonzero element factors as a unit times an
ordinary polynomial with nonzero constant term, which is what the division
helper below reduces to.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DivisionByZero,
    NotAUnit,
    RingMismatch,
    ShapeError,
    UnsupportedRing,
)
from .ring import FieldElement, LaurentPolynomial, RingDescriptor


class RingMatrix:
    """Rectangular matrix of Laurent polynomials over a fixed ring.

    Entries are stored densely; matrices in this library stay small.
    Instances are treated as immutable.
    """

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: RingDescriptor, entries):
        rows = []
        for raw in entries:
            row = []
            for e in raw:
                if isinstance(e, (int, FieldElement)):
                    e = ring.constant(e)
                if not isinstance(e, LaurentPolynomial):
                    raise ShapeError(f"bad matrix entry {e!r}")
                if e.ring != ring:
                    raise RingMismatch("entry ring differs from matrix ring")
                row.append(e)
            rows.append(tuple(row))
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("rows have inconsistent lengths")
        self.ring = ring
        self.rows = len(rows)
        self.cols = ncols
        self.entries = tuple(rows)

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, ring: RingDescriptor, n: int) -> "RingMatrix":
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: RingDescriptor, r: int, c: int) -> "RingMatrix":
        return cls(ring, [[0] * c for _ in range(r)])

    @classmethod
    def scalar(cls, ring: RingDescriptor, n: int, c) -> "RingMatrix":
        return cls(ring, [[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, ring: RingDescriptor, entries) -> "RingMatrix":
        return cls(ring, [[e] for e in entries])

    @classmethod
    def from_blocks(cls, blocks) -> "RingMatrix":
        """Assemble a block matrix from a grid of RingMatrix pieces."""
        ring = blocks[0][0].ring
        rows = []
        for block_row in blocks:
            height = block_row[0].rows
            if any(b.rows != height for b in block_row):
                raise ShapeError("block row heights differ")
            for i in range(height):
                row = []
                for b in block_row:
                    if b.ring != ring:
                        raise RingMismatch("block ring mismatch")
                    row.extend(b.entries[i])
                rows.append(row)
        return cls(ring, rows)

    @classmethod
    def block_diag(cls, blocks) -> "RingMatrix":
        blocks = list(blocks)
        if not blocks:
            raise ShapeError("block_diag needs at least one block")
        ring = blocks[0].ring
        total_r = sum(b.rows for b in blocks)
        total_c = sum(b.cols for b in blocks)
        grid = [[ring.zero() for _ in range(total_c)] for _ in range(total_r)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    grid[r0 + i][c0 + j] = b.entries[i][j]
            r0 += b.rows
            c0 += b.cols
        return cls(ring, grid)

    @classmethod
    def hstack(cls, blocks) -> "RingMatrix":
        blocks = list(blocks)
        return cls.from_blocks([blocks])

    # -- basic operations --------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, RingMatrix)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatch("matrix rings differ")
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(self.ring, out)

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.ring != other.ring:
            raise RingMismatch("matrix rings differ")
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return RingMatrix(
            self.ring,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + (-other)

    def __neg__(self) -> "RingMatrix":
        return RingMatrix(self.ring, [[-e for e in row] for row in self.entries])

    def scale(self, c) -> "RingMatrix":
        if isinstance(c, (int, FieldElement)):
            c = self.ring.constant(c)
        return RingMatrix(self.ring, [[c * e for e in row] for row in self.entries])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def dagger(self) -> "RingMatrix":
        """Transpose with entrywise involution (the dual map)."""
        return RingMatrix(
            self.ring,
            [
                [self.entries[i][j].involute() for i in range(self.rows)]
                for j in range(self.cols)
            ],
        )

    def transpose(self) -> "RingMatrix":
        return RingMatrix(
            self.ring,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def eval_T(self, t) -> "RingMatrix":
        return RingMatrix(
            self.ring.drop_T(), [[e.eval_T(t) for e in row] for row in self.entries]
        )

    def lift_T(self) -> "RingMatrix":
        return RingMatrix(
            self.ring.with_T(), [[e.lift_T() for e in row] for row in self.entries]
        )

    def submatrix(self, row_indices, col_indices) -> "RingMatrix":
        return RingMatrix(
            self.ring,
            [[self.entries[i][j] for j in col_indices] for i in row_indices],
        )

    def columns(self) -> list["RingMatrix"]:
        return [
            self.submatrix(range(self.rows), [j]) for j in range(self.cols)
        ]

    def __repr__(self):
        body = "; ".join(
            ", ".join(repr(e) for e in row) for row in self.entries
        )
        return f"RingMatrix[{self.rows}x{self.cols}: {body}]"


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a @ b


def dagger(a: RingMatrix) -> RingMatrix:
    return a.dagger()


# -- Euclidean division in F_p[x, x^-1] -----------------------------------


def spread(f: LaurentPolynomial) -> int:
    """Exponent spread of a nonzero element; the Euclidean size for d = 1."""
    if f.is_zero():
        raise DivisionByZero("spread of zero is undefined")
    if f.ring.spatial_vars == 0:
        return 0
    exps = [e[0] for e in f.terms]
    return max(exps) - min(exps)


def _unipoly(f: LaurentPolynomial):
    """Shift a d=1 Laurent polynomial to (min_exp, dense coefficient list)."""
    exps = [e[0] for e in f.terms]
    lo, hi = min(exps), max(exps)
    coeffs = [0] * (hi - lo + 1)
    for (e,), c in f.terms.items():
        coeffs[e - lo] = c
    return lo, coeffs


def _from_unipoly(ring: RingDescriptor, shift: int, coeffs) -> LaurentPolynomial:
    return LaurentPolynomial(
        ring, {(shift + i,): c for i, c in enumerate(coeffs) if c % ring.p}
    )


def laurent_divmod(f: LaurentPolynomial, g: LaurentPolynomial):
    """f = q*g + r with spread(r) < spread(g), over F_p or F_p[x, x^-1]."""
    ring = f.ring
    if ring.has_T or ring.spatial_vars > 1:
        raise UnsupportedRing("division implemented for d <= 1 without T")
    if g.is_zero():
        raise DivisionByZero("division by zero polynomial")
    if f.is_zero():
        return ring.zero(), ring.zero()
    p = ring.p
    if ring.spatial_vars == 0:
        fc = next(iter(f.terms.values()))
        gc = next(iter(g.terms.values()))
        return ring.constant(fc * pow(gc, -1, p)), ring.zero()
    flo, fc = _unipoly(f)
    glo, gc = _unipoly(g)
    ginv = pow(gc[-1], -1, p)
    rem = list(fc)
    quo = [0] * max(len(fc) - len(gc) + 1, 0)
    while len(rem) >= len(gc) and any(rem):
        while rem and rem[-1] % p == 0:
            rem.pop()
        if len(rem) < len(gc):
            break
        k = len(rem) - len(gc)
        c = rem[-1] * ginv % p
        quo[k] = c
        for i, gcoef in enumerate(gc):
            rem[k + i] = (rem[k + i] - c * gcoef) % p
        rem.pop()
    q = _from_unipoly(ring, flo - glo, quo)
    r = _from_unipoly(ring, flo, rem)
    return q, r


def laurent_divides(d: LaurentPolynomial, f: LaurentPolynomial) -> bool:
    """Exact divisibility d | f in the d <= 1 rings."""
    if f.is_zero():
        return True
    if d.is_zero():
        return False
    _, r = laurent_divmod(f, d)
    return r.is_zero()


def _canonical_unit(f: LaurentPolynomial) -> LaurentPolynomial:
    """Unit u such that u*f has lowest exponent 0 and leading coefficient 1."""
    ring = f.ring
    p = ring.p
    if ring.spatial_vars == 0:
        c = next(iter(f.terms.values()))
        return ring.constant(pow(c, -1, p))
    lo, coeffs = _unipoly(f)
    lead_inv = pow(coeffs[-1], -1, p)
    return LaurentPolynomial(ring, {(-lo,): lead_inv})


# -- Smith normal form ------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ G @ V = D with U, V invertible and D a canonical diagonal.

    Nonzero diagonal entries come first, satisfy the divisibility chain
    d1 | d2 | ..., and are normalized to lowest exponent 0 with leading
    coefficient 1.  u_det and v_det record det(U) and det(V), which are
    units because U and V are products of elementary operations.
    """

    U: RingMatrix
    D: RingMatrix
    V: RingMatrix
    u_det: LaurentPolynomial
    v_det: LaurentPolynomial

    @property
    def invariant_factors(self) -> list:
        n = min(self.D.rows, self.D.cols)
        return [self.D[k, k] for k in range(n) if not self.D[k, k].is_zero()]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _check_snf_ring(ring: RingDescriptor):
    if ring.has_T:
        raise UnsupportedRing("Smith normal form over rings with T is unsupported")
    if ring.spatial_vars > 1:
        raise UnsupportedRing(
            f"Smith normal form needs d <= 1, got d = {ring.spatial_vars}"
        )


def smith_normal_form(G: RingMatrix) -> SmithDecomposition:
    """Smith normal form over F_p or F_p[x, x^-1].

    Pivots are chosen with least spread (ties by lowest row, then column
    index) so the output is deterministic.
    """
    ring = G.ring
    _check_snf_ring(ring)
    m, n = G.rows, G.cols
    A = [list(row) for row in G.entries]
    U = [[ring.one() if i == j else ring.zero() for j in range(m)] for i in range(m)]
    V = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    dets = {"u": ring.one(), "v": ring.one()}
    minus_one = ring.constant(-1)

    def swap_rows(M, a, b):
        M[a], M[b] = M[b], M[a]

    def swap_cols(M, a, b):
        for row in M:
            row[a], row[b] = row[b], row[a]

    def row_submul(M, dst, q, src):
        M[dst] = [e - q * f for e, f in zip(M[dst], M[src])]

    def col_submul(M, dst, q, src):
        for row in M:
            row[dst] = row[dst] - q * row[src]

    def row_add(M, dst, src):
        M[dst] = [e + f for e, f in zip(M[dst], M[src])]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if not A[i][j].is_zero():
                    key = (spread(A[i][j]), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(A, t, pi)
            swap_rows(U, t, pi)
            dets["u"] = dets["u"] * minus_one
        if pj != t:
            swap_cols(A, t, pj)
            swap_cols(V, t, pj)
            dets["v"] = dets["v"] * minus_one

        while True:
            restarted = False
            i = 0
            while i < m:
                if i != t and not A[i][t].is_zero():
                    q, r = laurent_divmod(A[i][t], A[t][t])
                    row_submul(A, i, q, t)
                    row_submul(U, i, q, t)
                    if not r.is_zero():
                        swap_rows(A, t, i)
                        swap_rows(U, t, i)
                        dets["u"] = dets["u"] * minus_one
                        restarted = True
                        break
                i += 1
            if restarted:
                continue
            j = 0
            while j < n:
                if j != t and not A[t][j].is_zero():
                    q, r = laurent_divmod(A[t][j], A[t][t])
                    col_submul(A, j, q, t)
                    col_submul(V, j, q, t)
                    if not r.is_zero():
                        swap_cols(A, t, j)
                        swap_cols(V, t, j)
                        dets["v"] = dets["v"] * minus_one
                        restarted = True
                        break
                j += 1
            if restarted:
                continue
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if not A[i][j].is_zero() and not laurent_divides(
                        A[t][t], A[i][j]
                    ):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(A, t, offender)
            row_add(U, t, offender)
        t += 1

    for k in range(min(m, n)):
        if not A[k][k].is_zero():
            u = _canonical_unit(A[k][k])
            A[k] = [u * e for e in A[k]]
            U[k] = [u * e for e in U[k]]
            dets["u"] = dets["u"] * u

    return SmithDecomposition(
        U=RingMatrix(ring, U),
        D=RingMatrix(ring, A),
        V=RingMatrix(ring, V),
        u_det=dets["u"],
        v_det=dets["v"],
    )


def rank(G: RingMatrix) -> int:
    return smith_normal_form(G).rank


def kernel_basis(G: RingMatrix) -> RingMatrix:
    """Columns generating {v : G v = 0}; a rows x 0 matrix for zero kernel."""
    snf = smith_normal_form(G)
    r = snf.rank
    cols = range(r, G.cols)
    return snf.V.submatrix(range(G.cols), cols)


def solve_in_span(G: RingMatrix, B: RingMatrix) -> RingMatrix | None:
    """Solve G X = B over the ring; None when some column is not in the span."""
    if G.rows != B.rows:
        raise ShapeError("row counts differ")
    snf = smith_normal_form(G)
    r = snf.rank
    W = snf.U @ B
    ring = G.ring
    Y = [[ring.zero()] * B.cols for _ in range(G.cols)]
    for i in range(G.rows):
        for j in range(B.cols):
            w = W[i, j]
            if i < r:
                q, rem = laurent_divmod(w, snf.D[i, i])
                if not rem.is_zero():
                    return None
                Y[i][j] = q
            elif not w.is_zero():
                return None
    return snf.V @ RingMatrix(ring, Y)


def span_contains(G: RingMatrix, B: RingMatrix) -> bool:
    """True when every column of B lies in the column span of G."""
    return solve_in_span(G, B) is not None


def spans_equal(G1: RingMatrix, G2: RingMatrix) -> bool:
    return span_contains(G1, G2) and span_contains(G2, G1)


# -- determinants, units, inverses -----------------------------------------


def _det_modp(A: RingMatrix) -> LaurentPolynomial:
    ring = A.ring
    p = ring.p
    zero = (0,) * ring.nexponents
    M = [[e.terms.get(zero, 0) for e in row] for row in A.entries]
    n = A.rows
    det = 1
    for c in range(n):
        piv = None
        for r in range(c, n):
            if M[r][c] % p:
                piv = r
                break
        if piv is None:
            return ring.zero()
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det = det * M[c][c] % p
        inv = pow(M[c][c], -1, p)
        for r in range(c + 1, n):
            factor = M[r][c] * inv % p
            if factor:
                M[r] = [(a - factor * b) % p for a, b in zip(M[r], M[c])]
    return ring.constant(det)


def _det_cofactor(A: RingMatrix) -> LaurentPolynomial:
    ring = A.ring
    n = A.rows
    cache: dict = {}

    def minor(row: int, colmask: int) -> LaurentPolynomial:
        if row == n:
            return ring.one()
        key = (row, colmask)
        got = cache.get(key)
        if got is not None:
            return got
        acc = ring.zero()
        sign = 1
        for j in range(n):
            if not (colmask >> j) & 1:
                continue
            e = A.entries[row][j]
            if e.terms:
                term = e * minor(row + 1, colmask & ~(1 << j))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        cache[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


def det(A: RingMatrix) -> LaurentPolynomial:
    """Exact determinant; modular elimination for d=0, SNF or cofactors otherwise."""
    if not A.is_square():
        raise ShapeError("determinant of a non-square matrix")
    ring = A.ring
    if A.rows == 0:
        return ring.one()
    if ring.spatial_vars == 0 and not ring.has_T:
        return _det_modp(A)
    if ring.spatial_vars <= 1 and not ring.has_T:
        return _det_snf(A)
    return _det_cofactor(A)


def _det_snf(A: RingMatrix) -> LaurentPolynomial:
    # det(U) det(A) det(V) = det(D), and the SNF records the unit dets
    snf = smith_normal_form(A)
    d = A.ring.one()
    for k in range(A.rows):
        d = d * snf.D[k, k]
        if d.is_zero():
            return A.ring.zero()
    return d * snf.u_det.unit_inverse() * snf.v_det.unit_inverse()


def is_unit_matrix(A: RingMatrix) -> bool:
    """True iff det(A) is a unit of the ring (a nonzero monomial)."""
    if not A.is_square():
        raise ShapeError("unit test needs a square matrix")
    ring = A.ring
    if A.rows == 0:
        return True
    if ring.spatial_vars <= 1 and not ring.has_T:
        snf = smith_normal_form(A)
        return snf.rank == A.rows and all(
            f.is_unit() for f in snf.invariant_factors
        )
    return det(A).is_unit()


def inverse(A: RingMatrix) -> RingMatrix:
    """Inverse of a matrix whose determinant is a unit."""
    if not A.is_square():
        raise ShapeError("inverse of a non-square matrix")
    ring = A.ring
    n = A.rows
    if n == 0:
        return A
    if ring.spatial_vars == 0 and not ring.has_T:
        return _inverse_modp(A)
    if ring.spatial_vars <= 1 and not ring.has_T:
        snf = smith_normal_form(A)
        if snf.rank < n or not all(f.is_unit() for f in snf.invariant_factors):
            raise NotAUnit("matrix is not invertible over the ring")
        Dinv = RingMatrix(
            ring,
            [
                [snf.D[i, i].unit_inverse() if i == j else 0 for j in range(n)]
                for i in range(n)
            ],
        )
        return snf.V @ Dinv @ snf.U
    d = det(A)
    if not d.is_unit():
        raise NotAUnit("matrix is not invertible over the ring")
    dinv = d.unit_inverse()
    adj = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = [r for r in range(n) if r != i]
            cols = [c for c in range(n) if c != j]
            minor = _det_cofactor(A.submatrix(rows, cols))
            cof = minor if (i + j) % 2 == 0 else -minor
            adj[j][i] = cof * dinv
    return RingMatrix(ring, adj)


def _inverse_modp(A: RingMatrix) -> RingMatrix:
    ring = A.ring
    p = ring.p
    zero = (0,) * ring.nexponents
    n = A.rows
    M = [
        [e.terms.get(zero, 0) for e in row] + [int(i == j) for j in range(n)]
        for i, row in enumerate(A.entries)
    ]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if M[r][c] % p:
                piv = r
                break
        if piv is None:
            raise NotAUnit("matrix is singular mod p")
        M[c], M[piv] = M[piv], M[c]
        inv = pow(M[c][c], -1, p)
        M[c] = [v * inv % p for v in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                factor = M[r][c]
                M[r] = [(a - factor * b) % p for a, b in zip(M[r], M[c])]
    return RingMatrix(ring, [[row[n + j] for j in range(n)] for row in M])
