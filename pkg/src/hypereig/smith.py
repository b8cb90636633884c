"""Exact integer Smith normal form and modular linear algebra.

All elimination runs over Python's arbitrary-precision integers; the
normal form over Z/mZ is then read off from the integer invariant
factors via d_i = gcd(s_i, m). Over Z_m the ideal (s) equals
(gcd(s, m)), so the reduced diagonal is equivalent to a direct modular
elimination while avoiding zero-divisor pivoting entirely.

Row and column transforms are accumulated as products of elementary
matrices (swaps, negations, unimodular 2x2 gcd steps), so when
requested, P * B * Q = diag(s_1, ..., s_rho) holds exactly over Z with
|det P| = |det Q| = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Iterator, Sequence


def _to_matrix(mat: Sequence[Sequence[int]]) -> tuple[list[list[int]], int, int]:
    rows = [[int(x) for x in row] for row in mat]
    k = len(rows)
    n = len(rows[0]) if k else 0
    if any(len(r) != n for r in rows):
        raise ValueError("matrix rows have unequal lengths")
    return rows, k, n


def _identity(size: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors of an integer matrix, optionally reduced mod m.

    integer_factors is the divisibility chain s_1 | s_2 | ... | s_rho of
    positive integers. When a modulus is attached, mod_factors holds the
    chain d_i = gcd(s_i, m) restricted to 1 <= d_i <= m-1; gcds that hit
    m reduce to 0 in Z_m and are reported in dropped_factors so the
    rank_mod computation can be audited. transforms, when present, is
    the pair (P, Q) with P * B * Q = diag(integer_factors) over Z.
    """

    integer_factors: tuple[int, ...]
    nrows: int
    ncols: int
    transforms: (
        tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]] | None
    ) = None
    modulus: int | None = None
    mod_factors: tuple[int, ...] = ()
    rank_mod: int | None = None
    dropped_factors: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        """Rank over Z (number of nonzero invariant factors)."""
        return len(self.integer_factors)


@dataclass(frozen=True)
class KernelDescription:
    """The solution module {x in Z_m^n : B x = 0 (mod m)}.

    Elements are exactly the sums sum_j c_j * g_j (mod m) with
    0 <= c_j < o_j, each combination giving a distinct vector, so
    enumeration yields total_count = prod(o_j) vectors without repeats.
    """

    modulus: int
    length: int
    generators: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]
    total_count: int

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """Enumerate every kernel element, deterministically ordered."""
        m = self.modulus
        for coeffs in product(*(range(o) for o in self.orders)):
            v = [0] * self.length
            for c, g in zip(coeffs, self.generators):
                if c:
                    for idx in range(self.length):
                        v[idx] = (v[idx] + c * g[idx]) % m
            yield tuple(v)


class _Eliminator:
    """Mutable elimination state: the working matrix plus transforms."""

    def __init__(self, a: list[list[int]], k: int, n: int, want_transforms: bool):
        self.a = a
        self.k = k
        self.n = n
        self.p = _identity(k) if want_transforms else None
        self.q = _identity(n) if want_transforms else None

    def swap_rows(self, i: int, j: int) -> None:
        self.a[i], self.a[j] = self.a[j], self.a[i]
        if self.p is not None:
            self.p[i], self.p[j] = self.p[j], self.p[i]

    def swap_cols(self, i: int, j: int) -> None:
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        if self.q is not None:
            for row in self.q:
                row[i], row[j] = row[j], row[i]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        if self.p is not None:
            self.p[i] = [-x for x in self.p[i]]

    def add_row(self, dst: int, src: int) -> None:
        self.a[dst] = [x + y for x, y in zip(self.a[dst], self.a[src])]
        if self.p is not None:
            self.p[dst] = [x + y for x, y in zip(self.p[dst], self.p[src])]

    def row_gcd_step(self, t: int, i: int) -> None:
        """Zero a[i][t] against pivot a[t][t] by a unimodular row pair."""
        x, y = self.a[t][t], self.a[i][t]
        if y % x == 0:
            f = y // x
            self.a[i] = [v - f * w for v, w in zip(self.a[i], self.a[t])]
            if self.p is not None:
                self.p[i] = [v - f * w for v, w in zip(self.p[i], self.p[t])]
            return
        g, s, u = _xgcd(x, y)
        v1, v2 = x // g, y // g
        rt, ri = self.a[t], self.a[i]
        self.a[t] = [s * a + u * b for a, b in zip(rt, ri)]
        self.a[i] = [-v2 * a + v1 * b for a, b in zip(rt, ri)]
        if self.p is not None:
            pt, pi = self.p[t], self.p[i]
            self.p[t] = [s * a + u * b for a, b in zip(pt, pi)]
            self.p[i] = [-v2 * a + v1 * b for a, b in zip(pt, pi)]

    def col_gcd_step(self, t: int, j: int) -> None:
        """Zero a[t][j] against pivot a[t][t] by a unimodular column pair."""
        x, y = self.a[t][t], self.a[t][j]
        if y % x == 0:
            f = y // x
            for row in self.a:
                row[j] -= f * row[t]
            if self.q is not None:
                for row in self.q:
                    row[j] -= f * row[t]
            return
        g, s, u = _xgcd(x, y)
        v1, v2 = x // g, y // g
        for row in self.a:
            ct, cj = row[t], row[j]
            row[t] = s * ct + u * cj
            row[j] = -v2 * ct + v1 * cj
        if self.q is not None:
            for row in self.q:
                ct, cj = row[t], row[j]
                row[t] = s * ct + u * cj
                row[j] = -v2 * ct + v1 * cj


def _min_abs_nonzero(a: list[list[int]], t: int, k: int, n: int):
    best = None
    best_val = 0
    for i in range(t, k):
        row = a[i]
        for j in range(t, n):
            v = row[j]
            if v != 0 and (best is None or abs(v) < best_val):
                best = (i, j)
                best_val = abs(v)
    return best


def integer_snf(mat: Sequence[Sequence[int]], want_transforms: bool = False) -> SmithForm:
    """Smith normal form of an integer matrix over Z.

    Classic elimination: move the entry of smallest nonzero absolute
    value (ties broken by lowest row, then column) to the pivot, clear
    its row and column with extended-gcd combinations, and repair
    divisibility violations in the trailing submatrix by row addition.
    Entries grow without bound in fixed width, hence plain Python ints.
    """
    a, k, n = _to_matrix(mat)
    st = _Eliminator(a, k, n, want_transforms)
    size = min(k, n)
    t = 0
    while t < size:
        pivot = _min_abs_nonzero(a, t, k, n)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            st.swap_rows(t, pi)
        if pj != t:
            st.swap_cols(t, pj)
        while True:
            cleared = False
            while not cleared:
                for i in range(t + 1, k):
                    if a[i][t]:
                        st.row_gcd_step(t, i)
                for j in range(t + 1, n):
                    if a[t][j]:
                        st.col_gcd_step(t, j)
                # column gcd steps can reintroduce entries below the pivot
                cleared = all(a[i][t] == 0 for i in range(t + 1, k)) and all(
                    a[t][j] == 0 for j in range(t + 1, n)
                )
            viol = None
            piv = a[t][t]
            for i in range(t + 1, k):
                row = a[i]
                for j in range(t + 1, n):
                    if row[j] % piv != 0:
                        viol = i
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            # pull the offending row up; re-elimination shrinks the pivot
            st.add_row(t, viol)
        if a[t][t] < 0:
            st.negate_row(t)
        t += 1
    factors = tuple(a[i][i] for i in range(t))
    transforms = None
    if want_transforms:
        transforms = (
            tuple(tuple(row) for row in st.p),
            tuple(tuple(row) for row in st.q),
        )
    return SmithForm(factors, k, n, transforms)


def snf_mod(
    mat: Sequence[Sequence[int]], m: int, want_transforms: bool = False
) -> SmithForm:
    """Smith normal form over Z_m, read off the integer invariant factors.

    d_i = gcd(s_i, m) for each integer factor; gcds equal to m become 0
    in Z_m, fall outside the 1 <= d_i <= m-1 normal-form shape, and are
    reported as dropped. rank_mod counts only the kept factors.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    base = integer_snf(mat, want_transforms)
    gcds = [gcd(s, m) for s in base.integer_factors]
    kept = tuple(d for d in gcds if d < m)
    dropped = tuple(d for d in gcds if d == m)
    return SmithForm(
        base.integer_factors,
        base.nrows,
        base.ncols,
        base.transforms,
        modulus=m,
        mod_factors=kept,
        rank_mod=len(kept),
        dropped_factors=dropped,
    )


def _kernel_from_snf(snf: SmithForm, m: int) -> KernelDescription:
    assert snf.transforms is not None
    _, q = snf.transforms
    n = snf.ncols
    rho = snf.rank
    generators: list[tuple[int, ...]] = []
    orders: list[int] = []
    for i, s in enumerate(snf.integer_factors):
        g = gcd(s, m)
        if g > 1:
            step = m // g
            generators.append(tuple((q[row][i] * step) % m for row in range(n)))
            orders.append(g)
    for j in range(rho, n):
        generators.append(tuple(q[row][j] % m for row in range(n)))
        orders.append(m)
    total = prod(orders) if orders else 1
    return KernelDescription(m, n, tuple(generators), tuple(orders), total)


def kernel_mod(mat: Sequence[Sequence[int]], m: int) -> KernelDescription:
    """Describe the kernel {x : mat x = 0 (mod m)} by generators and orders.

    Pivot i of the integer form contributes Q * ((m/d_i) e_i) of order
    d_i = gcd(s_i, m); each free coordinate j > rank contributes Q * e_j
    of order m. Q is invertible mod m, so orders and distinctness carry
    over and total_count = m**(n - rank) * prod(gcd(s_i, m)).
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    snf = integer_snf(mat, want_transforms=True)
    return _kernel_from_snf(snf, m)


def solve_mod(
    mat: Sequence[Sequence[int]], rhs: Sequence[int], m: int
) -> tuple[tuple[int, ...], KernelDescription] | None:
    """Solve mat x = rhs (mod m); None when no solution exists.

    Diagonalizing P B Q = diag(s_i) turns the system into the scalar
    congruences s_i z_i = (P rhs)_i (mod m), each solvable iff
    gcd(s_i, m) divides the right side; x = Q z maps back. Returns a
    particular solution together with the kernel, so the full solution
    set is particular + kernel.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    a, k, n = _to_matrix(mat)
    b = [int(x) for x in rhs]
    if len(b) != k:
        raise ValueError(f"rhs has length {len(b)}, expected {k}")
    snf = integer_snf(a, want_transforms=True)
    p, q = snf.transforms
    rho = snf.rank
    c = [sum(p[i][j] * b[j] for j in range(k)) % m for i in range(k)]
    z = [0] * n
    for i, s in enumerate(snf.integer_factors):
        g = gcd(s, m)
        if c[i] % g != 0:
            return None
        mg = m // g
        if mg > 1:
            z[i] = ((c[i] // g) * pow((s // g) % mg, -1, mg)) % mg
    for i in range(rho, k):
        if c[i] % m != 0:
            return None
    x = tuple(sum(q[row][j] * z[j] for j in range(n)) % m for row in range(n))
    return x, _kernel_from_snf(snf, m)
