"""Exact linear algebra over Z, Q and F_p used by the order machinery.

Matrices are lists of row lists.  Everything is deterministic: pivots are
chosen by position and magnitude, never randomly.
"""

from __future__ import annotations

from fractions import Fraction

from nftrace.exact import _bareiss_det


def int_det(mat) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    return _bareiss_det([list(r) for r in mat])


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    assert len(A[0]) == k
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            row.append(sum(Ai[t] * B[t][j] for t in range(k)))
        out.append(row)
    return out


def frac_matrix_inverse(M):
    """Inverse of a nonsingular matrix over Fraction."""
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [a * inv for a in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return [row[n:] for row in A]


def hnf_rows(mat):
    """Row Hermite normal form of the lattice spanned by integer rows.

    Returns the nonzero rows, echelon with positive pivots and the entries
    above each pivot reduced into [0, pivot).
    """
    m = [list(r) for r in mat if any(r)]
    if not m:
        return []
    cols = len(m[0])
    r = 0
    for c in range(cols):
        if r == len(m):
            break
        if not any(m[i][c] for i in range(r, len(m))):
            continue
        # Euclidean elimination in column c
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c]]
            i0 = min(nz, key=lambda i: (abs(m[i][c]), i))
            if i0 != r:
                m[r], m[i0] = m[i0], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
    return [row for row in m[:r]]


def in_row_lattice(hnf_basis, vec) -> bool:
    """Membership of an integer vector in the row lattice given by its HNF."""
    v = list(vec)
    for row in hnf_basis:
        c = next(i for i, a in enumerate(row) if a)
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def lattice_coords(hnf_basis, vec):
    """Coordinates of vec in the HNF row basis, or None if not a member."""
    v = list(vec)
    out = []
    for row in hnf_basis:
        c = next(i for i, a in enumerate(row) if a)
        if v[c] % row[c]:
            return None
        q = v[c] // row[c]
        out.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return out if not any(v) else None


def nullspace_mod_p(M, p):
    """Basis of {x : M x = 0 over F_p}; M given as rows, x as lists."""
    rows = [[a % p for a in r] for r in M]
    if not rows:
        return []
    nrows, ncols = len(rows), len(rows[0])
    piv_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [a * inv % p for a in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        piv_of_col[c] = r
        r += 1
        if r == nrows:
            break
    basis = []
    for free in range(ncols):
        if free in piv_of_col:
            continue
        v = [0] * ncols
        v[free] = 1
        for c, i in piv_of_col.items():
            v[c] = (-rows[i][free]) % p
        basis.append(v)
    return basis


def solve_row_combo_mod_p(rows, target, p):
    """x with sum x_i rows[i] = target over F_p, or None."""
    if not rows:
        return None if any(a % p for a in target) else []
    ncols = len(rows[0])
    aug = [[rows[i][j] % p for i in range(len(rows))] + [target[j] % p]
           for j in range(ncols)]
    nvars = len(rows)
    piv_of_col: dict[int, int] = {}
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [a * inv % p for a in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        piv_of_col[c] = r
        r += 1
    for i in range(r, len(aug)):
        if aug[i][nvars]:
            return None
    x = [0] * nvars
    for c, i in piv_of_col.items():
        x[c] = aug[i][nvars]
    return x
