"""Number fields: maximal order, discriminant, signature, trace form.

A field is built from a monic irreducible polynomial.  The maximal order
comes from the Round-2 procedure: at every prime p whose square divides
disc(f), the order is repeatedly enlarged through the ring of multipliers
of its p-radical until it is p-maximal; the per-prime results are then
summed.  The Dedekind criterion is run at every such prime as an
independent certificate that enlargement was (or was not) required.

Basis convention: integral_basis rows express omega_1..omega_n in the
power basis 1, theta, ..., theta^(n-1); the basis is lower triangular
with omega_1 = 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from nftrace._linalg import (
    frac_matrix_inverse,
    hnf_rows,
    int_det,
    lattice_coords,
    nullspace_mod_p,
)
from nftrace.exact import (
    InternalInvariantError,
    IntPoly,
    _gf_distinct_degree,
    count_real_roots,
    factor_integer,
    factor_poly,
    factor_poly_mod,
    gf_from_intpoly,
    gf_gcd,
    gf_gcdex,
    gf_monic,
    gf_mul,
    gf_pow_mod,
    gf_rem,
    is_prime,
    poly_discriminant,
)


class FieldConstructionError(ValueError):
    """Raised when the defining polynomial is unusable."""


# ----------------------------------------------------------------------
# order arithmetic: bases, structure constants, Round-2
# ----------------------------------------------------------------------


def _power_sums(f: IntPoly, count: int) -> list[int]:
    """Tr(theta^k) for k < count via Newton's identities (f monic)."""
    n = f.degree
    a = f.coeffs
    s = [n]
    for k in range(1, count):
        acc = -k * a[n - k] if k <= n else 0
        for i in range(1, min(k, n + 1)):
            acc -= a[n - i] * s[k - i]
        s.append(acc)
    return s


def _canonical_basis(den: int, rows: list[list[int]]):
    """Canonical triangular basis of the order lattice (omega_1 = 1).

    HNF is taken with columns reversed (constant coordinate last) so the
    flipped result is lower triangular in ascending powers of theta and its
    first vector is the minimal element of O cap Q, which is 1.
    """
    n = len(rows)
    g = den
    for r in rows:
        for a in r:
            g = math.gcd(g, a)
    if g > 1:
        den //= g
        rows = [[a // g for a in r] for r in rows]
    rev = [list(reversed(r)) for r in rows]
    H = hnf_rows(rev)
    if len(H) != n:
        raise InternalInvariantError("order basis lost rank")
    out = [list(reversed(r)) for r in reversed(H)]
    if out[0][0] != den or any(out[0][1:]):
        raise InternalInvariantError("order does not contain 1 as first basis vector")
    return den, out


def _basis_fractions(den, rows):
    return [[Fraction(a, den) for a in r] for r in rows]


def _mult_table(f: IntPoly, den: int, rows: list[list[int]]):
    """Structure constants C[i][j] (integer vectors) and the integer
    change-of-basis matrix from power coordinates to basis coordinates.

    Integrality of both is exactly ring closure of the basis and
    Z[theta] containment; failure means the lattice is not an order.
    """
    n = f.degree
    M = _basis_fractions(den, rows)
    Minv = frac_matrix_inverse(M)
    minv_int = []
    for r in Minv:
        row = []
        for a in r:
            if a.denominator != 1:
                raise InternalInvariantError("order does not contain Z[theta]")
            row.append(int(a))
        minv_int.append(row)
    fh = _to_fr(f)
    C = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            prod = _fr_mul_mod(M[i], M[j], fh)
            prod += [Fraction(0)] * (n - len(prod))
            coords = [
                sum(prod[k] * Minv[k][t] for k in range(n)) for t in range(n)
            ]
            vec = []
            for c in coords:
                if c.denominator != 1:
                    raise InternalInvariantError("basis is not closed under multiplication")
                vec.append(int(c))
            C[i][j] = C[j][i] = tuple(vec)
    return C, minv_int


def _to_fr(f: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in f.coeffs]


def _fr_mul_mod(a, b, fh):
    """Product of Fraction coefficient lists reduced mod the monic fh."""
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    n = len(fh) - 1
    for d in range(len(out) - 1, n - 1, -1):
        c = out[d]
        if c:
            for k in range(n + 1):
                out[d - n + k] -= c * fh[k]
    out = out[:n]
    while out and not out[-1]:
        out.pop()
    return out


def _alg_mul_mod_p(C, a, b, p):
    n = len(C)
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    w = ai * bj
                    cij = C[i][j]
                    for k in range(n):
                        if cij[k]:
                            out[k] = (out[k] + w * cij[k]) % p
    return out


def _alg_mul_int(C, a, b):
    n = len(C)
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    w = ai * bj
                    cij = C[i][j]
                    for k in range(n):
                        if cij[k]:
                            out[k] += w * cij[k]
    return out


def _frobenius_power_matrix(C, p, n):
    """Matrix of x -> x^(p^m) on O/pO with p^m >= n, columns = images."""
    def alg_pow(v, e):
        result = [1 if k == 0 else 0 for k in range(n)]
        base = list(v)
        while e:
            if e & 1:
                result = _alg_mul_mod_p(C, result, base, p)
            base = _alg_mul_mod_p(C, base, base, p)
            e >>= 1
        return result

    cols = []
    for i in range(n):
        v = [0] * n
        v[i] = 1
        cols.append(alg_pow(v, p))
    F = [[cols[c][r] for c in range(n)] for r in range(n)]
    m = 1
    q = p
    while q < n:
        q *= p
        m += 1
    Fm = F
    for _ in range(m - 1):
        Fm = [[sum(Fm[r][t] * F[t][c] for t in range(n)) % p for c in range(n)]
              for r in range(n)]
    return Fm


def _radical_mod_p(C, p, n):
    """Basis of the nilradical of O/pO (kernel of the p^m-power map)."""
    return nullspace_mod_p(_frobenius_power_matrix(C, p, n), p)


def _enlarge_at_p(f: IntPoly, den: int, rows: list[list[int]], p: int):
    """One Round-2 enlargement through the multiplier ring of the p-radical.

    Returns the enlarged (den, rows) or None when the order is p-maximal.
    """
    n = f.degree
    C, _ = _mult_table(f, den, rows)
    rad = _radical_mod_p(C, p, n)
    ideal_rows = [[p if j == i else 0 for j in range(n)] for i in range(n)]
    ideal_rows += [[c % p for c in v] for v in rad]
    T = hnf_rows(ideal_rows)
    if len(T) != n:
        raise InternalInvariantError("radical ideal lost rank")
    # multipliers: y in O with y * I_p inside p * I_p, as a kernel mod p
    constraint_rows = []
    for t in T:
        prods = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            prods.append(_alg_mul_int(C, e, t))
        coords = []
        for v in prods:
            cv = lattice_coords(T, v)
            if cv is None:
                raise InternalInvariantError("ideal is not closed under O-multiplication")
            coords.append(cv)
        for k in range(n):
            constraint_rows.append([coords[i][k] % p for i in range(n)])
    ker = nullspace_mod_p(constraint_rows, p)
    stack = [[p if j == i else 0 for j in range(n)] for i in range(n)]
    stack += [[c % p for c in v] for v in ker]
    H = hnf_rows(stack)
    if all(H[i][j] == (p if i == j else 0) for i in range(n) for j in range(n)):
        return None
    # new order = (H / p) in current-basis coordinates
    new_rows = [[sum(H[i][t] * rows[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)]
    return _canonical_basis(den * p, new_rows)


def _p_maximal_order(f: IntPoly, p: int):
    """p-maximal order containing Z[theta], by iterated enlargement."""
    n = f.degree
    den, rows = 1, [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    while True:
        nxt = _enlarge_at_p(f, den, rows, p)
        if nxt is None:
            return den, rows
        den, rows = nxt


def dedekind_p_maximal(f: IntPoly, p: int) -> bool:
    """Dedekind's criterion: is Z[theta] already p-maximal?"""
    fb = gf_monic(gf_from_intpoly(f, p), p)
    fac = factor_poly_mod(f, p)
    gstar = [1]
    hstar = [1]
    for g, e in fac:
        gstar = gf_mul(gstar, list(g.coeffs), p)
        for _ in range(e - 1):
            hstar = gf_mul(hstar, list(g.coeffs), p)
    # lift monic and form (g*h - f)/p over Z
    g_lift = [c % p for c in gstar]
    h_lift = [c % p for c in hstar]
    gl = IntPoly(g_lift[:-1] + [1]) if len(g_lift) > 1 else IntPoly([1])
    hl = IntPoly(h_lift[:-1] + [1]) if len(h_lift) > 1 else IntPoly([1])
    prod = gl * hl
    diff = prod - f
    T = [c // p for c in diff.coeffs]
    assert all(c % p == 0 for c in diff.coeffs)
    Tb = gf_rem([c % p for c in T], fb, p) if T else []
    u = gf_gcd(gf_gcd(Tb if Tb else [0], gstar, p), hstar, p)
    return len(u) <= 1


def _maximal_order(f: IntPoly, disc_f: int):
    """Maximal order as (den, rows, index); Dedekind cross-check included."""
    n = f.degree
    bad = [p for p, e in factor_integer(disc_f) if e >= 2]
    parts = []
    for p in bad:
        den_p, rows_p = _p_maximal_order(f, p)
        if dedekind_p_maximal(f, p) != (den_p == 1):
            raise InternalInvariantError(
                f"Dedekind criterion disagrees with Round-2 at p={p}"
            )
        if den_p > 1:
            parts.append((den_p, rows_p))
    if not parts:
        den, rows = 1, [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    else:
        L = math.lcm(*[d for d, _ in parts])
        stacked = [[L if j == i else 0 for j in range(n)] for i in range(n)]
        for d, rws in parts:
            s = L // d
            stacked += [[a * s for a in r] for r in rws]
        den, rows = _canonical_basis(L, hnf_rows(stacked))
    diag = 1
    for i in range(n):
        diag *= rows[i][i]
    index_num = den**n
    if index_num % diag:
        raise InternalInvariantError("basis determinant is not 1/index")
    index = index_num // diag
    return den, rows, index


# ----------------------------------------------------------------------
# the NumberField object
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric integer matrix of the integral trace form."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def det(self) -> int:
        return int_det([list(r) for r in self.entries])


class NumberField:
    """A number field Q(theta) with its maximal order precomputed."""

    def __init__(self, f: IntPoly, den, rows, index, disc, signature):
        self.defining_poly = f
        self.degree = f.degree
        self.disc = disc
        self.index = index
        self.signature = signature
        self._den = den
        self._rows = rows
        self.integral_basis = tuple(
            tuple(Fraction(a, den) for a in r) for r in rows
        )
        C, minv = _mult_table(f, den, rows)
        self._mult = C
        self._minv = minv  # power coords -> basis coords, integer matrix
        s = _power_sums(f, f.degree)
        self._trace_vec = []
        M = self.integral_basis
        for i in range(self.degree):
            t = sum(M[i][k] * s[k] for k in range(self.degree))
            if t.denominator != 1:
                raise InternalInvariantError("non-integral trace on the order")
            self._trace_vec.append(int(t))
        # idempotent caches filled on demand
        self._gram = None
        self._galois = None
        self._split_cache: dict[int, object] = {}

    @property
    def r1(self) -> int:
        return self.signature[0]

    @property
    def r2(self) -> int:
        return self.signature[1]

    @property
    def is_totally_real(self) -> bool:
        return self.r2 == 0

    def element(self, coords) -> "FieldElement":
        return FieldElement(self, tuple(Fraction(c) for c in coords))

    def one(self) -> "FieldElement":
        return self.element([1] + [0] * (self.degree - 1))

    def __repr__(self):
        return f"NumberField({self.defining_poly}, disc={self.disc})"


@dataclass(frozen=True)
class FieldElement:
    """Element of a field in integral-basis coordinates."""

    field: NumberField
    coords: tuple[Fraction, ...]

    def __add__(self, other):
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coords))
        n = self.field.degree
        C = self.field._mult
        out = [Fraction(0)] * n
        for i, ai in enumerate(self.coords):
            if ai:
                for j, bj in enumerate(other.coords):
                    if bj:
                        w = ai * bj
                        cij = C[i][j]
                        for k in range(n):
                            if cij[k]:
                                out[k] += w * cij[k]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def trace(self) -> Fraction:
        return sum(c * t for c, t in zip(self.coords, self.field._trace_vec))

    def is_integral_coords(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)


def new_field(f: IntPoly) -> NumberField:
    """Construct the number field defined by a monic irreducible polynomial."""
    if f.degree < 2:
        raise FieldConstructionError(f"degree must be at least 2, got {f.degree}")
    if not f.is_monic:
        raise FieldConstructionError(f"polynomial is not monic: {f}")
    fac = factor_poly(f)
    if len(fac) > 1 or fac[0][1] > 1:
        g = fac[0][0]
        raise FieldConstructionError(f"polynomial is reducible: factor {g}")
    disc_f = poly_discriminant(f)
    den, rows, index = _maximal_order(f, disc_f)
    disc, rem = divmod(disc_f, index * index)
    if rem:
        raise InternalInvariantError("disc(f)/index^2 is not an integer")
    r1 = count_real_roots(f)
    n = f.degree
    if (n - r1) % 2:
        raise InternalInvariantError("complex roots did not pair up")
    r2 = (n - r1) // 2
    if (disc < 0) != (r2 % 2 == 1):
        raise InternalInvariantError("sign(disc) disagrees with signature parity")
    return NumberField(f, den, rows, index, disc, (r1, r2))


def trace_gram(K: NumberField) -> GramMatrix:
    """Gram matrix G_ij = Tr(omega_i omega_j) of the integral trace form."""
    if K._gram is not None:
        return K._gram
    n = K.degree
    C = K._mult
    tv = K._trace_vec
    G = [[sum(C[i][j][k] * tv[k] for k in range(n)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if G[i][j] != G[j][i]:
                raise InternalInvariantError("trace form is not symmetric")
    gm = GramMatrix(tuple(tuple(r) for r in G))
    if gm.det() != K.disc:
        raise InternalInvariantError("det(trace gram) != disc(K)")
    K._gram = gm
    return gm


# ----------------------------------------------------------------------
# fundamental discriminants
# ----------------------------------------------------------------------


def is_fundamental_disc(d: int) -> bool:
    """Is d the discriminant of a quadratic field?"""
    if d == 0 or d == 1:
        return False

    def squarefree(n):
        return all(e == 1 for _, e in factor_integer(n))

    if d % 4 == 1:
        return squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


# ----------------------------------------------------------------------
# Galois detection
# ----------------------------------------------------------------------


def _coordinate_bound(K: NumberField) -> int:
    """Exact bound on integral-basis coordinates of any root of f in O_K.

    Conjugates of a root are bounded by the Cauchy bound B of f; the trace
    pairing then bounds the coordinates through the inverse Gram matrix.
    """
    f = K.defining_poly
    n = K.degree
    B = Fraction(1 + max([abs(c) for c in f.coeffs[:-1]] or [0]))
    M = K.integral_basis
    Bj = [sum(abs(M[j][k]) * B**k for k in range(n)) for j in range(n)]
    G = trace_gram(K)
    Ginv = frac_matrix_inverse([list(r) for r in G.entries])
    tb = [n * B * b for b in Bj]
    C = max(sum(abs(Ginv[j][k]) * tb[k] for k in range(n)) for j in range(n))
    return int(C) + 1


def _poly_eval_mod(g: IntPoly, r: list[int], fb: list[int], m: int) -> list[int]:
    """g(r) in the ring Z[x]/(m, fb) with fb monic; r a coefficient list."""
    out: list[int] = []
    for c in reversed(g.coeffs):
        out = _ring_mul(out, r, fb, m)
        out = _ring_add(out, [c % m], m)
    return out


def _ring_mul(a, b, fb, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % m
    n = len(fb) - 1
    for d in range(len(out) - 1, n - 1, -1):
        c = out[d] % m
        if c:
            for k in range(n + 1):
                out[d - n + k] = (out[d - n + k] - c * fb[k]) % m
    out = out[:n]
    while out and out[-1] % m == 0:
        out.pop()
    return out


def _ring_add(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    while out and out[-1] % m == 0:
        out.pop()
    return out


def _ring_sub(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    while out and out[-1] % m == 0:
        out.pop()
    return out


def _verify_root(K: NumberField, coords: list[int]) -> bool:
    alpha = K.element(coords)
    acc = K.element([0] * K.degree)
    one = K.one()
    for c in reversed(K.defining_poly.coeffs):
        acc = acc * alpha + c * one
    return acc.is_zero


def _centered_vec(v, m):
    out = []
    for c in v:
        c %= m
        out.append(c - m if c > m // 2 else c)
    return out


def _count_roots_inert(K: NumberField, p: int, bound: int) -> int:
    """Roots of f in O_K, certified p-adically at an inert prime.

    Candidates are the Frobenius orbit of x in F_p[x]/(f), Newton-lifted to
    Z[x]/(p^k, f) with p^k > 2*bound; each reconstructed candidate is
    verified exactly in the field.
    """
    f = K.defining_poly
    n = K.degree
    k = 1
    while p**k <= 2 * bound:
        k += 1
    pk = p**k
    fb = gf_from_intpoly(f, p)
    fint = [c % pk for c in f.coeffs]
    fprime = f.derivative()
    # Frobenius orbit of the image of theta
    orbit = [[0, 1]]
    for _ in range(n - 1):
        orbit.append(gf_pow_mod(orbit[-1], p, fb, p))
    found = set()
    for r0 in orbit:
        r = list(r0)
        d0 = _poly_eval_mod(fprime, r, fb, p)
        s, _, g = gf_gcdex(d0, fb, p)
        if g != [1]:
            raise InternalInvariantError("f'(root) not invertible at inert prime")
        u = s
        m = p
        while m < pk:
            m = min(m * m, pk)
            fm = [c % m for c in f.coeffs]
            fr = _poly_eval_mod(f, r, fm, m)
            r = _ring_sub(r, _ring_mul(fr, u, fm, m), m)
            fpr = _poly_eval_mod(fprime, r, fm, m)
            corr = _ring_sub([2], _ring_mul(fpr, u, fm, m), m)
            u = _ring_mul(u, corr, fm, m)
        if _poly_eval_mod(f, r, fint, pk):
            raise InternalInvariantError("Newton lift failed to reach a root")
        # power coords mod p^k -> integral basis coords
        a = list(r) + [0] * (n - len(r))
        c = [sum(a[t] * K._minv[t][j] for t in range(n)) % pk for j in range(n)]
        c = _centered_vec(c, pk)
        if all(abs(x) <= bound for x in c) and _verify_root(K, c):
            found.add(tuple(c))
    return len(found)


def _count_roots_split(K: NumberField, p: int, bound: int) -> int:
    """Roots of f in O_K, certified p-adically at a totally split prime."""
    f = K.defining_poly
    n = K.degree
    k = 1
    while p**k <= 2 * bound:
        k += 1
    pk = p**k
    roots_mod_p = []
    for g, e in factor_poly_mod(f, p):
        assert g.degree == 1 and e == 1
        roots_mod_p.append((-g[0] * pow(g[1], p - 2, p)) % p)
    assert len(roots_mod_p) == n
    fprime = f.derivative()
    lifted = []
    for r in roots_mod_p:
        m = p
        while m < pk:
            m = min(m * m, pk)
            d = fprime(r) % m
            inv = pow(d, -1, m)
            r = (r - f(r) * inv) % m
        assert f(r) % pk == 0
        lifted.append(r)
    V = [[pow(rho, j, pk) for j in range(n)] for rho in lifted]
    Vinv = _matrix_inverse_mod(V, pk, p)
    found = set()
    for combo in itertools.product(lifted, repeat=n):
        a = [sum(Vinv[i][t] * combo[t] for t in range(n)) % pk for i in range(n)]
        c = [sum(a[t] * K._minv[t][j] for t in range(n)) % pk for j in range(n)]
        c = _centered_vec(c, pk)
        if all(abs(x) <= bound for x in c) and tuple(c) not in found:
            if _verify_root(K, c):
                found.add(tuple(c))
    return len(found)


def _matrix_inverse_mod(M, m, p):
    """Inverse of M over Z/m (m a power of the prime p); pivots are units."""
    n = len(M)
    A = [[M[i][j] % m for j in range(n)] + [1 if i == j else 0 for j in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] % p)
        A[c], A[piv] = A[piv], A[c]
        inv = pow(A[c][c], -1, m)
        A[c] = [a * inv % m for a in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                fct = A[i][c]
                A[i] = [(a - fct * b) % m for a, b in zip(A[i], A[c])]
    return [row[n:] for row in A]


def _factor_degree_pattern(f: IntPoly, p: int) -> list[int]:
    """Sorted degrees of the irreducible factors of the squarefree f mod p."""
    fb = gf_monic(gf_from_intpoly(f, p), p)
    out = []
    for part, d in _gf_distinct_degree(fb, p):
        out += [d] * ((len(part) - 1) // d)
    return sorted(out)


_GALOIS_SCAN_CAP = 10**6


def is_galois(K: NumberField) -> bool:
    """Exact normality test.

    Any unramified prime with a mixed residue-degree pattern certifies
    non-Galois.  The first inert prime (or, failing that within a window,
    the first totally split prime) triggers a p-adic count of the roots of
    f inside O_K; the field is Galois iff all n roots are found.
    """
    if K._galois is not None:
        return K._galois
    n = K.degree
    if n == 2:
        K._galois = True
        return True
    f = K.defining_poly
    disc_f = poly_discriminant(f)
    bound = _coordinate_bound(K)
    split_candidate = None
    patience = 0
    p = 2
    while p < _GALOIS_SCAN_CAP:
        if disc_f % p:
            pattern = _factor_degree_pattern(f, p)
            if len(set(pattern)) > 1:
                K._galois = False
                return False
            d = pattern[0]
            if d == n:
                K._galois = _count_roots_inert(K, p, bound) == n
                return K._galois
            if d == 1:
                if n <= 5:
                    K._galois = _count_roots_split(K, p, bound) == n
                    return K._galois
                split_candidate = split_candidate or p
            if split_candidate is not None:
                patience += 1
                if patience > 25:
                    K._galois = _count_roots_split(K, split_candidate, bound) == n
                    return K._galois
        p = 3 if p == 2 else p + 2
        while not is_prime(p):
            p += 2
    raise RuntimeError("Galois scan exceeded the prime cap")
