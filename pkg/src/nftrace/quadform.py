"""Rational and p-adic invariants of integral quadratic forms.

Hasse-Witt invariants use the strict i < j product convention
h_p = prod_{i<j} (a_i, a_j)_p over a rational diagonalization; the odd-p
Jordan decomposition diagonalizes over the local ring at p by always
pivoting on an entry of minimal p-valuation, so tame trace forms come out
with valuations in {0, 1} only.  Unit square classes are abstract
(square / nonsquare) and displayed with the least positive nonresidue.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from nftrace.exact import (
    InternalInvariantError,
    factor_integer,
    is_prime,
    legendre,
    squarefree_part,
)
from nftrace.numberfield import GramMatrix, NumberField, trace_gram
from nftrace.splitting import is_tame_field, ramified_primes


@dataclass(frozen=True)
class DiagonalForm:
    """Diagonal quadratic form <a_1, ..., a_n> over Q, all entries nonzero."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if any(not e for e in self.entries):
            raise ValueError("diagonal entries must be nonzero")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def signature(self) -> tuple[int, int]:
        pos = sum(1 for e in self.entries if e > 0)
        return pos, len(self.entries) - pos

    def det_square_class(self) -> int:
        num = 1
        for e in self.entries:
            num *= e.numerator * e.denominator
        return squarefree_part(num)

    def __str__(self) -> str:
        return "<" + ",".join(str(e) for e in self.entries) + ">"


def _as_matrix(G) -> list[list[Fraction]]:
    entries = G.entries if isinstance(G, GramMatrix) else G
    M = [[Fraction(a) for a in row] for row in entries]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(n):
            if M[i][j] != M[j][i]:
                raise ValueError("matrix is not symmetric")
    return M


def diagonalize_rational(G) -> DiagonalForm:
    """Congruent diagonal form over Q by symmetric elimination.

    A vanishing pivot is repaired by adding a row+column with a nonzero
    diagonal or off-diagonal entry; total failure means G is singular.
    """
    M = _as_matrix(G)
    n = len(M)
    for k in range(n):
        if not M[k][k]:
            fixed = False
            for l in range(k + 1, n):
                if M[l][l]:
                    _swap_sym(M, k, l)
                    fixed = True
                    break
            if not fixed:
                for l in range(k + 1, n):
                    if M[k][l]:
                        _add_sym(M, k, l)
                        fixed = True
                        break
            if not fixed:
                raise ValueError("matrix is singular")
        piv = M[k][k]
        for i in range(k + 1, n):
            if M[i][k]:
                c = M[i][k] / piv
                for j in range(n):
                    M[i][j] -= c * M[k][j]
                for j in range(n):
                    M[j][i] -= c * M[j][k]
    diag = [M[i][i] for i in range(n)]
    if any(not d for d in diag):
        raise ValueError("matrix is singular")
    return DiagonalForm(tuple(diag))


def _swap_sym(M, i, j):
    M[i], M[j] = M[j], M[i]
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_sym(M, i, j):
    for c in range(len(M)):
        M[i][c] += M[j][c]
    for r in range(len(M)):
        M[r][i] += M[r][j]


# ----------------------------------------------------------------------
# Hilbert symbols and Hasse invariants
# ----------------------------------------------------------------------


def _square_class_int(a) -> int:
    a = Fraction(a)
    if not a:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    return a.numerator * a.denominator


def _split_val(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a, b, p: int) -> int:
    """(a, b)_p: +1 iff z^2 = a x^2 + b y^2 has a nontrivial p-adic
    solution; p is a finite prime, 2, or -1 for the real place."""
    ai = _square_class_int(a)
    bi = _square_class_int(b)
    if p == -1:
        return -1 if ai < 0 and bi < 0 else 1
    if p == 2:
        alpha, u = _split_val(ai, 2)
        beta, v = _split_val(bi, 2)
        eps_u, eps_v = (u - 1) // 2 % 2, (v - 1) // 2 % 2
        om_u, om_v = (u * u - 1) // 8 % 2, (v * v - 1) // 8 % 2
        expo = eps_u * eps_v + alpha * om_v + beta * om_u
        return -1 if expo % 2 else 1
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not a prime, 2 or -1")
    alpha, u = _split_val(ai, p)
    beta, v = _split_val(bi, p)
    eps_p = (p - 1) // 2 % 2
    out = 1
    if alpha % 2 and beta % 2 and eps_p:
        out = -out
    if beta % 2 and legendre(u, p) == -1:
        out = -out
    if alpha % 2 and legendre(v, p) == -1:
        out = -out
    return out


def hasse_invariant(d: DiagonalForm, p: int) -> int:
    """h_p = prod over i < j of (a_i, a_j)_p."""
    out = 1
    es = d.entries
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            out *= hilbert_symbol(es[i], es[j], p)
    return out


@dataclass
class HasseProfile:
    """Hasse invariants over the support plus signature and det class."""

    values: dict[int, int]
    det_square_class: int
    signature: tuple[int, int]

    def at(self, p: int) -> int:
        return self.values.get(p, 1)

    def product(self) -> int:
        out = 1
        for v in self.values.values():
            out *= v
        return out


def hasse_profile(d: DiagonalForm) -> HasseProfile:
    """Invariants over {-1, 2} and every odd prime in the support."""
    support = {-1, 2}
    for e in d.entries:
        for q, _ in factor_integer(e.numerator * e.denominator):
            if q > 2:
                support.add(q)
    values = {p: hasse_invariant(d, p) for p in sorted(support)}
    prof = HasseProfile(values, d.det_square_class(), d.signature())
    if prof.product() != 1:
        raise InternalInvariantError("Hilbert reciprocity fails for Hasse profile")
    return prof


def rational_equivalent(G1, G2) -> bool:
    """Hasse-Minkowski: same dimension, signature, det class and h_p."""
    d1 = G1 if isinstance(G1, DiagonalForm) else diagonalize_rational(G1)
    d2 = G2 if isinstance(G2, DiagonalForm) else diagonalize_rational(G2)
    if d1.dimension != d2.dimension:
        return False
    if d1.signature() != d2.signature():
        return False
    if d1.det_square_class() != d2.det_square_class():
        return False
    p1, p2 = hasse_profile(d1), hasse_profile(d2)
    for p in sorted(set(p1.values) | set(p2.values)):
        if p1.at(p) != p2.at(p):
            return False
    return True


# ----------------------------------------------------------------------
# odd-p Jordan decomposition
# ----------------------------------------------------------------------

SQUARE = "square"
NONSQUARE = "nonsquare"


@dataclass(frozen=True)
class JordanForm:
    """Odd-p Jordan data: p^v-scaled unimodular blocks with unit classes.

    For tame trace forms the valuations are only 0 and 1: an f-dimensional
    unimodular block of class alpha and a p-scaled block of class beta;
    anything deeper lands in higher_blocks.
    """

    p: int
    unimodular_dim: int
    unimodular_class: str
    p_part_dim: int
    p_part_class: str
    higher_blocks: tuple[tuple[int, int, str], ...] = ()

    @property
    def dimension(self) -> int:
        return (
            self.unimodular_dim
            + self.p_part_dim
            + sum(d for _, d, _ in self.higher_blocks)
        )

    def blocks(self) -> list[tuple[int, int, str]]:
        out = []
        if self.unimodular_dim:
            out.append((0, self.unimodular_dim, self.unimodular_class))
        if self.p_part_dim:
            out.append((1, self.p_part_dim, self.p_part_class))
        out.extend(self.higher_blocks)
        return out

    def _unit_entries(self, dim: int, cls: str) -> list[int]:
        r = least_nonresidue(self.p)
        return [1] * (dim - 1) + [1 if cls == SQUARE else r]

    def display(self) -> str:
        parts = []
        for v, dim, cls in self.blocks():
            body = "<" + ",".join(str(c) for c in self._unit_entries(dim, cls)) + ">"
            if v == 0:
                parts.append(body)
            elif v == 1:
                parts.append(f"{self.p}{body}")
            else:
                parts.append(f"{self.p}^{v}{body}")
        return " (+) ".join(parts)

    def flattened(self) -> str:
        out = []
        for v, dim, cls in self.blocks():
            scale = self.p**v
            out.extend(scale * c for c in self._unit_entries(dim, cls))
        return "<" + ",".join(str(c) for c in out) + ">"

    def diagonal_form(self) -> DiagonalForm:
        out = []
        for v, dim, cls in self.blocks():
            scale = self.p**v
            out.extend(Fraction(scale * c) for c in self._unit_entries(dim, cls))
        return DiagonalForm(tuple(out))


def least_nonresidue(p: int) -> int:
    """Smallest positive quadratic nonresidue mod an odd prime."""
    for r in range(2, p):
        if legendre(r, p) == -1:
            return r
    raise ValueError("no nonresidue found")


def _vp_fraction(x: Fraction, p: int) -> int:
    v, _ = _split_val(x.numerator, p)
    w, _ = _split_val(x.denominator, p)
    return v - w


def _unit_part_mod_p(x: Fraction, p: int) -> int:
    _, nu = _split_val(x.numerator, p)
    _, de = _split_val(x.denominator, p)
    return nu * de  # p-free integer in the square class of the unit part


def jordan_form_odd(G, p: int) -> JordanForm:
    """Jordan decomposition of the form over Z_p, p odd.

    Diagonalizes with minimal-valuation pivots (ties broken by position:
    diagonal first, then row order) so every division keeps entries
    p-integral; groups the diagonal by valuation and reduces each block's
    unit product to its Legendre class.
    """
    if p == 2:
        raise ValueError("dyadic Jordan decomposition is not supported")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    M = _as_matrix(G)
    n = len(M)
    for k in range(n):
        # locate minimal-valuation entry in the trailing block
        best = None  # (valuation, not-diagonal, i, j)
        for i in range(k, n):
            for j in range(i, n):
                if M[i][j]:
                    key = (_vp_fraction(M[i][j], p), i != j, i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            raise ValueError("matrix is singular")
        _, offdiag, i, j = best
        if offdiag:
            _add_sym(M, i, j)  # valuation of M[i][i] now equals the minimum
        if i != k:
            _swap_sym(M, k, i)
        piv = M[k][k]
        for r in range(k + 1, n):
            if M[r][k]:
                c = M[r][k] / piv
                for t in range(n):
                    M[r][t] -= c * M[k][t]
                for t in range(n):
                    M[t][r] -= c * M[t][k]
    blocks: dict[int, list[Fraction]] = {}
    for i in range(n):
        d = M[i][i]
        if not d:
            raise ValueError("matrix is singular")
        blocks.setdefault(_vp_fraction(d, p), []).append(d)
    classes = {}
    for v, ds in blocks.items():
        u = 1
        for d in ds:
            u *= _unit_part_mod_p(d, p)
        classes[v] = SQUARE if legendre(u, p) == 1 else NONSQUARE
    uni = blocks.get(0, [])
    ppart = blocks.get(1, [])
    higher = tuple(
        (v, len(blocks[v]), classes[v]) for v in sorted(blocks) if v >= 2
    )
    if any(v < 0 for v in blocks):
        raise InternalInvariantError("negative valuation in integral Jordan form")
    return JordanForm(
        p,
        len(uni),
        classes.get(0, SQUARE),
        len(ppart),
        classes.get(1, SQUARE),
        higher,
    )


# ----------------------------------------------------------------------
# trace-form genus comparison
# ----------------------------------------------------------------------


def trace_form_diagonal(K: NumberField) -> DiagonalForm:
    """Rational diagonalization of the integral trace form, cached."""
    cached = K.__dict__.get("_trace_diag")
    if cached is None:
        cached = diagonalize_rational(trace_gram(K))
        K.__dict__["_trace_diag"] = cached
    return cached


def trace_hasse(K: NumberField, p: int) -> int:
    """h_p of the trace form of K."""
    return hasse_invariant(trace_form_diagonal(K), p)


@dataclass(frozen=True)
class GenusComparison:
    """Outcome of the tame genus test, with per-prime Hasse evidence."""

    applicable: bool
    failed_hypothesis: str | None
    equal: bool | None
    per_prime: tuple[tuple[int, int, int], ...] = ()  # (p, h_p(K), h_p(L))

    def __bool__(self) -> bool:
        return bool(self.equal)


def same_genus_trace(K: NumberField, L: NumberField) -> GenusComparison:
    """Genus equality of the integral trace forms via Hasse invariants.

    Valid for tame fields of equal discriminant and signature; any failed
    hypothesis is reported rather than silently ignored.  Under the
    hypotheses the genus agrees iff h_p matches at every odd prime, and
    the only candidates are the odd divisors of the discriminant.
    """
    if K.disc != L.disc:
        return GenusComparison(False, "equal discriminants", None)
    if K.signature != L.signature:
        return GenusComparison(False, "equal signatures", None)
    if not (is_tame_field(K) and is_tame_field(L)):
        return GenusComparison(False, "tame ramification", None)
    evidence = []
    equal = True
    for p in sorted(ramified_primes(K)):
        if p == 2:
            continue
        hK = trace_hasse(K, p)
        hL = trace_hasse(L, p)
        evidence.append((p, hK, hL))
        if hK != hL:
            equal = False
    return GenusComparison(True, None, equal, tuple(evidence))
