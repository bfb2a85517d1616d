"""Local Dedekind zeta factors and weak arithmetic equivalence.

The local factor at a finite prime is determined by the multiset of
residue degrees; at the infinite place by the Gamma exponents (r1, r2).
s stays formal throughout: equality of factors is equality of those data,
and the equivalence test is the finite comparison over the union of the
ramified sets together with the infinite place.
"""

from __future__ import annotations

from dataclasses import dataclass

from nftrace.exact import InternalInvariantError
from nftrace.numberfield import NumberField
from nftrace.splitting import DecompositionType, decomposition_type, is_tame_field, ramified_primes


@dataclass(frozen=True)
class LocalLFactor:
    """Euler factor data: residue degrees for finite p, (r1, r2) at p = -1."""

    p: int
    fs: tuple[int, ...] | None
    gamma: tuple[int, int] | None

    def render(self) -> str:
        if self.p == -1:
            r1, r2 = self.gamma
            parts = []
            if r1:
                parts.append(f"GammaR(s)^{r1}" if r1 > 1 else "GammaR(s)")
            if r2:
                parts.append(f"GammaC(s)^{r2}" if r2 > 1 else "GammaC(s)")
            return " * ".join(parts)
        counts: dict[int, int] = {}
        for f in self.fs:
            counts[f] = counts.get(f, 0) + 1
        parts = []
        for f in sorted(counts):
            s = "s" if f == 1 else f"{f}s"
            parts.append(f"(1 - {self.p}^-{s})^-{counts[f]}")
        return " * ".join(parts)

    def __eq__(self, other):
        if not isinstance(other, LocalLFactor):
            return NotImplemented
        if self.p == -1 or other.p == -1:
            return self.p == other.p and self.gamma == other.gamma
        return self.p == other.p and sorted(self.fs) == sorted(other.fs)

    def __hash__(self):
        if self.p == -1:
            return hash((self.p, self.gamma))
        return hash((self.p, tuple(sorted(self.fs))))


def local_l_factor(K: NumberField, p: int) -> LocalLFactor:
    """The local factor of zeta_K at p (p = -1 for the Gamma factor)."""
    if p == -1:
        return LocalLFactor(-1, None, K.signature)
    dt = decomposition_type(K, p)  # validates primality
    return LocalLFactor(p, dt.fs, None)


@dataclass(frozen=True)
class WeakAEResult:
    """Verdict plus evidence for the weak-arithmetic-equivalence test."""

    equivalent: bool
    compared_places: tuple[int, ...]
    mismatch_place: int | None = None
    type_K: DecompositionType | None = None
    type_L: DecompositionType | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def weakly_equivalent(K: NumberField, L: NumberField) -> WeakAEResult:
    """Same degree and same decomposition type at every place of
    S_{K,L} union {-1}, where S_{K,L} is the union of the ramified sets.

    When the verdict is positive and both fields are tame, equality of
    discriminants is asserted afterwards (it is a theorem in that case).
    """
    if K.degree != L.degree:
        return WeakAEResult(
            False, (), reason=f"degrees differ: {K.degree} vs {L.degree}"
        )
    places = [-1] + sorted(ramified_primes(K) | ramified_primes(L))
    for p in places:
        tK = decomposition_type(K, p)
        tL = decomposition_type(L, p)
        if tK != tL:
            return WeakAEResult(
                False,
                tuple(places),
                mismatch_place=p,
                type_K=tK,
                type_L=tL,
                reason=f"decomposition types differ at p={p}: {tK} vs {tL}",
            )
    result = WeakAEResult(True, tuple(places))
    if is_tame_field(K) and is_tame_field(L) and K.disc != L.disc:
        raise InternalInvariantError(
            "tame weakly-equivalent fields with different discriminants"
        )
    return result
