"""Arithmetic of symmetric unimodular integer forms.

Covers the pieces the smooth-ball obstruction needs: parity, exact
signature, classification of indefinite even unimodular forms as
a*E8 + b*H, enumeration of splittings of an even class constrained by
signature congruences mod 16 (the Rokhlin constraint for spin fillings of
homology spheres), and the quadratic-residue criterion for a lens space to
bound a simply connected topological 4-manifold with second Betti number
one.

E8 is stored positive definite (signature +8); orientation reversal is
negation.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from sympy.ntheory import sqrt_mod

from .exact import IntMatrix, block_diagonal, det, freeze, is_symmetric, signature_symmetric


@dataclass(frozen=True)
class SymUnimodularForm:
    """Symmetric integer matrix with determinant +-1 (rank 0 allowed)."""

    entries: IntMatrix

    def __post_init__(self):
        object.__setattr__(self, "entries", freeze(self.entries))
        if not is_symmetric(self.entries):
            raise ValueError("form matrix must be symmetric")
        if self.entries and abs(det(self.entries)) != 1:
            raise ValueError("form matrix must be unimodular")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def direct_sum(self, other: "SymUnimodularForm") -> "SymUnimodularForm":
        return SymUnimodularForm(block_diagonal(self.entries, other.entries))

    def negated(self) -> "SymUnimodularForm":
        return SymUnimodularForm(tuple(tuple(-x for x in row) for row in self.entries))


_E8_ROWS = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)


def e8_form() -> SymUnimodularForm:
    """The positive definite even rank-8 form (Cartan matrix of E8)."""
    return SymUnimodularForm(_E8_ROWS)


def hyperbolic_form() -> SymUnimodularForm:
    """H = [[0, 1], [1, 0]]."""
    return SymUnimodularForm(((0, 1), (1, 0)))


def zero_form() -> SymUnimodularForm:
    return SymUnimodularForm(())


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


def parity(q: SymUnimodularForm) -> Parity:
    """Even iff every diagonal entry is even (the spin condition)."""
    n = q.rank
    if all(q.entries[i][i] % 2 == 0 for i in range(n)):
        return Parity.EVEN
    return Parity.ODD


def exact_signature(q: SymUnimodularForm) -> int:
    return signature_symmetric(q.entries)


@dataclass(frozen=True)
class EvenFormClass:
    """Isomorphism class a*E8 + b*H of an indefinite (or zero) even form.

    e8_count is signed: its sign is the sign of the signature.  h_count is
    the number of hyperbolic summands.
    """

    e8_count: int
    h_count: int

    def __post_init__(self):
        if self.h_count < 0:
            raise ValueError("h_count must be nonnegative")

    @property
    def rank(self) -> int:
        return 8 * abs(self.e8_count) + 2 * self.h_count

    @property
    def signature(self) -> int:
        return 8 * self.e8_count

    def matrix(self) -> SymUnimodularForm:
        """An explicit block-sum representative of this class."""
        e8 = e8_form() if self.e8_count >= 0 else e8_form().negated()
        form = zero_form()
        for _ in range(abs(self.e8_count)):
            form = form.direct_sum(e8)
        for _ in range(self.h_count):
            form = form.direct_sum(hyperbolic_form())
        return form

    def __str__(self) -> str:
        parts = []
        if self.e8_count:
            sign = "-" if self.e8_count < 0 else ""
            mult = f"{abs(self.e8_count)}*" if abs(self.e8_count) != 1 else ""
            parts.append(f"{mult}{sign}E8")
        if self.h_count:
            mult = f"{self.h_count}*" if self.h_count != 1 else ""
            parts.append(f"{mult}H")
        return " + ".join(parts) if parts else "0"


def classify_indefinite_even(q: SymUnimodularForm) -> EvenFormClass:
    """The unique a*E8 + b*H class with matching rank and signature.

    Only valid for even forms that are indefinite or of rank zero (the
    classification theorem for indefinite even unimodular forms); odd or
    definite nonzero input raises ValueError.
    """
    if parity(q) is not Parity.EVEN:
        raise ValueError("classification applies to even forms only")
    if q.rank == 0:
        return EvenFormClass(0, 0)
    sig = exact_signature(q)
    if abs(sig) == q.rank:
        raise ValueError(
            "form is definite; the indefinite classification does not apply"
        )
    if sig % 8 != 0:
        raise AssertionError("even unimodular form with signature not divisible by 8")
    e8 = sig // 8
    h, rem = divmod(q.rank - 8 * abs(e8), 2)
    if rem or h <= 0:
        raise AssertionError("rank/signature mismatch for an even unimodular form")
    return EvenFormClass(e8, h)


@dataclass(frozen=True)
class SignatureCongruence:
    """A constraint sigma == residue (mod modulus) on a side's signature."""

    residue: int
    modulus: int = 16

    def admits(self, sig: int) -> bool:
        return (sig - self.residue) % self.modulus == 0

    def __str__(self) -> str:
        return f"sigma == {self.residue} (mod {self.modulus})"


def rohlin_constraint(rho: int) -> SignatureCongruence:
    """Signature congruence mod 16 for even forms bounded by a homology
    sphere with the given Rokhlin invariant (0 or 1)."""
    if rho not in (0, 1):
        raise ValueError("Rokhlin invariant must be 0 or 1")
    return SignatureCongruence(residue=8 * rho, modulus=16)


def enumerate_even_splittings(
    total: EvenFormClass,
    side1: SignatureCongruence | None = None,
    side2: SignatureCongruence | None = None,
) -> tuple[tuple[EvenFormClass, EvenFormClass], ...]:
    """All ordered pairs of even classes summing to `total` in rank and
    signature and satisfying the per-side congruences.

    An empty result means the splitting is obstructed.
    """
    out = []
    rank = total.rank
    for e1 in range(-(rank // 8), rank // 8 + 1):
        e2 = total.e8_count - e1
        hsum2 = rank - 8 * abs(e1) - 8 * abs(e2)
        if hsum2 < 0 or hsum2 % 2 != 0:
            continue
        hsum = hsum2 // 2
        if side1 is not None and not side1.admits(8 * e1):
            continue
        if side2 is not None and not side2.admits(8 * e2):
            continue
        for h1 in range(hsum + 1):
            out.append((EvenFormClass(e1, h1), EvenFormClass(e2, hsum - h1)))
    out.sort(key=lambda pair: (pair[0].e8_count, pair[0].h_count))
    return tuple(out)


def quadratic_residues(p: int) -> tuple[int, ...]:
    """The nonzero squares mod p, sorted (used as the report witness set)."""
    return tuple(sorted({(k * k) % p for k in range(1, p)} - {0}))


def lens_qr_bounding(p: int, q: int) -> bool:
    """Whether L(p, q) bounds a simply connected topological 4-manifold
    with b2 = 1: true iff +q or -q is a quadratic residue mod p.

    Uses modular square roots (composite moduli included); the exhaustive
    search over k in [0, p) lives in the test suite as the oracle.
    """
    if p < 2:
        raise ValueError("lens space parameter p must be at least 2")
    if not 0 < q < p:
        raise ValueError("lens space parameter q must satisfy 0 < q < p")
    if gcd(p, q) != 1:
        raise ValueError("lens space parameters must be coprime")
    return (
        sqrt_mod(q, p, all_roots=False) is not None
        or sqrt_mod(p - q, p, all_roots=False) is not None
    )
