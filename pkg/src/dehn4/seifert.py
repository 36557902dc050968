"""Seifert matrices and algebraic concordance obstructions.

A Seifert matrix is a square integer matrix V of even size 2g with
det(V - V^T) = 1 (V - V^T is then a unimodular skew form, the intersection
form of a genus-g surface with one boundary component).  This module
provides constructors for a small table of knots, the usual algebra
(mirror, reverse, connected sum, parallel cabling), and the obstruction
chain: signature, Alexander polynomial, Fox-Milnor factorization test,
and a three-valued sliceness verdict.

Sign conventions (documented, tests pin them down):
  * the right-handed trefoil torus_knot_seifert(2, 3) has signature -2;
  * signatures of positive torus knots are negative.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt

import sympy

from .exact import IntMatrix, block_diagonal, det, freeze, signature_symmetric, transpose
from .laurent import LaurentPoly, poly_det


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer Seifert matrix of even size 2g with det(V - V^T) = 1."""

    entries: IntMatrix

    def __post_init__(self):
        object.__setattr__(self, "entries", freeze(self.entries))
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("Seifert matrix must be square")
        if n % 2 != 0:
            raise ValueError(f"Seifert matrix must have even size, got {n}")
        skew = [
            [self.entries[i][j] - self.entries[j][i] for j in range(n)]
            for i in range(n)
        ]
        if det(skew) != 1:
            raise ValueError("det(V - V^T) must equal 1")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.entries) + "]"


def unknot() -> SeifertMatrix:
    """The empty (0x0) Seifert matrix of the unknot."""
    return SeifertMatrix(())


def torus_knot_seifert(p: int, q: int) -> SeifertMatrix:
    """Seifert matrix of the (p, q) torus knot on the fence basis.

    The surface is the Bennequin surface of the positive braid
    (s_1 ... s_{p-1})^q: p disks joined by q(p-1) bands.  The basis loops
    ("bricks") run through consecutive bands of one strand pair; brick
    (i, j) interacts only with its vertical neighbour (i, j+1) and the two
    interleaved bricks (i+1, j) and (i+1, j-1) on the next strand pair.
    The resulting matrix has size (p-1)(q-1) and the right-handed trefoil
    comes out as [[-1, 1], [0, -1]].

    Negative parameters with p*q < 0 give the mirror image; (-p, -q) gives
    the same knot as (p, q).
    """
    if gcd(abs(p), abs(q)) != 1:
        raise ValueError(f"torus knot parameters must be coprime, got ({p}, {q})")
    if abs(p) < 2 or abs(q) < 2:
        raise ValueError(f"torus knot parameters must have absolute value >= 2, got ({p}, {q})")
    mirrored = p * q < 0
    a, b = sorted((abs(p), abs(q)))
    v = _positive_torus_bricks(a, b)
    return mirror(v) if mirrored else v


def _positive_torus_bricks(p: int, q: int) -> SeifertMatrix:
    rows = q - 1
    n = (p - 1) * rows
    v = [[0] * n for _ in range(n)]

    def idx(i, j):
        return i * rows + j

    for i in range(p - 1):
        for j in range(rows):
            x = idx(i, j)
            v[x][x] = -1
            if j + 1 < rows:
                v[x][idx(i, j + 1)] = 1
            if i + 1 < p - 1:
                v[idx(i + 1, j)][x] = 1
                if j - 1 >= 0:
                    v[idx(i + 1, j - 1)][x] = -1
    return SeifertMatrix(freeze(v))


def twist_knot_seifert(m: int) -> SeifertMatrix:
    """Genus-1 matrix [[-1, 1], [0, m]] of the twist knot with m full twists.

    m = -1 is the right-handed trefoil, m = 1 the figure-eight,
    m = 2 the stevedore knot; m = 0 is a genus-1 surface for the unknot.
    """
    return SeifertMatrix(((-1, 1), (0, m)))


def whitehead_double_seifert(clasp: str) -> SeifertMatrix:
    """Untwisted Whitehead double with the given clasp sign ('+' or '-').

    The untwisted double's Seifert form does not see the companion knot,
    so its Alexander polynomial is 1 for either clasp.
    """
    if clasp not in ("+", "-"):
        raise ValueError(f"clasp must be '+' or '-', got {clasp!r}")
    c = -1 if clasp == "+" else 1
    return SeifertMatrix(((c, 1), (0, 0)))


def mirror(v: SeifertMatrix) -> SeifertMatrix:
    """Mirror image: -V^T."""
    t = transpose(v.entries)
    return SeifertMatrix(tuple(tuple(-x for x in row) for row in t))


def reverse(v: SeifertMatrix) -> SeifertMatrix:
    """Orientation reverse: V^T."""
    return SeifertMatrix(transpose(v.entries))


def concordance_inverse(v: SeifertMatrix) -> SeifertMatrix:
    """Reversed mirror -V, the inverse in algebraic concordance."""
    return SeifertMatrix(tuple(tuple(-x for x in row) for row in v.entries))


def connected_sum(v: SeifertMatrix, w: SeifertMatrix) -> SeifertMatrix:
    return SeifertMatrix(block_diagonal(v.entries, w.entries))


def parallel_cable(v: SeifertMatrix, n: int) -> SeifertMatrix:
    """Seifert matrix built from n parallel copies of the surface of V.

    The copies are stacked in the positive pushoff direction, banded into
    one surface: diagonal blocks V, blocks above the diagonal V, blocks
    below V^T.  The boundary winds n times along the original knot, so the
    Alexander polynomial is Delta_V(t^n) up to units.

    Negative n stacks |n| copies of the reversed surface (the curve runs
    backwards along the companion); the n = -1 cable is the reverse of V.
    """
    if n == 0:
        raise ValueError("parallel cable requires n != 0")
    base = v.entries if n > 0 else transpose(v.entries)
    k = abs(n)
    g2 = len(base)
    base_t = transpose(base)
    out = [[0] * (g2 * k) for _ in range(g2 * k)]
    for bi in range(k):
        for bj in range(k):
            blk = base if bi <= bj else base_t
            for i in range(g2):
                for j in range(g2):
                    out[bi * g2 + i][bj * g2 + j] = blk[i][j]
    return SeifertMatrix(freeze(out))


def signature(v: SeifertMatrix) -> int:
    """Signature of V + V^T, by exact congruence diagonalization."""
    n = v.size
    sym = [[v.entries[i][j] + v.entries[j][i] for j in range(n)] for i in range(n)]
    return signature_symmetric(sym)


def alexander_polynomial(v: SeifertMatrix) -> LaurentPoly:
    """Normalized Alexander polynomial det(V - t*V^T).

    The result is centered (Delta(t) = Delta(1/t)) with Delta(1) = 1.
    """
    n = v.size
    entries = [
        [LaurentPoly({0: v.entries[i][j], 1: -v.entries[j][i]}) for j in range(n)]
        for i in range(n)
    ]
    return poly_det(entries).normalized()


class FactorizationBoundError(ValueError):
    """Polynomial degree exceeds the configured Fox-Milnor search bound."""


@dataclass(frozen=True)
class FoxMilnorFailure:
    kind: str  # "determinant" or "factorization"
    detail: str
    determinant: int | None = None


@dataclass(frozen=True)
class FoxMilnorResult:
    passed: bool
    factor: LaurentPoly | None = None
    failure: FoxMilnorFailure | None = None


def fox_milnor(delta: LaurentPoly, degree_bound: int = 16) -> FoxMilnorResult:
    """Test whether delta(t) = f(t) * f(1/t) up to units, exactly.

    The quick witness is |delta(-1)|: it equals f(-1)^2, so a non-square
    determinant fails immediately.  Otherwise the
    polynomial is factored over Z and the irreducible factors must pair up
    with their reciprocals (self-reciprocal factors with even
    multiplicity).  Passing returns one valid f; failing returns the
    fastest witness found.

    Raises FactorizationBoundError when the polynomial degree exceeds
    degree_bound (an "out of configured range" error, distinct from a
    failed test).
    """
    norm = delta.normalized()
    if norm.span > degree_bound:
        raise FactorizationBoundError(
            f"polynomial degree {norm.span} exceeds bound {degree_bound}"
        )
    det_val = norm.evaluate(-1)
    det_int = abs(int(det_val))
    if isqrt(det_int) ** 2 != det_int:
        return FoxMilnorResult(
            passed=False,
            failure=FoxMilnorFailure(
                kind="determinant",
                detail=f"|Delta(-1)| = {det_int} is not a perfect square",
                determinant=det_int,
            ),
        )
    if norm.is_one():
        return FoxMilnorResult(passed=True, factor=LaurentPoly.one())

    t = sympy.Symbol("t")
    shifted = norm.shifted(-norm.min_exp)  # ordinary polynomial, nonzero constant term
    poly = sympy.Poly.from_dict({(e,): c for e, c in shifted.coeffs.items()}, t)
    content, factor_list = poly.factor_list()
    content = int(content)
    root = isqrt(abs(content))
    if root * root != abs(content):
        return FoxMilnorResult(
            passed=False,
            failure=FoxMilnorFailure(
                kind="factorization",
                detail=f"integer content {content} is not a square up to sign",
            ),
        )

    mults: dict[tuple[int, ...], int] = {}
    polys: dict[tuple[int, ...], sympy.Poly] = {}
    for g, e in factor_list:
        key = _poly_key(g)
        mults[key] = mults.get(key, 0) + e
        polys[key] = g

    f = LaurentPoly.term(root)
    seen: set[tuple[int, ...]] = set()
    for key, e in mults.items():
        if key in seen:
            continue
        g = polys[key]
        rkey = _reciprocal_key(key)
        glaur = _to_laurent(key)
        if rkey == key:
            if e % 2 != 0:
                return FoxMilnorResult(
                    passed=False,
                    failure=FoxMilnorFailure(
                        kind="factorization",
                        detail=(
                            f"self-reciprocal factor {sympy.sstr(g.as_expr())} "
                            f"has odd multiplicity {e}"
                        ),
                    ),
                )
            for _ in range(e // 2):
                f = f * glaur
            seen.add(key)
        else:
            if mults.get(rkey, 0) != e:
                return FoxMilnorResult(
                    passed=False,
                    failure=FoxMilnorFailure(
                        kind="factorization",
                        detail=(
                            f"factor {sympy.sstr(g.as_expr())} (multiplicity {e}) has no "
                            f"matching reciprocal factor"
                        ),
                    ),
                )
            for _ in range(e):
                f = f * glaur
            seen.add(key)
            seen.add(rkey)

    product = (f * f.reciprocal()).normalized()
    if product != norm:
        raise AssertionError("internal error: paired factorization does not reproduce Delta")
    return FoxMilnorResult(passed=True, factor=f)


def _poly_key(g: sympy.Poly) -> tuple[int, ...]:
    key = tuple(int(c) for c in g.all_coeffs())
    if key and key[0] < 0:
        key = tuple(-c for c in key)
    return key


def _reciprocal_key(key: tuple[int, ...]) -> tuple[int, ...]:
    rev = tuple(reversed(key))
    while rev and rev[0] == 0:
        rev = rev[1:]
    if rev and rev[0] < 0:
        rev = tuple(-c for c in rev)
    return rev


def _to_laurent(key: tuple[int, ...]) -> LaurentPoly:
    deg = len(key) - 1
    return LaurentPoly({deg - i: c for i, c in enumerate(key)})


class SliceTag(Enum):
    OBSTRUCTED_BY_SIGNATURE = "ObstructedBySignature"
    OBSTRUCTED_BY_FOX_MILNOR = "ObstructedByFoxMilnor"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SliceVerdict:
    """Outcome of the algebraic sliceness obstruction chain.

    Obstructed verdicts always carry a reproducible witness: the nonzero
    signature, or the Fox-Milnor failure.  Unknown never asserts
    sliceness.
    """

    tag: SliceTag
    signature: int | None = None
    fox_milnor: FoxMilnorResult | None = None
    note: str | None = None

    @property
    def obstructed(self) -> bool:
        return self.tag is not SliceTag.UNKNOWN


def algebraic_slice_verdict(v: SeifertMatrix, degree_bound: int = 16) -> SliceVerdict:
    """Signature first, then Fox-Milnor; Unknown when neither obstructs."""
    sig = signature(v)
    if sig != 0:
        return SliceVerdict(tag=SliceTag.OBSTRUCTED_BY_SIGNATURE, signature=sig)
    delta = alexander_polynomial(v)
    try:
        fm = fox_milnor(delta, degree_bound=degree_bound)
    except FactorizationBoundError as exc:
        return SliceVerdict(tag=SliceTag.UNKNOWN, signature=0, note=str(exc))
    if not fm.passed:
        return SliceVerdict(tag=SliceTag.OBSTRUCTED_BY_FOX_MILNOR, signature=0, fox_milnor=fm)
    return SliceVerdict(tag=SliceTag.UNKNOWN, signature=0, fox_milnor=fm)


@dataclass(frozen=True)
class Knot:
    """A named knot given by a Seifert matrix."""

    name: str
    matrix: SeifertMatrix


_NAMED_KNOTS = {
    "unknot": lambda: unknot(),
    "trefoil": lambda: torus_knot_seifert(2, 3),
    "right-trefoil": lambda: torus_knot_seifert(2, 3),
    "left-trefoil": lambda: mirror(torus_knot_seifert(2, 3)),
    "figure-eight": lambda: twist_knot_seifert(1),
    "stevedore": lambda: twist_knot_seifert(2),
    "whitehead-double-positive": lambda: whitehead_double_seifert("+"),
    "whitehead-double-negative": lambda: whitehead_double_seifert("-"),
}


def knot_names() -> tuple[str, ...]:
    return tuple(sorted(_NAMED_KNOTS))


def knot_from_spec(spec) -> Knot:
    """Build a knot from a name or a JSON-style specification.

    Accepted forms:
      "trefoil"                        built-in name (see knot_names())
      {"name": "trefoil"}              same, as an object
      {"torus": [p, q]}                torus knot
      {"twist": m}                     twist knot
      {"whitehead": "+"}               untwisted Whitehead double
      {"seifert": [[...], ...]}        explicit Seifert matrix,
                                       optional "name" label
    A string that parses as JSON is treated as the object form.
    """
    if isinstance(spec, Knot):
        return spec
    if isinstance(spec, str):
        stripped = spec.strip()
        if stripped.startswith("{"):
            try:
                return knot_from_spec(json.loads(stripped))
            except json.JSONDecodeError as exc:
                raise ValueError(f"invalid knot JSON: {exc}") from exc
        if stripped in _NAMED_KNOTS:
            return Knot(stripped, _NAMED_KNOTS[stripped]())
        raise ValueError(
            f"unknown knot name {stripped!r}; known names: {', '.join(knot_names())}"
        )
    if not isinstance(spec, dict):
        raise ValueError(f"cannot interpret knot spec of type {type(spec).__name__}")
    keys = set(spec) - {"name"}
    if keys == set() and "name" in spec:
        return knot_from_spec(spec["name"])
    if keys == {"torus"}:
        p, q = spec["torus"]
        return Knot(spec.get("name", f"torus({p},{q})"), torus_knot_seifert(int(p), int(q)))
    if keys == {"twist"}:
        m = int(spec["twist"])
        return Knot(spec.get("name", f"twist({m})"), twist_knot_seifert(m))
    if keys == {"whitehead"}:
        clasp = spec["whitehead"]
        return Knot(
            spec.get("name", f"whitehead-double({clasp})"), whitehead_double_seifert(clasp)
        )
    if keys == {"seifert"}:
        matrix = SeifertMatrix(freeze(spec["seifert"]))
        return Knot(spec.get("name", "custom"), matrix)
    raise ValueError(f"unrecognized knot spec fields: {sorted(keys)}")
