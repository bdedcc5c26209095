"""
Linear systems on the lattice model: (-2)-classes, isotropic classes,
nefness and base-point-freeness of ``L``, and a cohomology ledger.

The ledger never guesses. Each value is :class:`Exact`, :class:`AtLeast` or
:class:`Unknown`, and each profile carries a tag naming the rule that
produced it. Downstream searches rely only on what the ledger certifies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .errors import VerificationError
from .lattice import (
    E_CLASS,
    L_CLASS,
    ZERO,
    DivisorClass,
    SurfaceModel,
    chi,
    pair,
    self_int,
)

__all__ = [
    "Exact",
    "AtLeast",
    "Unknown",
    "UNKNOWN",
    "CohomologyValue",
    "CohomologyProfile",
    "RestrictionProfile",
    "Side",
    "NefCertificate",
    "BpfCertificate",
    "root_classes",
    "isotropic_rays",
    "isotropic_classes_of_degree",
    "hyperelliptic_pencils",
    "check_L_nef",
    "check_L_bpf",
    "effective_side",
    "h_profile",
    "restriction_profile",
]


@dataclass(frozen=True)
class Exact:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"cohomology dimension must be >= 0, got {self.value}")

    @property
    def lower(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"={self.value}"


@dataclass(frozen=True)
class AtLeast:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"lower bound must be >= 0, got {self.value}")

    @property
    def lower(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f">={self.value}"


@dataclass(frozen=True)
class Unknown:
    @property
    def lower(self) -> int:
        return 0

    def __str__(self) -> str:
        return "?"


UNKNOWN = Unknown()
CohomologyValue = Union[Exact, AtLeast, Unknown]


def _bound(n: int) -> CohomologyValue:
    return AtLeast(n) if n > 0 else UNKNOWN


def _tightest(a: CohomologyValue, b: CohomologyValue) -> CohomologyValue:
    """Merge two sound statements about the same dimension."""
    if isinstance(a, Exact) and isinstance(b, Exact):
        if a.value != b.value:
            raise VerificationError(f"ledger conflict: {a} vs {b}")
        return a
    if isinstance(b, Exact):
        a, b = b, a
    if isinstance(a, Exact):
        if b.lower > a.value:
            raise VerificationError(f"ledger conflict: {a} vs {b}")
        return a
    return _bound(max(a.lower, b.lower))


@dataclass(frozen=True)
class CohomologyProfile:
    h0: CohomologyValue
    h1: CohomologyValue
    h2: CohomologyValue
    rule: str
    chi: int

    def __post_init__(self):
        vals = (self.h0, self.h1, self.h2)
        if all(isinstance(v, Exact) for v in vals):
            if self.h0.value - self.h1.value + self.h2.value != self.chi:
                raise VerificationError(f"profile {self} violates Riemann-Roch")

    def is_exact(self) -> bool:
        return all(isinstance(v, Exact) for v in (self.h0, self.h1, self.h2))

    def dual(self, rule: str) -> CohomologyProfile:
        """Profile of ``-D`` given this profile of ``D`` (Serre duality, K_S = 0)."""
        return CohomologyProfile(self.h2, self.h1, self.h0, rule, self.chi)


class Side(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class NefCertificate:
    holds: Optional[bool]  # None means undecided
    evidence: tuple[tuple[DivisorClass, Side, int, int], ...]  # (root, side, B.L, B.E)
    method: str = "exact-root-set"


@dataclass(frozen=True)
class BpfCertificate:
    holds: bool
    obstructions: tuple[DivisorClass, ...]
    method: str
    branches: tuple[str, ...] = ()

    def __post_init__(self):
        if self.holds != (not self.obstructions):
            raise VerificationError("holds must be equivalent to an empty obstruction list")


# --- Diophantine enumeration ------------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [k for k in range(1, int(n**0.5) + 1) if n % k == 0]
    ds = sorted(set(small + [n // k for k in small]))
    return ds + [-k for k in ds]


def root_classes(S: SurfaceModel) -> list[DivisorClass]:
    """All classes with self-intersection -2.

    ``B^2 = 2x((g-1)x + dy)``, so ``B^2 = -2`` means ``x`` times
    ``(g-1)x + dy`` equals -1. Each factorization is solved for ``y``.
    """
    g, d = S.genus, S.degree
    out = []
    for x in _divisors(-1):
        rest = -1 // x  # (g-1)x + dy
        num = rest - (g - 1) * x
        if num % d == 0:
            out.append(DivisorClass(x, num // d))
    out.sort(key=lambda B: (-B.x, B.y))
    return out


def isotropic_rays(S: SurfaceModel) -> tuple[DivisorClass, DivisorClass]:
    """Primitive generators of the two isotropic lines, oriented towards ``L``.

    ``B^2 = 0`` splits into ``x = 0`` or ``(g-1)x + dy = 0``; every isotropic
    class is an integer multiple of one of the returned classes.
    """
    g, d = S.genus, S.degree
    k = gcd(d, g - 1)
    other = DivisorClass(d // k, -(g - 1) // k)
    return E_CLASS, other


def isotropic_classes_of_degree(S: SurfaceModel, n: int) -> list[DivisorClass]:
    """Every class ``B`` with ``B^2 = 0`` and ``B.L = n``, solved branch by branch."""
    return _isotropic_degree_branches(S, n)[0]


def _isotropic_degree_branches(S: SurfaceModel, n: int):
    g, d = S.genus, S.degree
    found: list[DivisorClass] = []
    notes = []
    # branch x = 0: B.L = d*y
    if n % d == 0:
        found.append(DivisorClass(0, n // d))
        notes.append(f"x=0: d*y={n} solved by y={n // d}")
    else:
        notes.append(f"x=0: d*y={n} has no integer solution since {d} does not divide {n}")
    # branch (g-1)x = -dy: B.L = 2(g-1)x + dy = (g-1)x
    if n % (g - 1) == 0 and (-n) % d == 0:
        B = DivisorClass(n // (g - 1), -n // d)
        if B not in found:
            found.append(B)
        notes.append(f"(g-1)x=-dy: (g-1)x={n} solved by {B}")
    elif n % (g - 1) != 0:
        notes.append(f"(g-1)x=-dy: (g-1)x={n} has no integer solution since {g - 1} does not divide {n}")
    else:
        notes.append(f"(g-1)x=-dy: x={n // (g - 1)} but d*y={-n} is not solvable")
    return found, tuple(notes)


def hyperelliptic_pencils(S: SurfaceModel) -> list[DivisorClass]:
    """Elliptic classes cutting a g^1_2 on curves in ``|L|``.

    By Saint-Donat, for ``L`` base point free with ``L^2 >= 4`` the smooth
    curves in ``|L|`` are hyperelliptic iff there is ``B`` with ``B^2 = 0`` and
    ``B.L = 2``, or ``L = 2B`` with ``B^2 = 2``. The second case cannot occur
    because ``L`` is primitive in this basis.
    """
    return isotropic_classes_of_degree(S, 2)


# --- effectivity and nefness ------------------------------------------------


def effective_side(S: SurfaceModel, D: DivisorClass) -> Side:
    """Which of ``D`` and ``-D`` is effective.

    For ``D^2 >= -2`` Riemann-Roch gives ``h0(D) + h0(-D) >= 2 > 0``, and only one
    side can be effective when ``D != 0``. Pairing with the nef and big class
    ``L`` decides which one.
    """
    if D.is_zero():
        raise ValueError("effective_side is undefined for the zero class")
    if self_int(S, D) < -2:
        return Side.UNKNOWN
    dl = pair(S, D, L_CLASS)
    if dl > 0:
        return Side.POSITIVE
    if dl < 0:
        return Side.NEGATIVE
    return Side.UNKNOWN


def check_L_nef(S: SurfaceModel) -> NefCertificate:
    """``L.B >= 0`` for every effective (-2)-class ``B``.

    In rank 2 the effective cone is spanned by ``E`` and either the effective
    root or the second isotropic ray, so the root set is the whole check.
    Each root's side is also compared against ``E``, which is nef because it
    is an irreducible curve of self-intersection 0.
    """
    evidence = []
    holds: Optional[bool] = True
    for B in root_classes(S):
        side = effective_side(S, B)
        if side is Side.UNKNOWN:
            holds = None
            evidence.append((B, side, pair(S, B, L_CLASS), pair(S, B, E_CLASS)))
            continue
        eff = B if side is Side.POSITIVE else -B
        bl, be = pair(S, eff, L_CLASS), pair(S, eff, E_CLASS)
        if be < 0:
            raise VerificationError(f"effective root {eff} has negative degree on the nef class E")
        if bl < 0 and holds is not None:
            holds = False
        evidence.append((eff, side, bl, be))
    # each root shows up with both signs; keep the effective one once
    seen = {}
    for item in evidence:
        seen.setdefault(item[0], item)
    return NefCertificate(holds, tuple(seen.values()))


def check_L_bpf(S: SurfaceModel) -> BpfCertificate:
    """Base-point-freeness of ``|L|``.

    On a K3 surface a nef ``L`` with ``L^2 >= 4`` fails to be base point free
    exactly when some ``B`` has ``B^2 = 0`` and ``B.L = 1``. Both branches of
    ``B^2 = 0`` are solved exactly.
    """
    found, notes = _isotropic_degree_branches(S, 1)
    return BpfCertificate(
        holds=not found,
        obstructions=tuple(found),
        method="exact-diophantine",
        branches=notes,
    )


# --- cohomology ledger ------------------------------------------------------


def h_profile(S: SurfaceModel, D: DivisorClass) -> CohomologyProfile:
    """Best cohomology profile of ``O_S(D)`` derivable from the recorded rules."""
    g, d = S.genus, S.degree
    c = chi(S, D)
    if D.is_zero():
        return CohomologyProfile(Exact(1), Exact(0), Exact(1), "trivial: O_S of a K3 surface", c)
    if D.x == 0 and D.y >= 1:
        y = D.y
        return CohomologyProfile(
            Exact(y + 1),
            Exact(y - 1),
            Exact(0),
            "elliptic-multiple: h1(yE) = y-1 (Saint-Donat); h2 = 0 by Serre duality; h0 from chi = 2",
            c,
        )
    if D == L_CLASS:
        return CohomologyProfile(
            Exact(g + 1),
            Exact(0),
            Exact(0),
            "nef-big: h1(L) = h2(L) = 0 for L nef and big (standard vanishing, imported); h0 = chi = g+1",
            c,
        )
    side = effective_side(S, D)
    if side is Side.NEGATIVE:
        dual = h_profile(S, -D)
        return CohomologyProfile(
            Exact(0),
            dual.h1,
            _tightest(dual.h0, AtLeast(1)),
            f"serre-dual: -D effective so h0(D) = 0; h^i(D) = h^(2-i)(-D) from [{dual.rule}]",
            c,
        )
    if side is Side.POSITIVE:
        h0: CohomologyValue = _bound(max(c, 1))
        rule = "riemann-roch-bound: D effective so h2 = 0 and h0 >= chi"
        if D == L_CLASS - E_CLASS and g >= 4 and d <= (g + 3) // 2:
            h0 = _tightest(h0, AtLeast(2))
            rule = "L-minus-E: h2 = 0 since (E-L).L < 0; h0 >= chi(L-E) = g+1-d and h0 >= 2 for g >= 4"
        return CohomologyProfile(h0, UNKNOWN, Exact(0), rule, c)
    return CohomologyProfile(UNKNOWN, UNKNOWN, UNKNOWN, "unknown: effective side undecided", c)


@dataclass(frozen=True)
class RestrictionProfile:
    """Cohomology of ``O_C(D)`` for a smooth curve ``C`` in ``|L|``."""

    h0: CohomologyValue
    h1: CohomologyValue
    degree: int
    rules: tuple[str, ...]

    def __iter__(self):
        return iter((self.h0, self.h1, self.degree))


def _les_bounds(S: SurfaceModel, D: DivisorClass) -> tuple[CohomologyValue, CohomologyValue, list[str]]:
    """Read h0 and h1 of ``O_C(D)`` off ``0 -> O(D-L) -> O(D) -> O_C(D) -> 0``."""
    pd, pdl = h_profile(S, D), h_profile(S, D - L_CLASS)
    rules = []
    # 0 -> H0(D-L) -> H0(D) -> H0(O_C(D)) -> H1(D-L) -> H1(D)
    h0c: CohomologyValue = UNKNOWN
    if isinstance(pdl.h0, Exact):
        lower = pd.h0.lower - pdl.h0.value
        if pdl.h0.value == 0 and pdl.h1 == Exact(0) and isinstance(pd.h0, Exact):
            h0c = Exact(pd.h0.value)
            rules.append("h0(O_C(D)) = h0(D) since h0(D-L) = h1(D-L) = 0")
        else:
            h0c = _bound(lower)
            if lower > 0:
                rules.append("h0(O_C(D)) >= h0(D) - h0(D-L)")
    # H1(D) -> H1(O_C(D)) -> H2(D-L) -> H2(D) -> 0
    h1c: CohomologyValue = UNKNOWN
    if pd.h1 == Exact(0) and isinstance(pd.h2, Exact):
        if isinstance(pdl.h2, Exact):
            h1c = Exact(pdl.h2.value - pd.h2.value)
            rules.append("h1(O_C(D)) = h0(L-D) - h2(D) since h1(D) = 0")
        else:
            h1c = _bound(pdl.h2.lower - pd.h2.value)
            if pdl.h2.lower - pd.h2.value > 0:
                rules.append("h1(O_C(D)) >= h0(L-D) - h2(D) since h1(D) = 0")
    return h0c, h1c, rules


def restriction_profile(S: SurfaceModel, D: DivisorClass, import_gl: bool = True) -> RestrictionProfile:
    """Restrict ``D`` to a smooth ``C`` in ``|L|``.

    Combines the restriction sequences for ``D`` and ``L - D`` through Serre
    duality on ``C`` (``K_C = L|_C`` by adjunction). With ``import_gl`` the
    Green-Lazarsfeld consequence ``h0(O_C(E)) = h0(E)`` is applied to the
    elliptic pencil of an in-range model and tagged as imported.
    """
    h0a, h1a, rules = _les_bounds(S, D)
    h0b, h1b, rules_b = _les_bounds(S, L_CLASS - D)
    h0c = _tightest(h0a, h1b)
    h1c = _tightest(h1a, h0b)
    if h1b != UNKNOWN and h0c == h1b and h0a != h0c:
        rules.append("h0(O_C(D)) = h1(O_C(L-D)) by Serre duality on C")
    if h0b != UNKNOWN and h1c == h0b and h1a != h1c:
        rules.append("h1(O_C(D)) = h0(O_C(L-D)) by Serre duality on C")
    g, d = S.genus, S.degree
    if import_gl and D == E_CLASS and 2 <= d <= (g + 3) // 2 and not isinstance(h0c, Exact):
        h0e = h_profile(S, E_CLASS).h0
        h0c = _tightest(h0c, h0e)
        rules.append("imported (Green-Lazarsfeld): h0(O_C(E)) = h0(E) = 2 for the computing pencil")
    return RestrictionProfile(h0c, h1c, pair(S, D, L_CLASS), tuple(rules))
