"""
Exact model of the rank-2 Picard lattice ``ZL + ZE`` of a K3 surface.

The intersection form in the basis (L, E) is::

    [ 2(g-1)   d ]
    [   d      0 ]

so ``L`` is a polarization of genus ``g`` and ``E`` an elliptic pencil cutting
a degree-``d`` pencil on every curve in ``|L|``. All arithmetic uses Python
integers, so nothing can overflow.

>>> S = make_surface(5, 3)
>>> S.gram
((8, 3), (3, 0))
>>> pair(S, DivisorClass(1, -1), DivisorClass(1, -1))
2
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import RangeError

__all__ = [
    "SurfaceModel",
    "DivisorClass",
    "ZERO",
    "L_CLASS",
    "E_CLASS",
    "make_surface",
    "pair",
    "self_int",
    "chi",
]

# Facts about the complex geometry that the lattice model cannot check.
# They are recorded with every surface so certificates say what is imported.
ASSUMPTIONS = (
    "existence: a K3 surface S with Pic S = ZL + ZE and this Gram matrix exists "
    "(lattice theory of K3 surfaces / surjectivity of the period map)",
    "Pic S is exactly ZL + ZE, not an overlattice",
    "L is nef",
    "|E| contains a smooth irreducible curve (an elliptic curve, since E^2 = 0)",
)


@dataclass(frozen=True)
class DivisorClass:
    """The class ``x*L + y*E``. Coordinates are plain integers, never normalized."""

    x: int
    y: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x + other.x, self.y + other.y)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x - other.x, self.y - other.y)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.x, -self.y)

    def __rmul__(self, n: int) -> DivisorClass:
        return DivisorClass(n * self.x, n * self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def to_list(self) -> list[int]:
        return [self.x, self.y]

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


ZERO = DivisorClass(0, 0)
L_CLASS = DivisorClass(1, 0)
E_CLASS = DivisorClass(0, 1)


@dataclass(frozen=True)
class SurfaceModel:
    genus: int
    degree: int
    assumptions: tuple[str, ...] = field(default=ASSUMPTIONS, compare=False, repr=False)

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2 * (self.genus - 1), self.degree), (self.degree, 0))

    @property
    def determinant(self) -> int:
        (a, b), (c, e) = self.gram
        return a * e - b * c

    def is_even(self) -> bool:
        # x^2 L^2 + 2xy L.E + y^2 E^2 is even iff both diagonal entries are
        return self.gram[0][0] % 2 == 0 and self.gram[1][1] % 2 == 0

    def is_hyperbolic(self) -> bool:
        return self.determinant < 0


def make_surface(g: int, d: int) -> SurfaceModel:
    """Build the lattice model for genus ``g`` and pencil degree ``d``.

    Raises :class:`RangeError` unless ``g >= 3`` and ``d >= 2``.
    """
    if not isinstance(g, int) or not isinstance(d, int):
        raise TypeError("genus and degree must be integers")
    if g < 3:
        raise RangeError(f"genus must satisfy g >= 3, got g={g}")
    if d < 2:
        raise RangeError(f"degree must satisfy d >= 2, got d={d}")
    S = SurfaceModel(g, d)
    assert S.is_even() and S.is_hyperbolic() and S.determinant == -d * d
    return S


def pair(S: SurfaceModel, D1: DivisorClass, D2: DivisorClass) -> int:
    """Intersection number ``D1 . D2``."""
    return 2 * (S.genus - 1) * D1.x * D2.x + S.degree * (D1.x * D2.y + D2.x * D1.y)


def self_int(S: SurfaceModel, D: DivisorClass) -> int:
    return pair(S, D, D)


def chi(S: SurfaceModel, D: DivisorClass) -> int:
    """Euler characteristic ``D^2/2 + 2`` (Riemann-Roch on a K3 surface)."""
    return self_int(S, D) // 2 + 2
