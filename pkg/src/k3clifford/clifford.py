"""
Clifford index and gonality of smooth curves ``C`` in ``|L|``.

Two routes reach the same number:

* :func:`candidate_classes` + :func:`min_cliff` follow the elimination
  argument. Any divisor ``D`` computing the Clifford index has ``D`` and
  ``L - D`` effective. Because ``E`` is nef this forces ``x`` in {0, 1}, and
  vanishing of ``h1`` then forces ``D = E`` or ``L - D = E``.
* :func:`brute_force_cliff` scans a box of classes and keeps only those the
  cohomology ledger certifies. It knows nothing about the elimination.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional

from .errors import RangeError, VerificationError
from .lattice import (
    E_CLASS,
    L_CLASS,
    DivisorClass,
    SurfaceModel,
    pair,
    self_int,
)
from .linsys import (
    BpfCertificate,
    Exact,
    NefCertificate,
    check_L_bpf,
    check_L_nef,
    h_profile,
    hyperelliptic_pencils,
    restriction_profile,
)

__all__ = [
    "CliffordCertificate",
    "Contribution",
    "Census",
    "BruteForceResult",
    "cliff_of_bundle",
    "cliff_value",
    "contributes",
    "candidate_classes",
    "min_cliff",
    "gonality",
    "brute_force_cliff",
    "safe_radius",
    "GL_IDENTIFICATION",
]

HYPERELLIPTIC_G3 = "hyperelliptic-g3"
NONHYPERELLIPTIC_G3 = "nonhyperelliptic-g3"

GL_IDENTIFICATION = (
    "the Green-Lazarsfeld divisor computing Cliff C is identified with a lattice class D "
    "with h0(D), h0(L-D) >= 2 and h1(D) = h1(L-D) = 0; this theorem is used, not re-proved"
)


def _max_degree(g: int) -> int:
    return (g + 3) // 2


def _max_cliff(g: int) -> int:
    return (g - 1) // 2


def _check_in_range(S: SurfaceModel) -> None:
    g, d = S.genus, S.degree
    if g < 3:
        raise RangeError(f"genus must satisfy g >= 3, got g={g}")
    if not 2 <= d <= _max_degree(g):
        raise RangeError(
            f"degree must satisfy 2 <= d <= floor((g+3)/2) = {_max_degree(g)}, got d={d}"
        )


def cliff_of_bundle(degree: int, h0: int) -> int:
    """``deg A - 2(h0(A) - 1)``."""
    if h0 < 1:
        raise ValueError(f"Clifford index needs h0 >= 1, got h0={h0}")
    return degree - 2 * (h0 - 1)


def cliff_value(S: SurfaceModel, D: DivisorClass) -> int:
    """``D.L - D^2 - 2``, the Clifford index of ``O_C(D)`` when ``h1(D) = 0``."""
    return pair(S, D, L_CLASS) - self_int(S, D) - 2


@dataclass(frozen=True)
class Contribution:
    """Outcome of the contribution test; ``verdict`` is None when indeterminate."""

    verdict: Optional[bool]
    h0: object
    h1: object
    reason: str

    def __bool__(self) -> bool:
        return self.verdict is True


def contributes(S: SurfaceModel, D: DivisorClass, import_gl: bool = True) -> Contribution:
    """Whether ``O_C(D)`` has ``h0 >= 2`` and ``h1 >= 2``, as far as the ledger can tell."""
    rp = restriction_profile(S, D, import_gl=import_gl)
    if rp.h0.lower >= 2 and rp.h1.lower >= 2:
        return Contribution(True, rp.h0, rp.h1, "h0 >= 2 and h1 >= 2 certified")
    for name, v in (("h0", rp.h0), ("h1", rp.h1)):
        if isinstance(v, Exact) and v.value < 2:
            return Contribution(False, rp.h0, rp.h1, f"{name}(O_C(D)) = {v.value} < 2")
    return Contribution(None, rp.h0, rp.h1, "ledger cannot decide")


def candidate_classes(S: SurfaceModel) -> list[DivisorClass]:
    """Classes that can compute the Clifford index, found by elimination.

    ``D`` and ``L - D`` are both nonzero effective and ``E`` is nef, so ``E``
    meets both non-negatively, which bounds ``x``. Within each surviving
    branch one of ``D``, ``L - D`` is a multiple ``yE``, and vanishing of
    ``h1(yE)`` pins ``y``.
    """
    _check_in_range(S)
    le, ee = pair(S, L_CLASS, E_CLASS), pair(S, E_CLASS, E_CLASS)
    if ee != 0:
        raise VerificationError("E must be isotropic")
    # D.E = le*x >= 0 and (L-D).E = le - le*x >= 0; y drops out because E^2 = 0
    x_lo = -(0 // le)
    x_hi = le // le
    # L nef and the complement of yE effective give y*d <= L^2
    y_max = pair(S, L_CLASS, L_CLASS) // le
    out = []
    for x in range(x_lo, x_hi + 1):
        for y in range(1, y_max + 1):
            multiple = DivisorClass(0, y)
            rest = L_CLASS - multiple
            D = multiple if x == 0 else rest
            p, q = h_profile(S, multiple), h_profile(S, rest)
            if p.h1 != Exact(0):
                continue
            if p.h0.lower < 1 or q.h0.lower < 1 or rest.is_zero():
                continue
            out.append(D)
    return out


@dataclass(frozen=True)
class Census:
    examined: int
    failed_filter: int
    h1_nonvanishing: int
    not_contributing: int
    indeterminate: int
    certified: int

    def stable_part(self) -> tuple[int, int, int, int]:
        """Counts over classes passing the necessary filter; independent of the box size."""
        return (self.h1_nonvanishing, self.not_contributing, self.indeterminate, self.certified)

    def to_dict(self) -> dict:
        return {
            "examined": self.examined,
            "failed_filter": self.failed_filter,
            "h1_nonvanishing": self.h1_nonvanishing,
            "not_contributing": self.not_contributing,
            "indeterminate": self.indeterminate,
            "certified": self.certified,
        }


@dataclass(frozen=True)
class BruteForceResult:
    minimum: Optional[int]
    survivors: tuple[DivisorClass, ...]
    census: Census
    bounds: tuple[int, int]
    convention_branch: Optional[str] = None


def safe_radius(S: SurfaceModel) -> tuple[int, int]:
    """Box half-widths that contain every class passing the necessary filter."""
    g, d = S.genus, S.degree
    return 2, -(-2 * (g - 1) // d) + 1


def _g3_convention(S: SurfaceModel) -> tuple[int, str]:
    # genus 3: hyperelliptic curves get Cliff 0, plane quartics get Cliff 1
    if hyperelliptic_pencils(S):
        return 0, HYPERELLIPTIC_G3
    return 1, NONHYPERELLIPTIC_G3


def brute_force_cliff(S: SurfaceModel, x_bound: int, y_bound: int) -> BruteForceResult:
    """Minimum of ``cliff_value`` over ledger-certified classes in a box.

    A class survives when both ``L`` and ``E`` meet ``D`` and ``L - D``
    non-negatively, neither ``h1(D)`` nor ``h1(L - D)`` is known to be
    nonzero, ``O_C(D)`` is certified to contribute, and ``h0(D)`` and
    ``h0(L - D)`` are certified >= 2. Indeterminate classes are excluded and
    counted.

    For genus 3 the returned minimum is the convention value; the census is
    still computed from the scan.
    """
    xs, ys = safe_radius(S)
    if x_bound < xs or y_bound < ys:
        raise RangeError(f"bounds ({x_bound}, {y_bound}) are below the safe radius ({xs}, {ys})")
    examined = failed = h1_bad = not_contrib = indet = 0
    survivors = []
    for x in range(-x_bound, x_bound + 1):
        for y in range(-y_bound, y_bound + 1):
            examined += 1
            D = DivisorClass(x, y)
            R = L_CLASS - D
            if (
                pair(S, D, E_CLASS) < 0
                or pair(S, D, L_CLASS) < 0
                or pair(S, R, E_CLASS) < 0
                or pair(S, R, L_CLASS) < 0
            ):
                failed += 1
                continue
            pd, pr = h_profile(S, D), h_profile(S, R)
            if pd.h1.lower > 0 or pr.h1.lower > 0:
                h1_bad += 1
                continue
            c = contributes(S, D, import_gl=False)
            if c.verdict is False:
                not_contrib += 1
                continue
            if c.verdict is None or pd.h0.lower < 2 or pr.h0.lower < 2:
                indet += 1
                continue
            survivors.append(D)
    census = Census(examined, failed, h1_bad, not_contrib, indet, len(survivors))
    minimum = min((cliff_value(S, D) for D in survivors), default=None)
    branch = None
    if S.genus == 3:
        minimum, branch = _g3_convention(S)
    return BruteForceResult(minimum, tuple(survivors), census, (x_bound, y_bound), branch)


@dataclass(frozen=True)
class CliffordCertificate:
    genus: int
    degree_d: int
    min_cliff: int
    gonality: int
    witnesses: tuple[DivisorClass, ...]
    candidate_set: tuple[DivisorClass, ...]
    oracle_agrees: bool
    convention_branch: Optional[str]
    assumption_log: tuple[str, ...]
    nef: NefCertificate
    bpf: BpfCertificate
    census: Census
    survivors: tuple[DivisorClass, ...]
    checks: tuple[str, ...] = field(default=())

    @property
    def verified(self) -> bool:
        return bool(self.oracle_agrees and self.nef.holds and self.bpf.holds)


@functools.lru_cache(maxsize=4096)
def min_cliff(S: SurfaceModel) -> CliffordCertificate:
    """Certify ``Cliff C = d - 2`` and ``gon C = d`` for smooth ``C`` in ``|L|``.

    Raises :class:`RangeError` outside ``3 <= g`` and ``2 <= d <= floor((g+3)/2)``;
    nothing is claimed there. Raises :class:`VerificationError` if the
    computation contradicts the expected value.
    """
    _check_in_range(S)
    g, d = S.genus, S.degree
    checks = []
    nef = check_L_nef(S)
    bpf = check_L_bpf(S)
    if nef.holds is None:
        raise VerificationError(f"nefness of L undecided at (g, d) = ({g}, {d})")
    checks.append(f"L nef over {len(nef.evidence)} effective root(s): {nef.holds}")
    checks.append(f"L base point free ({bpf.method}): {bpf.holds}")

    cands = candidate_classes(S)
    values = {D: cliff_value(S, D) for D in cands}
    branch = None
    if g >= 4:
        m = min(values.values())
        witnesses = tuple(D for D in cands if values[D] == m)
    else:
        m, branch = _g3_convention(S)
        witnesses = tuple(cands)
        checks.append(f"genus 3 convention applied: {branch}")
        if (branch == HYPERELLIPTIC_G3) != (d == 2):
            raise VerificationError(f"genus-3 convention disagrees with d={d}")

    pencil = restriction_profile(S, E_CLASS)
    if pencil.h0 != Exact(2):
        raise VerificationError(f"h0(O_C(E)) is {pencil.h0}, expected exactly 2")
    checks.append(f"pencil O_C(E): degree {pencil.degree}, h0 {pencil.h0}")
    if m != d - 2 or not 0 <= m <= _max_cliff(g):
        raise VerificationError(f"Cliff = {m} at (g, d) = ({g}, {d}); expected {d - 2}")

    # gon <= deg O_C(E) = d because it is a pencil; gon >= Cliff + 2 = d
    gon = pencil.degree
    if gon < m + 2:
        raise VerificationError("gonality sandwich failed")
    checks.append(f"gonality: pencil gives gon <= {pencil.degree}; Cliff + 2 gives gon >= {m + 2}")

    oracle = brute_force_cliff(S, *safe_radius(S))
    agrees = oracle.minimum == m
    checks.append(f"brute-force oracle minimum {oracle.minimum}, agrees: {agrees}")
    return CliffordCertificate(
        genus=g,
        degree_d=d,
        min_cliff=m,
        gonality=gon,
        witnesses=witnesses,
        candidate_set=tuple(cands),
        oracle_agrees=agrees,
        convention_branch=branch,
        assumption_log=tuple(S.assumptions) + (GL_IDENTIFICATION,),
        nef=nef,
        bpf=bpf,
        census=oracle.census,
        survivors=oracle.survivors,
        checks=tuple(checks),
    )


def gonality(S: SurfaceModel) -> int:
    return min_cliff(S).gonality
