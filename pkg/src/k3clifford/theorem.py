"""
Realization of every admissible Clifford index and gonality.

For genus ``g`` and a target Clifford index ``c`` (or gonality ``k``) the
surface with ``d = c + 2`` (or ``d = k``) carries curves in ``|L|`` with
exactly that invariant. :func:`sweep` certifies every admissible pair in a
genus range and collects the results in a :class:`RealizationTable`.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .clifford import CliffordCertificate, min_cliff
from .errors import RangeError, VerificationError
from .lattice import make_surface

__all__ = [
    "Kind",
    "TheoremQuery",
    "RealizationRow",
    "RealizationTable",
    "bn_bounds",
    "realize",
    "realize_clifford",
    "realize_gonality",
    "sweep",
]


class Kind(str, enum.Enum):
    CLIFFORD = "clifford"
    GONALITY = "gonality"


def bn_bounds(g: int) -> tuple[int, int]:
    """``(max gonality, max Clifford index)`` for genus ``g`` from Brill-Noether theory."""
    if g < 2:
        raise RangeError(f"genus must satisfy g >= 2, got g={g}")
    return (g + 3) // 2, (g - 1) // 2


@dataclass(frozen=True)
class TheoremQuery:
    kind: Kind
    genus: int
    target: int

    def validate(self) -> None:
        g, t = self.genus, self.target
        if g < 3:
            raise RangeError(f"genus must satisfy g >= 3, got g={g}")
        max_gon, max_cliff = bn_bounds(g)
        if self.kind is Kind.CLIFFORD:
            if not 0 <= t <= max_cliff:
                raise RangeError(
                    f"Clifford index must satisfy 0 <= c <= floor((g-1)/2) = {max_cliff}, got c={t}"
                )
        elif not 2 <= t <= max_gon:
            raise RangeError(
                f"gonality must satisfy 2 <= k <= floor((g+3)/2) = {max_gon}, got k={t}"
            )

    @property
    def degree(self) -> int:
        return self.target + 2 if self.kind is Kind.CLIFFORD else self.target


def realize(query: TheoremQuery) -> CliffordCertificate:
    query.validate()
    cert = min_cliff(make_surface(query.genus, query.degree))
    got = cert.min_cliff if query.kind is Kind.CLIFFORD else cert.gonality
    if got != query.target:
        raise VerificationError(
            f"(g, d) = ({query.genus}, {query.degree}): {query.kind.value} {got} != {query.target}"
        )
    if not (cert.nef.holds and cert.bpf.holds):
        raise VerificationError(f"(g, d) = ({query.genus}, {query.degree}): L not nef and base point free")
    return cert


def realize_clifford(g: int, c: int) -> CliffordCertificate:
    """A K3 surface with smooth curves of genus ``g`` and Clifford index ``c``."""
    return realize(TheoremQuery(Kind.CLIFFORD, g, c))


def realize_gonality(g: int, k: int) -> CliffordCertificate:
    """A K3 surface with smooth curves of genus ``g`` and gonality ``k``."""
    return realize(TheoremQuery(Kind.GONALITY, g, k))


@dataclass(frozen=True)
class RealizationRow:
    genus: int
    kind: Kind
    target: int
    d: int
    min_cliff: int
    gonality: int
    oracle_agrees: bool
    bpf_holds: bool
    nef_holds: bool
    convention_branch: Optional[str]

    @property
    def verified(self) -> bool:
        hit = self.min_cliff if self.kind is Kind.CLIFFORD else self.gonality
        return hit == self.target and self.oracle_agrees and self.bpf_holds and bool(self.nef_holds)

    def sort_key(self):
        return (self.genus, self.kind.value, self.target)


@dataclass(frozen=True)
class RealizationTable:
    g_min: int
    g_max: int
    rows: tuple[RealizationRow, ...]

    @property
    def failures(self) -> list[RealizationRow]:
        return [r for r in self.rows if not r.verified]

    @property
    def all_verified(self) -> bool:
        return not self.failures


def _queries(g_min: int, g_max: int) -> list[TheoremQuery]:
    out = []
    for g in range(g_min, g_max + 1):
        max_gon, max_cliff = bn_bounds(g)
        # at g = 3 the Clifford rows are the two convention cases
        out += [TheoremQuery(Kind.CLIFFORD, g, c) for c in range(0, max_cliff + 1)]
        out += [TheoremQuery(Kind.GONALITY, g, k) for k in range(2, max_gon + 1)]
    return out


def _row(query: TheoremQuery) -> RealizationRow:
    try:
        cert = realize(query)
    except VerificationError as exc:
        raise VerificationError(f"(g, d) = ({query.genus}, {query.degree}): {exc}") from exc
    max_gon, max_cliff = bn_bounds(cert.genus)
    # hard bounds; a violation is a bug, never a table entry
    if not 0 <= cert.min_cliff <= max_cliff:
        raise VerificationError(f"(g, d) = ({cert.genus}, {cert.degree_d}): Cliff out of bounds")
    if not cert.gonality == cert.min_cliff + 2 <= max_gon:
        raise VerificationError(f"(g, d) = ({cert.genus}, {cert.degree_d}): gonality out of bounds")
    return RealizationRow(
        genus=query.genus,
        kind=query.kind,
        target=query.target,
        d=cert.degree_d,
        min_cliff=cert.min_cliff,
        gonality=cert.gonality,
        oracle_agrees=cert.oracle_agrees,
        bpf_holds=cert.bpf.holds,
        nef_holds=bool(cert.nef.holds),
        convention_branch=cert.convention_branch,
    )


def sweep(g_min: int, g_max: int, workers: Optional[int] = None) -> RealizationTable:
    """Certify every admissible (genus, Clifford index) and (genus, gonality) pair.

    Rows come back sorted by ``(genus, kind, target)`` whatever ``workers`` is.
    """
    if g_min < 3:
        raise RangeError(f"g_min must satisfy g_min >= 3, got {g_min}")
    if g_max < g_min:
        raise RangeError(f"need g_min <= g_max, got {g_min} > {g_max}")
    queries = _queries(g_min, g_max)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, queries, chunksize=32))
    else:
        rows = [_row(q) for q in queries]
    rows.sort(key=RealizationRow.sort_key)
    return RealizationTable(g_min, g_max, tuple(rows))
