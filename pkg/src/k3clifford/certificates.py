"""JSON certificate documents and table renderings."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any, Optional

from .clifford import CliffordCertificate
from .theorem import RealizationTable, TheoremQuery, bn_bounds

SCHEMA_VERSION = "1.0"

TABLE_COLUMNS = (
    "genus",
    "kind",
    "target",
    "d",
    "min_cliff",
    "gonality",
    "oracle_agrees",
    "bpf_holds",
    "nef_holds",
    "convention_branch",
    "verified",
)


@dataclass(frozen=True)
class CertificateDocument:
    schema_version: str
    query: dict
    surface: dict
    results: dict
    checks: dict
    assumptions: list
    convention_branch: Optional[str]

    @classmethod
    def build(cls, query: TheoremQuery, cert: CliffordCertificate) -> CertificateDocument:
        max_gon, max_cliff = bn_bounds(cert.genus)
        g, d = cert.genus, cert.degree_d
        return cls(
            schema_version=SCHEMA_VERSION,
            query={"kind": query.kind.value, "genus": query.genus, "target": query.target},
            surface={"genus": g, "d": d, "gram": [[2 * (g - 1), d], [d, 0]]},
            results={
                "min_cliff": cert.min_cliff,
                "gonality": cert.gonality,
                "witnesses": [D.to_list() for D in cert.witnesses],
                "candidate_set": [D.to_list() for D in cert.candidate_set],
                "bounds": {"max_gonality": max_gon, "max_cliff": max_cliff},
            },
            checks={
                "nef": {
                    "holds": cert.nef.holds,
                    "effective_roots": [
                        {"class": B.to_list(), "B.L": bl, "B.E": be} for B, _, bl, be in cert.nef.evidence
                    ],
                },
                "bpf": {
                    "holds": cert.bpf.holds,
                    "method": cert.bpf.method,
                    "obstructions": [B.to_list() for B in cert.bpf.obstructions],
                },
                "oracle_agrees": cert.oracle_agrees,
                "census": cert.census.to_dict(),
                "survivors": [D.to_list() for D in cert.survivors],
                "log": list(cert.checks),
            },
            assumptions=list(cert.assumption_log),
            convention_branch=cert.convention_branch,
        )

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CertificateDocument:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
        return cls(**{k: data[k] for k in cls.__dataclass_fields__})

    @classmethod
    def from_json(cls, text: str) -> CertificateDocument:
        return cls.from_dict(json.loads(text))


def _cells(row) -> list[str]:
    vals = [
        row.genus,
        row.kind.value,
        row.target,
        row.d,
        row.min_cliff,
        row.gonality,
        row.oracle_agrees,
        row.bpf_holds,
        row.nef_holds,
        row.convention_branch or "",
        row.verified,
    ]
    return [str(v).lower() if isinstance(v, bool) else str(v) for v in vals]


def table_to_tsv(table: RealizationTable) -> str:
    lines = ["\t".join(TABLE_COLUMNS)]
    lines += ["\t".join(_cells(r)) for r in table.rows]
    return "\n".join(lines) + "\n"


def table_to_markdown(table: RealizationTable) -> str:
    lines = [
        "| " + " | ".join(TABLE_COLUMNS) + " |",
        "|" + "|".join("---" for _ in TABLE_COLUMNS) + "|",
    ]
    lines += ["| " + " | ".join(_cells(r)) + " |" for r in table.rows]
    return "\n".join(lines) + "\n"


def table_to_json(table: RealizationTable) -> str:
    rows = []
    for r in table.rows:
        rows.append(
            {
                "genus": r.genus,
                "kind": r.kind.value,
                "target": r.target,
                "d": r.d,
                "min_cliff": r.min_cliff,
                "gonality": r.gonality,
                "oracle_agrees": r.oracle_agrees,
                "bpf_holds": r.bpf_holds,
                "nef_holds": r.nef_holds,
                "convention_branch": r.convention_branch,
                "verified": r.verified,
            }
        )
    doc = {
        "schema_version": SCHEMA_VERSION,
        "genus_min": table.g_min,
        "genus_max": table.g_max,
        "all_verified": table.all_verified,
        "rows": rows,
    }
    return json.dumps(doc, sort_keys=True, indent=2)
