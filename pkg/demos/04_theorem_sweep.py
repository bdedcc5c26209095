"""
Every Clifford index and every gonality
=======================================

Sweep a genus range and certify each admissible pair.
"""

import collections
import time

from k3clifford import Kind, realize_clifford, sweep
from k3clifford.certificates import CertificateDocument, table_to_markdown
from k3clifford.theorem import TheoremQuery

print(table_to_markdown(sweep(3, 6)))

start = time.perf_counter()
table = sweep(3, 60)
print(f"{len(table.rows)} rows for g in [3, 60], all verified: {table.all_verified}, "
      f"{time.perf_counter() - start:.2f}s")

counts = collections.Counter((r.genus, r.kind) for r in table.rows)
for g in (4, 10, 60):
    print(f"g={g}: {counts[g, Kind.CLIFFORD]} Clifford rows, {counts[g, Kind.GONALITY]} gonality rows")

# a single certificate as JSON
cert = realize_clifford(11, 5)
print(CertificateDocument.build(TheoremQuery(Kind.CLIFFORD, 11, 5), cert).to_json())
