"""Regenerate the G1 golden trace files under tests/golden/.

Only rerun after auditing the new output by hand; the tests compare
byte-for-byte.
"""

import io
from pathlib import Path

from spath.cli import main

ROOT = Path(__file__).resolve().parent.parent
GRAPH = ROOT / "tests" / "data" / "g1.graph"
GOLDEN = ROOT / "tests" / "golden"

for fmt, suffix in (("text", "txt"), ("json", "json")):
    out = io.StringIO()
    main(["route", "--graph", str(GRAPH), "--source", "a", "--target", "z", "--trace", "--format", fmt], out=out)
    (GOLDEN / f"g1_route_trace.{suffix}").write_text(out.getvalue())
    print(out.getvalue(), end="")
