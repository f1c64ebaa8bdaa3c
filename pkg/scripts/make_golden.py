"""Regenerate tests/golden/ from the fixtures.

Each action fixture gets the ``parwb criteria --json`` output, the algebra
fixture gets its verdict, and enumeration_counts.json freezes a few small
enumeration counts (recounted by the slow path before writing).
"""

import io
import json
import pathlib
import sys

from parwb import algebra_core as ac
from parwb import cli
from parwb import workbench as wb
from parwb.falgebra import decide_globalizable_algebra01
from parwb.formats import algebra_pa_from_json, dumps, load_json

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
OUT = ROOT / "tests" / "golden"

COUNTS = {
    "one_zero/null(2)": (wb.monoid_one_zero, lambda: ac.null(2)),
    "one_zero/left_zero(2)": (wb.monoid_one_zero, lambda: ac.left_zero(2)),
    "c2_zero/null(2)": (wb.monoid_c2_zero, lambda: ac.null(2)),
    "c2/left_zero(2)": (lambda: ac.cyclic_group(2), lambda: ac.left_zero(2)),
    "trivial/mult_mod(3)": (lambda: ac.cyclic_group(1), lambda: ac.mult_mod(3)),
}


def counts():
    out = {}
    for key, (m, x) in COUNTS.items():
        M, X = m(), x()
        fast = sum(1 for _ in wb.enumerate_partial_actions(M, X))
        slow = wb.count_partial_actions_slow(M, X)
        if fast != slow:
            raise SystemExit(f"{key}: enumerator gives {fast}, slow recount {slow}")
        out[key] = fast
    return out


def main(out=OUT):
    out.mkdir(exist_ok=True)
    n = 0
    for path in sorted(FIXTURES.glob("*.json")):
        if path.stem in ("broken", "ex3_algebra"):
            continue
        buf = io.StringIO()
        cli.main(["criteria", "--json", str(path)], out=buf)
        (out / f"{path.stem}.criteria.json").write_text(buf.getvalue(), encoding="utf-8")
        n += 1
    pa = algebra_pa_from_json(load_json(FIXTURES / "ex3_algebra.json"))
    (out / "ex3_algebra.verdict.json").write_text(dumps(decide_globalizable_algebra01(pa).to_dict()), encoding="utf-8")
    (out / "enumeration_counts.json").write_text(json.dumps(counts(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {n + 2} golden files to {out}")


if __name__ == "__main__":
    sys.exit(main())
