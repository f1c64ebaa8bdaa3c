"""Write the JSON fixtures in fixtures/ from the constructors in parwb.workbench."""

import json
import pathlib
import sys

from parwb import workbench as wb
from parwb.formats import action_to_json, algebra_pa_to_json, dumps

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

C2_ZERO = "g0(cyclic_group(2))"
ONE_ZERO = "one_zero()"

ACTIONS = {
    "ex1": (wb.fixture_ex1, C2_ZERO, "direct_product(multiples_mod(8,2),multiples_mod(8,2))"),
    "ex2": (wb.fixture_ex2, C2_ZERO, "power(mult_mod(4),3)"),
    "ex3_semigroup": (wb.fixture_ex3_semigroup, ONE_ZERO, None),
    "ex4": (wb.fixture_ex4, ONE_ZERO, "mult_mod(6)"),
    "lz_pos": (wb.fixture_lz_pos, C2_ZERO, "left_zero(2)"),
    "lz_neg": (wb.fixture_lz_neg, "cyclic_group(2)", "left_zero(2)"),
    "lz_01": (wb.fixture_lz_01, ONE_ZERO, "left_zero(2)"),
    "null2": (lambda: wb.fixture_null(2), C2_ZERO, "null(2)"),
    "null3": (lambda: wb.fixture_null(3), C2_ZERO, "null(3)"),
}

BROKEN = {
    "monoid": C2_ZERO,
    "carrier": {"elements": ["a", "b"], "table": [[0, 1], [1, 7]]},
    "maps": {},
}


def main(out=OUT):
    out.mkdir(exist_ok=True)
    for name, (make, mref, xref) in ACTIONS.items():
        d = action_to_json(make(), monoid_ref=mref, carrier_ref=xref)
        # identity entries are implied
        d["maps"].pop("1", None)
        (out / f"{name}.json").write_text(dumps(d), encoding="utf-8")
    (out / "ex3_algebra.json").write_text(dumps(algebra_pa_to_json(wb.fixture_ex3())), encoding="utf-8")
    (out / "broken.json").write_text(json.dumps(BROKEN, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(ACTIONS) + 2} fixtures to {out}")


if __name__ == "__main__":
    sys.exit(main())
