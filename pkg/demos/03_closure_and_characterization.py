"""
Closure under comparability, decided two ways
=============================================

A leveled family is closed when rewriting any incomparable generator
product lands back inside the family.  The exact check scans every
pair; the structural characterization only inspects the level shapes:
each level must be a full Borel set and consecutive Borel generators
must satisfy a variable-support chain.  In rees mode the two verdicts
provably agree, and a deliberately damaged family shows the witness
machinery.
"""
import pathlib

from reescert import (
    build_family,
    characterize,
    family_from_file,
    is_closed_under_comparability,
)

here = pathlib.Path(__file__).parent
fam = family_from_file(here / "families" / "tower4.json")

report = is_closed_under_comparability(fam)
print(f"tower4 closed: {report.closed}  ({report.pairs_checked} pairs checked)")

chara = characterize(fam)
print(f"levels full Borel: {chara.borel_equal}")
print(f"support chain:     {chara.chain}")
print(f"conjunction:       {chara.conjunction}")

# knock one generator out of the first level and watch closure fail
desc = {
    "mode": "rees",
    "variables": 4,
    "levels": [
        {"degree": 2, "generators": [
            "x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2",
            "x1*x4", "x3*x4"]},  # x2*x4 removed
        {"degree": 3, "borel": "x2^2*x3"},
    ],
}
broken = build_family(desc)
report = is_closed_under_comparability(broken)
print(f"\ndamaged family closed: {report.closed}")
for w in report.witnesses[:3]:
    a, b = w.pair
    images = ", ".join(m.text() for m in w.images)
    print(f"  witness {a}*{b} rewrites to ({images}), "
          f"missing position(s) {list(w.missing)}")
