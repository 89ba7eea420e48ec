"""
Fiber mode and the limits of the structural test
================================================

In fiber mode the toric map embeds every level in a single degree, so
closure speaks about the special fiber ring instead of the Rees
algebra.  The structural conjunction (full Borel levels plus the
support chain) still implies closure, but the implication cannot be
reversed: this two-level family is closed even though neither level is
a full Borel set.  The brute-force suites then confirm the basis the
usual way.
"""
import pathlib

from reescert import (
    build_basis,
    characterize,
    family_from_file,
    is_closed_under_comparability,
    verify_kernel_generation,
    verify_unique_normal_forms,
)

here = pathlib.Path(__file__).parent
fam = family_from_file(here / "families" / "fiber_pair.json")

report = is_closed_under_comparability(fam)
chara = characterize(fam)
print(f"closed: {report.closed}")
print(f"levels full Borel: {chara.borel_equal}  (conjunction"
      f" {chara.conjunction})")

basis = build_basis(fam)
print(f"\nbasis has {len(basis)} rule(s):")
for g in basis:
    print(f"  {g.lead.text()} -> {g.trail.text()}")

unique = verify_unique_normal_forms(fam, basis, 3)
kernel = verify_kernel_generation(fam, basis, 3)
print(f"\nunique reduced member per fiber through degree 3: {unique.passed}"
      f" ({unique.monomials} monomials, {unique.fibers} fibers)")
print(f"fiber differences reduce to zero: {kernel.passed}"
      f" ({kernel.differences} differences)")
