"""
Borel sets of monomials
=======================

The Borel set B(u) collects every monomial of the same degree reachable
from u by swapping a variable for a smaller-index one.  Listed in
reverse-lexicographic order it always starts at the pure power of x1
and ends at u itself; a family whose levels are full Borel sets is the
raw material for every certificate in this package.
"""
from reescert import borel_closure, borel_member, parse_monomial

for text in ["x3*x4", "x2^2*x3", "x1*x2^2", "x1^5"]:
    gen = parse_monomial(text, 4)
    members = borel_closure(gen)
    print(f"B({text}): {len(members)} members")
    print("   " + ", ".join(m.text() for m in members))

# membership is a suffix-sum dominance test, no enumeration needed
u = parse_monomial("x1^2*x4", 4)
for top in ["x2*x3*x4", "x2*x3^2"]:
    inside = borel_member(u, parse_monomial(top, 4))
    print(f"{u.text()} in B({top}): {inside}")
