"""
Sorting and ordering rewrites on monomial pairs
===============================================

Every generator product in the presentation is rewritten by one of two
moves.  Same-degree pairs are *sorted*: interleave the combined factor
list and deal it back alternately.  Cross-degree pairs are *ordered*:
split the combined factor list so the lower-degree output takes the
largest factors.  A pair left unchanged by its move is called
comparable, and those products are exactly the ones that survive as
normal forms.
"""
from reescert import ord_pair, parse_monomial, sort_pair

u = parse_monomial("x1^2*x3", 4)
v = parse_monomial("x2*x3*x4", 4)

# the combined factor multiset is x1,x1,x2,x3,x3,x4
a, b = ord_pair(u, v)
print(f"ord({u.text()}, {v.text()})  = ({a.text()}, {b.text()})")

a, b = sort_pair(u, v)
print(f"sort({u.text()}, {v.text()}) = ({a.text()}, {b.text()})")

# sorting is idempotent: the output pair is fixed
c, d = sort_pair(a, b)
print(f"sort of the sorted pair      = ({c.text()}, {d.text()})")

# ordering across degrees: a degree-2 times a degree-3 generator
p = parse_monomial("x1*x2", 4)
q = parse_monomial("x2^2*x3", 4)
a, b = ord_pair(p, q)
print(f"ord({p.text()}, {q.text()})     = ({a.text()}, {b.text()})")

# the ordered pair is fixed precisely when the head variable index of
# the low-degree side reaches the tail index of the high-degree side
print(f"fixed: head {a.head_index()} >= tail {b.tail_index()} ->",
      ord_pair(a, b) == (a, b))
