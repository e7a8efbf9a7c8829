"""
Two linear components when a ray is glued on
=============================================

Gluing the ray ``0 -> -1 -> -2 -> ...`` onto the zigzag gives a quiver of type
A_inf^inf.  Its non-rrep indecomposables are the thin modules ``M_i`` (now for
every integer ``i``) and the module ``M_inf`` that is one-dimensional
everywhere.  They fall into two chains, one of which stops at ``M_inf``.
"""

from lfrep.chains import chain_explore, thin_family
from lfrep.fixtures import example2, example2_full, example2_module
from lfrep.homs import is_isomorphic
from lfrep.inventory import component_inventory

qp = example2()
print("inventory:", component_inventory(qp).to_json())

# From M_inf, only leftward growth is possible.
chain = chain_explore(qp, example2_full(qp), 3)
print("\nfrom M_inf:", " -> ".join(chain.labels))
print("  right end:", chain.right_end)

# From M_0 the chain runs through negative indices on the left.
chain = chain_explore(qp, example2_module(0, qp), 4)
print("\nfrom M_0:  ", " -> ".join(chain.labels))
print("  links:", [l.kind for l in chain.links])

# Which thin modules on a radius-4 window fall outside rrep?
named = {f"M_{i}": example2_module(i, qp) for i in range(-4, 5)}
named["M_inf"] = example2_full(qp)
print("\nthin modules outside rrep:")
for member in thin_family(qp, 4):
    if not member.in_rrep:
        name = next(k for k, m in named.items() if is_isomorphic(m, member.rep))
        print(f"  {member.label:<28} = {name}")
