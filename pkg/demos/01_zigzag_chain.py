"""
A linear component on the infinite zigzag
==========================================

The zigzag ``0 <- 1 -> 2 <- 3 -> 4 <- ...`` has no infinite path, so the
representations that are not built from finitely presented pieces are the
thin modules ``M_i`` living on every vertex ``j >= i``.  We watch the
irreducible maps between them line up into a single chain.
"""

from lfrep.chains import chain_explore, repeated_classes
from lfrep.dot import export_dot
from lfrep.fixtures import zigzag, zigzag_module
from lfrep.homs import hom_dim, morphism_parts
from lfrep.quiver import classify_quiver
from lfrep.status import is_in_rrep, presentation_status

qp = zigzag()
print("classification:", classify_quiver(qp).to_json())

# The modules M_0 .. M_6 and the dimensions of the Hom spaces between them.
M = [zigzag_module(i, qp) for i in range(7)]
print("\ndim Hom(M_i, M_j)")
print("     " + " ".join(f"{j:>2}" for j in range(7)))
for i in range(7):
    print(f"M_{i}: " + " ".join(f"{hom_dim(M[i], M[j]):>2}" for j in range(7)))

# None of them is finitely generated or co-generated, and none is in rrep.
for i in (0, 1):
    print(f"\nM_{i}:", presentation_status(M[i]).to_json(), "rrep:", is_in_rrep(M[i]))

# Grow the chain from M_0, two steps on each side.
chain = chain_explore(qp, M[0], 4)
print("\nchain:", " -> ".join(chain.labels))
for link in chain.links:
    parts = morphism_parts(link.morphism)
    if link.kind == "mono":
        print(f"  mono, cokernel of dimension {parts.cokernel.trimmed().total_dim()}")
    else:
        print(f"  epi, kernel of dimension {parts.kernel.trimmed().total_dim()}")
print("repeated isomorphism classes:", repeated_classes(chain.members))

print()
print(export_dot(chain))
