"""
Component inventories and quasi-wings
=====================================

The shape of an infinite quiver already fixes which kinds of components its
Auslander-Reiten quiver has: whether the preprojective and preinjective
components are complete, how many quasi-wings appear, and whether extra
linear components exist.
"""

from lfrep.dot import export_dot
from lfrep.fixtures import FIXTURES
from lfrep.inventory import component_inventory, inventory_from_representations
from lfrep.quiver import classify_quiver
from lfrep.wings import Bounds, Interval, convexity_violations, quasi_wing

print(f"{'quiver':<13} {'star':<6} {'type':<10} {'P full':<7} {'I full':<7} {'wings':<6} linear")
for name, make in FIXTURES.items():
    qp = make()
    r = classify_quiver(qp)
    inv = component_inventory(qp)
    assert inv == inventory_from_representations(qp)
    print(
        f"{name:<13} {str(r.is_star):<6} {r.dynkin.value:<10} {str(inv.preprojective_full):<7} "
        f"{str(inv.preinjective_full):<7} {str(inv.quasi_wings):<6} {inv.linear_components}"
    )

# A quasi-wing is the convex hull of consecutive quasi-simples in ZA_inf.
for lo, hi in [(0, 0), (0, 2), (0, 4)]:
    w = quasi_wing(Interval(lo, hi))
    print(f"\nW[{lo},{hi}]: {len(w)} vertices, convex: {not convexity_violations(w)}")

# Infinite wings can only be shown through a window.
box = Bounds(-4, 4, 4)
w = quasi_wing(Interval(0, None), box)
print(f"\nW[0,inf) inside {box}: {len(w)} vertices")
print(export_dot(quasi_wing(Interval(0, 2))))
