"""Which kinds of Auslander-Reiten components a quiver has, read off its shape."""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import ClassificationReport, Dynkin, QuiverPresentation, classify_quiver, ray_walk
from .rep import injective_at, projective_at, walk_rep
from .status import is_in_rrep

OMEGA = "omega"

_WINGS = {Dynkin.A_INF: 0, Dynkin.D_INF: 1, Dynkin.A_INF_INF: 2}


@dataclass(frozen=True)
class ComponentInventory:
    preprojective_full: bool  # the preprojective component is all of N Q^op
    preinjective_full: bool
    quasi_wings: int | str  # 0, 1, 2 or "omega"
    right_infinite_wings: bool
    left_infinite_wings: bool
    finite_wings: bool
    linear_components: bool

    def to_json(self) -> dict:
        return {
            "preprojective_full": self.preprojective_full,
            "preinjective_full": self.preinjective_full,
            "quasi_wings": self.quasi_wings,
            "wing_constraints": {
                "right_infinite": self.right_infinite_wings,
                "left_infinite": self.left_infinite_wings,
                "finite": self.finite_wings,
            },
            "linear_components": self.linear_components,
        }


def inventory_from_classification(report: ClassificationReport) -> ComponentInventory:
    sourced = report.has_infinite_sourced_paths
    sinked = report.has_infinite_sinked_paths
    return ComponentInventory(
        preprojective_full=not sourced,
        preinjective_full=not sinked,
        quasi_wings=_WINGS.get(report.dynkin, OMEGA),
        right_infinite_wings=sinked,
        left_infinite_wings=sourced,
        finite_wings=sourced and sinked,
        linear_components=not report.is_star,
    )


def component_inventory(qp: QuiverPresentation) -> ComponentInventory:
    """Rejects finite and disconnected quivers (through the classifier)."""
    return inventory_from_classification(classify_quiver(qp))


def inventory_from_representations(qp: QuiverPresentation) -> ComponentInventory:
    """Second route to the same flags, through representations rather than tail words.

    * an infinite sourced path exists iff some projective is infinite-dimensional;
    * an infinite sinked path exists iff some injective is infinite-dimensional;
    * the quiver is a star iff every thin ray along a tail lies in rrep.

    Projectives and injectives are checked at the core vertices and where each
    tail settles, which between them start every infinite path.
    """
    report = classify_quiver(qp)
    points = list(qp.core.vertices) + [qp.tail_vertex(k, t.settle_depth) for k, t in enumerate(qp.tails)]
    sourced = any(not projective_at(qp, v).is_finite_dimensional for v in points)
    sinked = any(not injective_at(qp, v).is_finite_dimensional for v in points)
    star = all(is_in_rrep(walk_rep(qp, ray_walk(qp, k))) for k in range(len(qp.tails)))
    return ComponentInventory(
        preprojective_full=not sourced,
        preinjective_full=not sinked,
        quasi_wings=_WINGS.get(report.dynkin, OMEGA),
        right_infinite_wings=sinked,
        left_infinite_wings=sourced,
        finite_wings=sourced and sinked,
        linear_components=not star,
    )
