"""Border-forcing verification for the collared substitution.

The check is edge-level: for each tile t and slot s, every tile u that can sit
across that edge is substituted once, and the two children of u lying along
the shared (now subdivided) edge are read off.  Forcing holds when, for fixed
(t, s), this child pair is the same no matter which compatible u was chosen.
Corner-only neighbors are not enumerated, so the verdict is labeled
"edge-level" rather than claiming the full one-ring statement.

Projecting the tiles down to their 11 uncollared types (interior decoration
plus vertex degrees) breaks the property, and the report exhibits a concrete
non-singleton group, which is the point of collaring in the first place.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apcomplex import (
    CANONICAL_PLACEMENT_PARAMS,
    Placement,
    canonical_placement,
    check_patch,
    subdivided_edge,
)
from .collaring import compatible_neighbors
from .core import CollaredTile
from .dataset import PentagonDataset, SubstitutionRule, load_dataset


@dataclass(frozen=True)
class PatchReport:
    """Internal/boundary consistency of one rule's 6-child patch."""

    rule: int
    passed: bool
    failures: tuple

    def to_dict(self) -> dict:
        return {"rule": self.rule, "passed": self.passed,
                "failures": [dict(f) for f in self.failures]}


def patch_consistency(rule: SubstitutionRule, d: PentagonDataset = None) -> PatchReport:
    """Check that one rule's children fit together as a coherent patch."""
    if d is None:
        d = load_dataset()
    failures = check_patch(d, rule, CANONICAL_PLACEMENT_PARAMS)
    return PatchReport(rule=rule.parent, passed=not failures, failures=failures)


@dataclass(frozen=True)
class ForcingReport:
    """Outcome of the edge-level forcing check.

    perEdgeSide maps (tile, slot) to the distinct substituted-neighbor labels
    observed over all compatible neighbors; the check passes when every one
    of those sets is a singleton.
    """

    depth: int
    perTile: dict
    perEdgeSide: dict
    counterexamples: tuple
    verdict_level: str = "edge-level"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def singleton_count(self) -> int:
        return sum(1 for v in self.perEdgeSide.values() if len(v) == 1)

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "level": self.verdict_level,
            "passed": self.passed,
            "edgeSides": len(self.perEdgeSide),
            "singletons": self.singleton_count(),
            "perTile": {str(k): v for k, v in sorted(self.perTile.items())},
            "counterexamples": [dict(x) for x in self.counterexamples],
        }


def neighbor_labels(d: PentagonDataset, placement: Placement,
                    tile_id: int, slot: int, depth: int = 1) -> tuple:
    """Distinct child sequences along (tile_id, slot) over all neighbors.

    Each compatible neighbor (u, s') is substituted `depth` times; the tiles
    along the shared edge are listed in the (tile_id, slot) walk direction,
    which is the reverse of the neighbor's own walk.
    """
    labels = set()
    for u, sp in compatible_neighbors(d, tile_id, slot):
        seq = [tid for tid, _ in subdivided_edge(d, placement, u, sp, depth)]
        labels.add(tuple(reversed(seq)))
    return tuple(sorted(labels))


def verify_border_forcing_k1(d: PentagonDataset = None, depth: int = 1,
                             placement: Placement = None) -> ForcingReport:
    """Run the edge-level forcing check over all 36 x 5 edge sides."""
    if d is None:
        d = load_dataset()
    if placement is None:
        placement = canonical_placement(d)
    per_edge = {}
    per_tile = {}
    counterexamples = []
    for t in d.tiles:
        ok = True
        for slot in range(1, 6):
            labels = neighbor_labels(d, placement, t.id, slot, depth)
            per_edge[(t.id, slot)] = labels
            if len(labels) != 1:
                ok = False
                counterexamples.append({
                    "tile": t.id, "slot": slot,
                    "labels": [list(x) for x in labels],
                })
        per_tile[t.id] = ok
    return ForcingReport(depth=depth, perTile=per_tile, perEdgeSide=per_edge,
                         counterexamples=tuple(counterexamples))


def degree_pattern(t: CollaredTile) -> tuple:
    """Vertex-degree bits around the tile: entry c is 1 iff corner c+1 has degree 3."""
    return tuple(1 if t.exterior[(c - 1) % 5][2] == 0 else 0 for c in range(5))


def uncollared_classes(d: PentagonDataset = None) -> tuple:
    """The distinct degree patterns over all tiles, sorted (the 11 types)."""
    if d is None:
        d = load_dataset()
    return tuple(sorted({degree_pattern(t) for t in d.tiles}))


def uncollared_projection(t: CollaredTile, classes: tuple = None) -> int:
    """Class index (1-based) of a tile among the uncollared types."""
    if classes is None:
        classes = uncollared_classes()
    return classes.index(degree_pattern(t)) + 1


def rotation_classes(classes) -> int:
    """Degree patterns counted up to cyclic rotation (decorations dropped)."""
    def rep(bits):
        return min(bits[i:] + bits[:i] for i in range(5))
    return len({rep(c) for c in classes})


def verify_border_forcing_uncollared(d: PentagonDataset = None, depth: int = 1,
                                     placement: Placement = None) -> dict:
    """Re-run the forcing check on uncollared class labels; it fails.

    Edge sides are grouped by (class of tile, slot), since uncollared types
    cannot tell apart the collared tiles within a class, and neighbor labels
    are projected to class indices.
    """
    if d is None:
        d = load_dataset()
    if placement is None:
        placement = canonical_placement(d)
    classes = uncollared_classes(d)
    cls = {t.id: uncollared_projection(t, classes) for t in d.tiles}
    groups = {}
    for t in d.tiles:
        for slot in range(1, 6):
            key = (cls[t.id], slot)
            bucket = groups.setdefault(key, set())
            for u, sp in compatible_neighbors(d, t.id, slot):
                seq = [cls[tid] for tid, _ in subdivided_edge(d, placement, u, sp, depth)]
                bucket.add(tuple(reversed(seq)))
    non_singleton = {k: sorted(v) for k, v in groups.items() if len(v) > 1}
    counterexample = None
    if non_singleton:
        k = sorted(non_singleton)[0]
        counterexample = {"class": k[0], "slot": k[1],
                          "labels": [list(x) for x in non_singleton[k]]}
    return {
        "depth": depth,
        "level": "edge-level",
        "classes": len(classes),
        "rotationClasses": rotation_classes(classes),
        "groups": len(groups),
        "singletons": len(groups) - len(non_singleton),
        "passed": not non_singleton,
        "counterexample": counterexample,
    }
