import random

from tilespace.dataset import PentagonDataset, SubstitutionRule
from tilespace.forcing import (degree_pattern, neighbor_labels,
                               patch_consistency, rotation_classes,
                               uncollared_classes, uncollared_projection,
                               verify_border_forcing_k1,
                               verify_border_forcing_uncollared)


def test_all_rules_patch_consistent(d):
    for r in d.rules:
        report = patch_consistency(r, d)
        assert report.passed, report.failures


def test_edge_level_forcing_at_k1(d):
    report = verify_border_forcing_k1(d)
    assert report.depth == 1
    assert report.verdict_level == "edge-level"
    assert len(report.perEdgeSide) == 180
    assert report.singleton_count() == 180
    assert report.passed
    assert report.counterexamples == ()


def test_forcing_still_holds_at_depth_two(d):
    report = verify_border_forcing_k1(d, depth=2)
    assert report.passed
    assert len(report.perEdgeSide) == 180


def test_forcing_is_monotone_on_sample(d, placement):
    # once a side is forced at depth 1 it stays forced deeper
    rng = random.Random(11)
    for tid in rng.sample(range(1, 37), 5):
        for slot in range(1, 6):
            l1 = neighbor_labels(d, placement, tid, slot, depth=1)
            l2 = neighbor_labels(d, placement, tid, slot, depth=2)
            if len(l1) == 1:
                assert len(l2) == 1


def test_forcing_report_dict_shape(d):
    payload = verify_border_forcing_k1(d).to_dict()
    assert payload["depth"] == 1
    assert payload["level"] == "edge-level"
    assert payload["passed"] is True
    assert payload["edgeSides"] == 180
    assert payload["singletons"] == 180


def test_uncollared_projection_has_eleven_classes(d):
    classes = uncollared_classes(d)
    assert len(classes) == 11
    assert rotation_classes(classes) == 3
    seen = {uncollared_projection(t, classes) for t in d.tiles}
    assert seen == set(range(1, 12))


def test_degree_pattern_matches_zero_markers(d):
    t = d.tile(1)
    pattern = degree_pattern(t)
    assert len(pattern) == 5
    assert set(pattern) <= {0, 1}


def test_uncollared_forcing_fails_concretely(d):
    report = verify_border_forcing_uncollared(d)
    assert report["level"] == "edge-level"
    assert report["classes"] == 11
    assert report["rotationClasses"] == 3
    assert report["groups"] == 55
    assert report["singletons"] == 35
    assert not report["passed"]
    ce = report["counterexample"]
    assert ce is not None
    assert len(ce["labels"]) > 1  # the same bare side admits two label sets


def test_mutated_center_child_is_caught(d):
    rules = list(d.rules)
    rules[0] = SubstitutionRule(parent=1, children=(21,) + d.rule(1).children[1:])
    fake = PentagonDataset(tiles=d.tiles, edges=d.edges, vertices=d.vertices,
                           rules=tuple(rules))
    report = patch_consistency(fake.rule(1), fake)
    assert not report.passed
    kinds = {f["kind"] for f in report.failures}
    assert "internal" in kinds
    details = " ".join(f["detail"] for f in report.failures)
    assert "disagree" in details
