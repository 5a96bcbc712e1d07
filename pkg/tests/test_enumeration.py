import pytest

from tilespace.core import CollaredTile
from tilespace.enumeration import (EXCLUDED_ROWS, FORBIDDEN_TRIPLES,
                                   PATTERN_ONE_TILE, EnumerationMismatchError,
                                   enumerate_collared_tiles,
                                   enumeration_report, exclusion_reason,
                                   expand_pattern_row, implied_degree3_vertex,
                                   load_pattern_rows, y_candidates)


def test_twenty_pattern_rows_with_one_open_slot_each():
    rows = load_pattern_rows()
    assert len(rows) == 20
    for row in rows:
        open_slots = [(g, p) for g in range(5) for p in range(3)
                      if row.template[g][p] == -1]
        assert len(open_slots) == 1


def test_exclusions_hit_exactly_five_rows():
    rows = load_pattern_rows()
    excluded = {}
    for row in rows:
        reason = exclusion_reason(row)
        if reason:
            excluded[row.rowid] = reason
    assert set(excluded) == set(EXCLUDED_ROWS)


def test_excluded_rows_ban_a_forbidden_triple():
    # choosing y=0 on these rows would create a degree-3 vertex whose
    # decoration triple is one of the five forbidden ones
    rows = {r.rowid: r for r in load_pattern_rows()}
    reasons = {}
    for row in rows.values():
        reason = exclusion_reason(row)
        if reason is not None:
            assert reason == implied_degree3_vertex(row)
            assert reason in FORBIDDEN_TRIPLES
            reasons[row.rowid] = reason
    assert set(reasons) == EXCLUDED_ROWS
    # each forbidden triple is the culprit exactly once across the table
    assert set(reasons.values()) == FORBIDDEN_TRIPLES


def test_y_candidates_drop_only_the_zero_choice():
    rows = {r.rowid: r for r in load_pattern_rows()}
    for rowid in EXCLUDED_ROWS:
        row = rows[rowid]
        free = y_candidates(row, apply_exclusion=True)
        full = y_candidates(row, apply_exclusion=False)
        assert set(full) - set(free) == {0}


def test_candidate_counts_sum_to_35():
    report = enumeration_report()
    per_row = {r["row"]: r for r in report["perRow"]}
    assert len(per_row) == 20
    excluded = {rid for rid, r in per_row.items() if r["excluded"]}
    assert excluded == set(EXCLUDED_ROWS)
    assert sum(r["candidatesAfterExclusion"] for r in per_row.values()) == \
        report["pattern2Candidates"]
    assert report["pattern2Candidates"] == 35
    assert report["derived"] == 36
    assert report["match"] == "exact"


def test_pattern_one_tile_is_separate():
    rows = load_pattern_rows()
    expanded = [t for row in rows for t in expand_pattern_row(row)]
    assert CollaredTile(PATTERN_ONE_TILE) not in expanded


def test_rederivation_matches_dataset(d):
    tiles = enumerate_collared_tiles(d)
    assert len(tiles) == 36
    assert {t.exterior for t in tiles} == {t.exterior for t in d.tiles}
    assert {t.id for t in tiles} == set(range(1, 37))


def test_mismatch_is_loud(d):
    broken = d.tiles[:35]  # drop one target tile
    fake = type(d)(tiles=broken, edges=d.edges, vertices=d.vertices,
                   rules=d.rules)
    with pytest.raises(EnumerationMismatchError) as err:
        enumerate_collared_tiles(fake)
    assert err.value.extra  # the derived tile that lost its dataset partner
