import pytest

from tilespace.dataset import (DatasetError, load_dataset, parse_edges,
                               parse_rules, parse_tiles, serialize_dataset,
                               serialize_tiles, validate_dataset)


def test_counts(d):
    assert (len(d.tiles), len(d.edges), len(d.vertices), len(d.rules)) == \
        (36, 45, 10, 36)


def test_accessors_by_id(d):
    assert d.tile(17).id == 17
    assert d.edge(45).id == 45
    assert d.vertex(10).id == 10
    assert d.rule(29).parent == 29
    with pytest.raises(KeyError):
        d.tile(37)


def test_rules_have_six_children_each(d):
    for r in d.rules:
        assert len(r.children) == 6
        assert r.children[0] == 22  # the central child is shared by all rules


def test_pinned_rule_rows(d):
    assert d.rule(1).children == (22, 11, 8, 14, 1, 26)
    assert d.rule(29).children == (22, 35, 31, 13, 7, 29)


def test_validation_passes_and_reports(d):
    report = validate_dataset(d)
    assert report.passed
    payload = report.to_dict()
    assert payload["passed"] is True
    assert all(c["passed"] for c in payload["checks"])


def test_tiles_round_trip(d):
    text = serialize_tiles(d.tiles)
    assert parse_tiles(text) == d.tiles


def test_full_round_trip(tmp_path, d):
    serialize_dataset(d, tmp_path)
    again = load_dataset(tmp_path)
    assert again == d


def test_header_is_required():
    with pytest.raises(DatasetError):
        parse_tiles("1,1,2,0,1,2,0,1,2,0,1,2,0,1,2,0\n")


def test_duplicate_ids_rejected(d):
    text = serialize_tiles(d.tiles[:1] + d.tiles[:1] + d.tiles[2:])
    with pytest.raises(DatasetError):
        parse_tiles(text)


def test_malformed_rule_row():
    with pytest.raises(DatasetError):
        parse_rules("id, c1, c2, c3, c4, c5, c6\n1, 22, 11, 8, 14, 1\n")
