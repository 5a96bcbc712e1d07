import pytest

from tilespace.invlimit import (Thread, ThreadError, enumerate_threads,
                                random_thread, realize, shift_left,
                                shift_right)


def test_thread_validation():
    with pytest.raises(ThreadError):
        Thread(0)
    with pytest.raises(ThreadError):
        Thread("1")
    with pytest.raises(ThreadError):
        Thread(1, (0,))
    with pytest.raises(ThreadError):
        Thread(1, (7,))
    with pytest.raises(ThreadError):
        Thread(1, (3.0,))
    assert Thread(1, (6,)).depth == 1


def test_realize_examples(d):
    assert realize(Thread(22), d) == (22,)
    assert realize(Thread(1, (5,)), d) == (1, 1)
    assert realize(Thread(29, (6,)), d) == (29, 29)


def test_realize_depth_matches_addresses(d):
    t = Thread(4, (1, 2, 3))
    assert len(realize(t, d)) == t.depth + 1
    assert realize(t, d)[-1] == 4


def test_counts_to_depth_four(d):
    for n in range(5):
        total = sum(1 for _ in enumerate_threads(n, d=d))
        assert total == 36 * 6 ** n


def test_counts_per_base(d):
    for base in (1, 17, 36):
        assert sum(1 for _ in enumerate_threads(2, base_face=base, d=d)) == 36


def test_shift_right_drops_deepest_level(d):
    for t in (Thread(1, (5, 2)), Thread(29, (6, 6, 1)), Thread(36, (4,))):
        assert realize(shift_right(t, d), d) == realize(t, d)[:-1]


def test_shift_right_at_depth_zero_fails(d):
    with pytest.raises(ThreadError, match="depth-0"):
        shift_right(Thread(22), d)


def test_shift_left_validates_extension(d):
    with pytest.raises(ThreadError, match="not the old base"):
        shift_left(Thread(22), 1, 5, d)
    with pytest.raises(ThreadError):
        shift_left(Thread(22), 1, 0, d)
    with pytest.raises(ThreadError):
        shift_left(Thread(22), 99, 1, d)


def test_shift_section_exhaustive_depth_two(d):
    pairs = [(r.parent, pos + 1, child)
             for r in d.rules for pos, child in enumerate(r.children)]
    checked = 0
    for t in enumerate_threads(2, d=d):
        for parent, pos, child in pairs:
            if child != t.base_face:
                continue
            ext = shift_left(t, parent, pos, d)
            assert ext.depth == 3
            assert shift_right(ext, d) == t
            assert realize(t, d) == realize(ext, d)[:-1]
            checked += 1
    assert checked > 0


def test_random_thread_is_seeded(d):
    a = random_thread(4, seed=9, d=d)
    b = random_thread(4, seed=9, d=d)
    c = random_thread(4, seed=10, d=d)
    assert a == b
    assert a.depth == 4
    assert a != c or realize(a, d) != realize(c, d)
