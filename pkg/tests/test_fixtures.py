import pytest

from spinhdet import fixtures


def test_checksums_hold():
    for name in fixtures.CHECKSUMS:
        assert fixtures.load(name)


def test_tampered_fixture_is_rejected(monkeypatch):
    fixtures.load.cache_clear()
    monkeypatch.setattr(fixtures, "_read", lambda name: b'{"tampered": true}')
    with pytest.raises(fixtures.FixtureChecksumError):
        fixtures.load("factor_lists.json")
    fixtures.load.cache_clear()


def test_fixture_shapes():
    assert len(fixtures.hdet_factor_fixture()) == 120
    assert len(fixtures.wedge4_q_fixture()) == 63
    assert len(fixtures.wedge4_t_fixture()) == 28
    assert sorted(fixtures.power_sum_table_data()) == [2, 8, 12, 14, 18, 20, 24, 30]
