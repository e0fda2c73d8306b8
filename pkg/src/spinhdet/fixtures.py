"""Transcribed reference data, loaded with a checksum guard.

The JSON files under ``data/`` were transcribed once from the printed factor
lists and power-sum tables. Nothing in this package writes them; the SHA-256
pins below catch accidental edits.
"""

import hashlib
import json
from functools import lru_cache
from importlib import resources

from .polynomial import LinearForm

CHECKSUMS = {
    "factor_lists.json": "92b31c743f2a15dfd4edc989722bb2413fb33a80c771a378dbc9d53ff4bfdaeb",
    "power_sum_tables.json": "1f9e624c43d4e39cae257265bc4a23cee181abf6632bbe9302b1b01a38ab0d64",
}


class FixtureChecksumError(RuntimeError):
    pass


def _read(name: str) -> bytes:
    return resources.files("spinhdet").joinpath("data", name).read_bytes()


@lru_cache(maxsize=None)
def load(name: str):
    raw = _read(name)
    digest = hashlib.sha256(raw).hexdigest()
    if digest != CHECKSUMS[name]:
        raise FixtureChecksumError(f"{name}: sha256 {digest} does not match pinned value")
    return json.loads(raw)


def _unit(i):
    v = [0] * 8
    v[i - 1] = 1
    return LinearForm(v)


def hdet_factor_fixture() -> list:
    """The 120 distinct linear factors of the full hyperdeterminant."""
    data = load("factor_lists.json")
    forms = [_unit(i) for i in data["hdet_single_variables"]]
    forms += [LinearForm(c) for c in data["hdet_four_variable_forms"]]
    return forms


def wedge4_q_fixture() -> list:
    data = load("factor_lists.json")
    forms = [_unit(i) for i in data["wedge4_q_single_variables"]]
    forms += [LinearForm(c) for c in data["wedge4_q_four_variable_forms"]]
    return forms


def wedge4_t_fixture() -> list:
    return [LinearForm(c) for c in load("factor_lists.json")["wedge4_t_forms"]]


def power_sum_table_data() -> dict:
    """``{degree: [(exponent list, int coefficient), ...]}`` as printed."""
    raw = load("power_sum_tables.json")
    return {
        int(d): [(tuple(e["exp"]), int(e["coeff"])) for e in entries]
        for d, entries in raw.items()
    }
