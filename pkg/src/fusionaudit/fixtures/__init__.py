"""Versioned category spec files used by tests and the documentation.

Each fixture is a groupoid spec as accepted by groupoid_from_spec; tests
must load these files rather than regenerate the data inline.
"""

import json
from importlib import resources

from ..groupoid import groupoid_from_spec

FIXTURE_NAMES = ("vec", "vec_z2", "vec_s3", "pair2", "pair3", "union_z2_z2")

__all__ = ["FIXTURE_NAMES", "fixture_spec", "load_fixture"]


def fixture_spec(name):
    if name not in FIXTURE_NAMES:
        raise KeyError("unknown fixture %r (have %s)"
                       % (name, ", ".join(FIXTURE_NAMES)))
    data = resources.files(__package__).joinpath(name + ".json").read_text()
    return json.loads(data)


def load_fixture(name):
    return groupoid_from_spec(fixture_spec(name))
