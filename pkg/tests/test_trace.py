"""The traceability table must stay mechanically honest.

Labels match the manifest, every cited test exists in this repository,
and every cited operation resolves inside the package.
"""

import importlib
import os
import re

from fusionaudit.trace import MANIFEST, trace_table, render_markdown

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def test_manifest_matches_table():
    table = trace_table()
    assert tuple(e.label for e in table) == MANIFEST
    assert len(set(MANIFEST)) == len(MANIFEST)
    assert len(table) >= 20


def test_labels_are_kebab_slugs():
    for label in MANIFEST:
        assert re.fullmatch(r"[a-z0-9]+(-[a-z0-9]+)*", label), label


def test_cited_tests_exist():
    for entry in trace_table():
        assert entry.tests, entry.label
        for test_id in entry.tests:
            path, _, name = test_id.partition("::")
            assert name, test_id
            full = os.path.join(ROOT, path)
            assert os.path.isfile(full), test_id
            with open(full) as fh:
                source = fh.read()
            assert re.search(r"^def %s\(" % re.escape(name), source,
                             re.MULTILINE), test_id


def test_cited_operations_resolve():
    for entry in trace_table():
        for dotted in entry.operation.split(" / "):
            mod_name, _, attr = dotted.strip().rpartition(".")
            mod = importlib.import_module("fusionaudit." + mod_name)
            obj = getattr(mod, attr)
            assert callable(obj) or isinstance(obj, type), dotted


def test_statements_and_render():
    md = render_markdown()
    for entry in trace_table():
        assert entry.statement == entry.statement.strip()
        assert entry.label in md
        for test_id in entry.tests:
            assert test_id in md
    assert md.startswith("| statement |")
