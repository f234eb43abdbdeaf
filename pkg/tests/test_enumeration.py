import json

import pytest
from hypothesis import given, settings, strategies as st

from weierloci import _kernels
from weierloci import enumeration as en
from weierloci import semigroup as sg
from weierloci.enumeration import Case
from weierloci._kernels import _pytree

# frozen values of the brute-force oracle (brute_force_enumerate)
KNOWN_COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592]


def gapsets(semigroups):
    return [H.gaps for H in semigroups]


@pytest.mark.parametrize("g", range(9))
def test_tree_equals_brute_force(g):
    assert gapsets(en.enumerate_genus(g)) == gapsets(en.brute_force_enumerate(g))


def test_brute_force_oracle_counts():
    assert [len(en.brute_force_enumerate(g)) for g in range(11)] == KNOWN_COUNTS[:11]


def test_enumeration_examples():
    assert en.enumerate_genus(1) == [sg.from_generators([2, 3])]
    assert en.enumerate_genus(2) == [sg.from_generators([3, 4, 5]), sg.from_generators([2, 5])]
    assert len(en.enumerate_genus(4)) == 7
    assert len(en.enumerate_genus(6)) == 23


def test_lexicographic_order():
    gl = gapsets(en.enumerate_genus(7))
    assert gl == sorted(gl)


def test_count_by_genus():
    assert en.count_by_genus(12) == KNOWN_COUNTS


def test_count_to_default_bound():
    assert en.count_by_genus(25)[25] == 467224


def test_bounds_and_errors():
    with pytest.raises(en.EnumerationError):
        en.enumerate_genus(-1)
    with pytest.raises(en.EnumerationError):
        en.enumerate_genus(26)
    with pytest.raises(en.EnumerationError):
        en.count_by_genus(30)
    with pytest.raises(en.EnumerationError):
        en.brute_force_enumerate(11)
    assert len(en.enumerate_genus(9, bound=9)) == 118


@pytest.mark.parametrize("workers", [2, 3])
def test_parallel_matches_serial(workers):
    assert en.enumerate_genus(11, workers=workers) == en.enumerate_genus(11, workers=1)


def test_threads_env(monkeypatch):
    monkeypatch.setenv(en.THREADS_ENV, "2")
    assert len(en.enumerate_genus(10)) == 204


# -- kernels ------------------------------------------------------------------------

def test_backend_reported():
    assert _kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("g", [0, 1, 5, 10, 14])
def test_kernels_agree(g):
    assert sorted(_kernels.enumerate_tree((), g)) == sorted(_pytree.enumerate_tree((), g))
    assert _kernels.count_tree((), g) == _pytree.count_tree((), g)


def test_kernel_subtree_roots():
    roots = _pytree.enumerate_tree((), 2)
    total = sum(len(_kernels.enumerate_tree(r, 9)) for r in roots)
    assert total == KNOWN_COUNTS[9]


def test_kernel_limits():
    for mod in (_kernels, _pytree):
        with pytest.raises(ValueError):
            mod.count_tree((), mod.MAX_GENUS + 1)
        with pytest.raises(ValueError):
            mod.enumerate_tree((1, 2, 3), 2)


# -- tree nodes ---------------------------------------------------------------------

def test_tree_node_children_have_genus_plus_one():
    for H in en.enumerate_genus(5):
        node = en.tree_node(H)
        for k in node.removable:
            assert k > H.frobenius and k in H.minimal_generators
        for child in node.children():
            assert child.semigroup.genus == H.genus + 1
            sg.from_gaps(child.semigroup.gaps)         # closed complement


def test_tree_children_partition_next_genus():
    kids = [c.semigroup for H in en.enumerate_genus(6) for c in en.tree_node(H).children()]
    assert sorted(gapsets(kids)) == gapsets(en.enumerate_genus(7))


# -- classification ------------------------------------------------------------------

def test_classify_examples():
    v = en.classify(sg.from_generators([5, 7, 8, 11]))
    assert v.generator_case is Case.R4_NONSYMMETRIC and v.case is Case.R4_NONSYMMETRIC
    assert v.label == "N(6)_13"
    assert en.classify(sg.from_generators([5, 7, 8, 9])).case is Case.WPS_R4_SYMMETRIC
    assert en.classify(sg.from_generators([3, 7, 11])).case is Case.WPS_R_LE_3


def test_classify_table_rows():
    for row in en.paper_table():
        v = en.classify(row.semigroup)
        assert v.case is Case.TABLE_CASE and v.in_table
        assert v.label == row.label
        assert v.generator_case in (Case.R4_NONSYMMETRIC, Case.R_GE_5)
        assert v.as_dict()["case"] == "table_case"


@pytest.mark.parametrize("H", [H for g in range(8) for H in en.enumerate_genus(g)], ids=str)
def test_case_is_function_of_r_symmetry_membership(H):
    v = en.classify(H)
    sym = sg.is_symmetric(H)
    if H in en.table_semigroups():
        expected = Case.TABLE_CASE
    elif H.r <= 3:
        expected = Case.WPS_R_LE_3
    elif H.r == 4:
        expected = Case.WPS_R4_SYMMETRIC if sym else Case.R4_NONSYMMETRIC
    else:
        expected = Case.R_GE_5
    assert v.case is expected
    assert (v.genus, v.r, v.weight, v.symmetric) == (H.genus, H.r, sg.weight(H), sym)


# -- golden table ----------------------------------------------------------------------

GOLDEN = [
    ("N(5)_8", [5, 7, 8, 9, 11], [0, 1, 2, 3, 5], [0, 0, 0, 0, 1]),
    ("N(6)_5", [4, 9, 10, 11], [0, 1, 2, 4, 5, 6], [0, 0, 0, 1, 1, 1]),
    ("N(6)_11", [5, 8, 9, 11, 12], [0, 1, 2, 3, 5, 6], [0, 0, 0, 0, 1, 1]),
    ("N(6)_12", [5, 7, 9, 11, 13], [0, 1, 2, 3, 5, 7], [0, 0, 0, 0, 1, 2]),
    ("N(6)_18", [6, 8, 9, 10, 11, 13], [0, 1, 2, 3, 4, 6], [0, 0, 0, 0, 0, 1]),
    ("N(6)_19", [6, 7, 9, 10, 11], [0, 1, 2, 3, 4, 7], [0, 0, 0, 0, 0, 2]),
    ("N(6)_20", [6, 7, 8, 10, 11], [0, 1, 2, 3, 4, 8], [0, 0, 0, 0, 0, 3]),
    ("N(6)_21", [6, 7, 8, 9, 11], [0, 1, 2, 3, 4, 9], [0, 0, 0, 0, 0, 4]),
    ("N(6)_22", [6, 7, 8, 9, 10], [0, 1, 2, 3, 4, 10], [0, 0, 0, 0, 0, 5]),
]


def test_golden_rows_present():
    rows = {r.label: r for r in en.paper_table()}
    assert len(rows) == 9
    for label, gens, van, ram in GOLDEN:
        r = rows[label]
        assert list(r.semigroup.minimal_generators) == gens
        assert list(r.vanishing) == van and list(r.ramification) == ram


def test_table_rows_pass_core_invariants():
    for row in en.paper_table():
        H = row.semigroup
        assert sg.from_gaps(H.gaps) == H
        assert sg.vanishing_sequence(H).a == row.vanishing
        assert sg.ramification_and_weight(sg.vanishing_sequence(H)).alpha == row.ramification
        assert row.weight == sum(row.ramification) == sg.weight(H)
        assert 5 <= H.genus <= 6


def test_erratum_row():
    row = next(r for r in en.paper_table() if r.label == "N(6)_12")
    assert row.printed_generators == (5, 8, 9, 11, 13)
    assert sg.from_generators(row.printed_generators).genus == 7
    assert row.semigroup.genus == 6


def test_fixture_file_schema():
    from importlib import resources
    data = json.loads(resources.files("weierloci").joinpath("data/genus6_table.json").read_text())
    assert data["schema_version"] == 1
    assert len(data["rows"]) == 9


# -- accounting of the genus-6 cases ---------------------------------------------------

def test_resolution_accounting():
    statuses = {}
    for g in range(7):
        for H in en.enumerate_genus(g):
            if g >= 2:
                statuses.setdefault(en.resolution_status(H), []).append(H)
    assert "unresolved" not in statuses
    table = statuses["table_case"]
    assert sorted(gapsets(table)) == sorted(gapsets(en.table_semigroups()))
    assert len(table) == 9
    # every semigroup with a non-symmetric four-generator or >= 5 generator set is
    # either in the table, cited as resolved, or the general-point semigroup
    for H in statuses["weighted_projective"]:
        assert H.r <= 3 or (H.r == 4 and sg.is_symmetric(H))
    for H in statuses["resolved_cited"]:
        assert H.r == 4 and not sg.is_symmetric(H)


def test_resolution_status_range():
    with pytest.raises(en.EnumerationError):
        en.resolution_status(en.enumerate_genus(7)[0])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 9))
def test_enumeration_elements_are_valid(g):
    for H in en.enumerate_genus(g):
        assert H.genus == g
        assert sg.from_generators(H.minimal_generators) == H


def test_pure_env_forces_fallback():
    import os
    import subprocess
    import sys
    code = "from weierloci import _kernels; print(_kernels.BACKEND)"
    env = dict(os.environ, WEIERLOCI_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
