from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from weierloci import lattice as lat
from weierloci.lattice import DivisorClass, PLANE

DP5 = lat.fixture("dp5")
TAC = lat.fixture("tacnode_pair")
P2 = lat.plane_points(0)

# the K^2 = 5 family: four blowups resolving total delta 4 by double points
K2_FIVE_FAMILY = [lat.config_for_deltas(ds) for ds in
                  [(1, 1, 1, 1), (4,), (3, 1), (2, 2), (2, 1, 1)]] + [DP5, TAC, lat.fixture("a3a4")]


def brute_negative(k, square, kdeg, box=6, d_min=0):
    """Independent oracle: scan the whole box of coefficient vectors."""
    out = set()
    for d in range(d_min, box + 1):
        for m in product(range(-box, box + 1), repeat=k):
            if d * d - sum(x * x for x in m) == square and -3 * d - sum(m) == kdeg:
                out.add((d, *m))
    return out


# -- pairing ----------------------------------------------------------------------

def test_pairing_examples():
    H = DivisorClass.hyperplane(0)
    assert lat.intersection_pairing(H, H) == 1
    e = DivisorClass.exceptional(2, 4)
    assert lat.intersection_pairing(e, e, DP5) == -1


def test_pairing_rank_mismatch():
    with pytest.raises(lat.LatticeError):
        lat.intersection_pairing(DivisorClass.of(1, 0), DivisorClass.of(1))
    with pytest.raises(lat.LatticeError):
        lat.intersection_pairing(DivisorClass.of(1, 0), DivisorClass.of(1, 0), DP5)


vectors = st.integers(0, 6).flatmap(
    lambda k: st.tuples(*[st.lists(st.integers(-9, 9), min_size=k + 1, max_size=k + 1)] * 3))


@settings(max_examples=200, deadline=None)
@given(vectors)
def test_pairing_symmetric_bilinear(vs):
    a, b, c = (DivisorClass(tuple(v)) for v in vs)
    p = lat.intersection_pairing
    assert p(a, b) == p(b, a)
    assert p(a + b, c) == p(a, c) + p(b, c)
    assert p(a * 3, b) == 3 * p(a, b)


@pytest.mark.parametrize("k", range(6))
def test_signature(k):
    # H is positive, the e_i span a negative definite complement orthogonal to H
    basis = [DivisorClass.hyperplane(k)] + [DivisorClass.exceptional(i, k) for i in range(k)]
    gram = [[lat.intersection_pairing(a, b) for b in basis] for a in basis]
    assert gram == [[1 if i == j == 0 else (-1 if i == j else 0) for j in range(k + 1)] for i in range(k + 1)]


# -- canonical class, adjunction, h0 ----------------------------------------------------

def test_canonical_examples():
    K = lat.canonical_class(DP5)
    assert lat.intersection_pairing(K, K, DP5) == 5
    K0 = lat.canonical_class(P2)
    assert K0.coords == (-3,) and lat.intersection_pairing(K0, K0) == 9
    assert lat.to_proper_basis(lat.canonical_class(TAC), TAC) == (-3, 1, 2, 1, 2)


def test_adjunction_examples():
    K = lat.canonical_class(DP5)
    assert lat.adjunction_genus(-K, DP5) == 1
    assert lat.adjunction_genus(K * -2, DP5) == 6
    assert lat.adjunction_genus(DivisorClass.hyperplane(0), P2) == 0
    with pytest.raises(lat.LatticeError):
        lat.adjunction_genus(DivisorClass.of(0, 2, 0, 0, 0), DP5)      # 2e_1: genus -2


def test_h0_examples():
    assert lat.anticanonical_h0(DP5, 1) == 6
    assert lat.anticanonical_h0(DP5, 2) == 16
    assert lat.anticanonical_h0(P2, 1) == 10 == 5 * 4 // 2        # plane cubics
    with pytest.raises(lat.LatticeError):
        lat.anticanonical_h0(lat.plane_points(9), 1)
    with pytest.raises(lat.LatticeError):
        lat.anticanonical_h0(DP5, 0)


def test_h0_needs_flag():
    cfg = lat.BlowupConfig((PLANE,) * 4, name="unflagged", big_and_nef=False)
    with pytest.raises(lat.LatticeError):
        lat.anticanonical_h0(cfg, 1)


@pytest.mark.parametrize("cfg", K2_FIVE_FAMILY, ids=lambda c: c.name)
def test_k2_five_family_invariants(cfg):
    K = lat.canonical_class(cfg)
    assert lat.intersection_pairing(K, K, cfg) == 5
    assert lat.adjunction_genus(-K, cfg) == 1
    assert lat.adjunction_genus(K * -2, cfg) == 6
    assert [lat.anticanonical_h0(cfg, d) for d in (1, 2, 3)] == [6, 16, 31]


# -- negative curves ---------------------------------------------------------------

def test_dp5_lines():
    minus_one, minus_two = lat.negative_curves(DP5)
    assert len(minus_one) == 10 and minus_two == []
    exc = {DivisorClass.exceptional(i, 4) for i in range(4)}
    conics = {DivisorClass((1, *[-1 if t in pair else 0 for t in range(4)]))
              for pair in combinations(range(4), 2)}
    assert set(minus_one) == exc | conics


@pytest.mark.parametrize("k", range(5))
def test_minus_one_matches_box_oracle(k):
    cfg = lat.plane_points(k)
    assert {D.coords for D in lat.exceptional_classes(cfg)} == brute_negative(k, -1, -1)
    assert {D.coords for D in lat.lattice_roots(cfg)} == brute_negative(k, -2, 0, d_min=-6)


def test_exceptional_and_root_counts():
    # classical counts of exceptional classes and roots for k = 0..8
    assert [len(lat.exceptional_classes(lat.plane_points(k))) for k in range(9)] == \
        [0, 1, 3, 6, 10, 16, 27, 56, 240]
    assert [len(lat.lattice_roots(lat.plane_points(k))) for k in range(9)] == \
        [0, 0, 2, 8, 20, 40, 72, 126, 240]


def test_negative_curve_search_limit():
    with pytest.raises(lat.LatticeError):
        lat.negative_curves(lat.plane_points(9))


def test_tacnode_minus_two():
    minus_one, minus_two = lat.negative_curves(TAC)
    proper = {lat.to_proper_basis(D, TAC) for D in minus_two}
    assert proper == {(0, 1, 0, 0, 0), (0, 0, 0, 1, 0)}      # E1, E2
    for D in minus_two:
        assert lat.intersection_pairing(D, D, TAC) == -2
        assert lat.intersection_pairing(D, lat.canonical_class(TAC), TAC) == 0


def test_no_blowups_empty():
    assert lat.negative_curves(P2) == ([], [])


def test_quadruples():
    quads = lat.blowdown_quadruples(DP5)
    assert len(quads) == 5
    assert set(tuple(DivisorClass.exceptional(i, 4) for i in range(4))) in [set(q) for q in quads]
    lines = lat.exceptional_classes(DP5)
    for L in lines:
        assert sum(L in q for q in quads) == 2
    with pytest.raises(lat.LatticeError):
        lat.blowdown_quadruples(TAC)


# -- basis change --------------------------------------------------------------------

def _matmul(A, B):
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def _det(M):
    M = [list(map(int, r)) for r in M]
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


@pytest.mark.parametrize("cfg", K2_FIVE_FAMILY + [P2, lat.config_for_deltas((3, 2, 1))], ids=lambda c: c.name)
def test_basis_change_unimodular_and_preserves_pairing(cfg):
    P = [list(r) for r in lat.proper_transform_basis(cfg)]
    n = cfg.rank
    assert abs(_det(P)) == 1
    G = [[(1 if i == 0 else -1) if i == j else 0 for j in range(n)] for i in range(n)]
    gram = _matmul(_matmul(P, G), [list(c) for c in zip(*P)])
    # Gram matrix of the proper basis computed by the pairing equals P G P^T
    basis = [DivisorClass(tuple(r)) for r in P]
    assert gram == [[lat.intersection_pairing(a, b, cfg) for b in basis] for a in basis]


def test_identity_without_blowups():
    assert lat.proper_transform_basis(P2) == ((1,),)


def test_tacnode_classes():
    K = lat.canonical_class(TAC)
    S = K * -2
    assert lat.to_proper_basis(S, TAC) == (6, -2, -4, -2, -4)
    E1, F1, E2, F2 = (lat.from_proper_basis([int(j == i) for j in range(5)], TAC) for i in range(1, 5))
    p = lambda a, b: lat.intersection_pairing(a, b, TAC)
    assert p(E1, E1) == p(E2, E2) == -2
    assert p(F1, F1) == p(F2, F2) == -1
    assert p(E1, F1) == p(E2, F2) == 1
    assert p(E1, F2) == p(E1, E2) == 0
    assert p(S, F1) == p(S, F2) == 2


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-8, 8), min_size=5, max_size=5))
def test_proper_basis_round_trip(coords):
    D = DivisorClass(tuple(coords))
    assert lat.from_proper_basis(lat.to_proper_basis(D, TAC), TAC) == D


def test_config_validation():
    with pytest.raises(lat.LatticeError):
        lat.BlowupConfig((0,))
    with pytest.raises(lat.LatticeError):
        lat.BlowupConfig((PLANE, 1))
    with pytest.raises(lat.LatticeError):
        lat.fixture("dp6")


def test_basis_labels():
    assert TAC.basis_labels(proper=True) == ["H", "E1", "F1", "E2", "F2"]
    assert DP5.basis_labels() == ["H", "e1", "e2", "e3", "e4"]
    assert lat.config_for_deltas((2, 1)).basis_labels(proper=True) == ["H", "E1", "F1", "E2"]


def test_format():
    assert lat.canonical_class(DP5).format(DP5.basis_labels()) == "-3H + e1 + e2 + e3 + e4"


# -- singularity budget ---------------------------------------------------------------

def test_delta():
    assert lat.delta_invariant(3) == 2
    assert lat.delta_invariant(1) == 1
    assert lat.delta_invariant(4) == 2
    with pytest.raises(lat.LatticeError):
        lat.delta_invariant(0)


def test_budget_sextic_genus_six():
    assert sorted(lat.singularity_budget(6, 6)) == sorted([(4,), (3, 1), (2, 2), (2, 1, 1)])
    mild = lat.singularity_budget(6, 6, include_mild=True)
    assert (1, 1, 1, 1) in mild and len(mild) == 5
    with pytest.raises(lat.LatticeError):
        lat.singularity_budget(4, 4)
    with pytest.raises(lat.LatticeError):
        lat.singularity_budget(2, 0)


@pytest.mark.parametrize("deg, g", [(5, 2), (6, 3), (7, 10)])
def test_budget_parts_sum(deg, g):
    total = (deg - 1) * (deg - 2) // 2 - g
    for ms in lat.singularity_budget(deg, g, include_mild=True):
        assert sum(ms) == total and all(1 <= x <= 4 for x in ms)
