import pytest

from torblocks.rootdata import (
    FiniteWeight,
    GammaClass,
    LieType,
    RootDataError,
    admissible_types,
    all_gamma_classes,
    build_root_system,
    fundamental_weight,
    gamma_class,
    gamma_group,
    gamma_order,
    in_root_lattice,
    j0_set,
    zero_weight,
)

A2 = LieType.parse("A2")

# |R+| for each type, from the standard closed forms
ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": {6: 36, 7: 63, 8: 120},
    "F": {4: 24},
    "G": {2: 6},
}

EXPECTED_J0 = {
    "A1": {1}, "A4": {1, 2, 3, 4}, "B3": {3}, "C2": {1}, "C5": {1},
    "D4": {1, 3, 4}, "D5": {1, 4, 5}, "E6": {1, 6}, "E7": {7},
    "E8": set(), "F4": set(), "G2": set(),
}

EXPECTED_GAMMA = {
    "A3": [4], "B4": [2], "C3": [2], "D4": [2, 2], "D5": [4],
    "E6": [3], "E7": [2], "E8": [], "F4": [], "G2": [],
}


def test_parse_and_bounds():
    assert LieType.parse("A1").rank == 1
    assert str(LieType.parse("E8")) == "E8"
    for bad in ("B2", "C1", "D3", "E5", "F3", "G1", "H2", "A0"):
        with pytest.raises(RootDataError):
            LieType.parse(bad)


def test_positive_root_counts():
    for t in admissible_types(8):
        rs = build_root_system(t)
        table = ROOT_COUNTS[t.family]
        want = table[t.rank] if isinstance(table, dict) else table(t.rank)
        assert len(rs.positive_roots) == want, t


def test_highest_root_norm_and_comarks():
    for t in admissible_types(8):
        rs = build_root_system(t)
        assert rs.root_norm(rs.theta) == 2
        assert all(a >= 1 for a in rs.comarks)
        # dual Coxeter number minus one
        assert sum(rs.comarks) == {
            "A": t.rank, "B": 2 * t.rank - 2, "C": t.rank,
            "D": 2 * t.rank - 3, "E": {6: 11, 7: 17, 8: 29}.get(t.rank),
            "F": 8, "G": 3}[t.family]


def test_j0_sets():
    for name, want in EXPECTED_J0.items():
        assert j0_set(LieType.parse(name)) == frozenset(want), name


def test_gamma_invariant_factors():
    for name, want in EXPECTED_GAMMA.items():
        assert gamma_group(LieType.parse(name)) == want, name


def test_gamma_order_matches_j0():
    for t in admissible_types(8):
        assert gamma_order(t) == len(j0_set(t)) + 1


def test_minuscule_comarks_are_one():
    for t in admissible_types(8):
        rs = build_root_system(t)
        for i in j0_set(t):
            assert rs.comarks[i - 1] == 1, (t, i)


def test_gamma_class_examples():
    w1 = fundamental_weight(A2, 1)
    rs = build_root_system(A2)
    theta = FiniteWeight(A2, rs.alpha_to_omega(rs.theta))
    assert str(gamma_class(w1 + w1)) == "w2"
    assert gamma_class(theta).is_zero()
    b3 = LieType.parse("B3")
    assert str(gamma_class(fundamental_weight(b3, 3))) == "w3"


def test_gamma_class_is_additive():
    for t in (A2, LieType.parse("D4"), LieType.parse("D5")):
        for a in all_gamma_classes(t):
            for b in all_gamma_classes(t):
                assert gamma_class(a.weight() + b.weight()) == a + b


def test_root_lattice_membership():
    rs = build_root_system(A2)
    theta = FiniteWeight(A2, rs.alpha_to_omega(rs.theta))
    assert in_root_lattice(theta)
    assert not in_root_lattice(fundamental_weight(A2, 1))
    assert in_root_lattice(zero_weight(A2))


def test_negation_of_classes():
    for t in admissible_types(6):
        for c in all_gamma_classes(t):
            assert (c + (-c)).is_zero()
