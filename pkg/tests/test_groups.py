import itertools

import numpy as np
import pytest

from bracelab.errors import (
    ActionNotAutomorphism,
    InvalidTableError,
    NoIdentityError,
    NotAssociativeError,
    NotBijectiveRowError,
    SearchLimitExceeded,
)
from bracelab.groups import (
    abelian_group,
    are_isomorphic,
    automorphism_group,
    brute_force_automorphisms,
    cyclic_group,
    dihedral_group,
    direct_product,
    generating_sequence,
    group_from_permutations,
    heisenberg_group,
    holomorph,
    left_regular,
    m3_group,
    make_group,
    recognize,
    semidirect_product,
    subgroup_closure,
    subgroup_group,
    symmetric_group,
)
from bracelab.perms import all_perms, parse_cycles

# the quaternion units 1,-1,i,-i,j,-j,k,-k as indices 0..7
_QUAT = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 1, 0, 6, 7, 5, 4],
    [3, 2, 0, 1, 7, 6, 4, 5],
    [4, 5, 7, 6, 1, 0, 2, 3],
    [5, 4, 6, 7, 0, 1, 3, 2],
    [6, 7, 4, 5, 3, 2, 1, 0],
    [7, 6, 5, 4, 2, 3, 0, 1],
]


def quaternion_group():
    return make_group(_QUAT)


# ---------------------------------------------------------------------------
# table validation


def test_make_group_rejects_non_square():
    with pytest.raises(InvalidTableError):
        make_group([[0, 1]])


def test_make_group_rejects_out_of_range_entries():
    with pytest.raises(InvalidTableError):
        make_group([[0, 1], [1, 2]])


def test_make_group_rejects_missing_identity():
    with pytest.raises(NoIdentityError):
        make_group([[1, 0], [0, 0]])


def test_make_group_rejects_non_bijective_row():
    with pytest.raises(NotBijectiveRowError) as exc:
        make_group([[0, 1, 2], [1, 0, 0], [2, 0, 1]])
    assert exc.value.element == 1


def test_make_group_rejects_non_associative_loop():
    # the smallest loop that is not a group
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    with pytest.raises(NotAssociativeError) as exc:
        make_group(loop)
    a, b, c = exc.value.witness
    assert loop[loop[a][b]][c] != loop[a][loop[b][c]]


def test_make_group_moves_identity_to_zero():
    sigma = [2, 1, 0]
    scrambled = [[0] * 3 for _ in range(3)]
    for a in range(3):
        for b in range(3):
            scrambled[a][b] = sigma[(sigma[a] + sigma[b]) % 3]
    g = make_group(scrambled)
    assert np.array_equal(g.table, cyclic_group(3).table)


# ---------------------------------------------------------------------------
# constructors


def test_cyclic_group_orders():
    c12 = cyclic_group(12)
    assert c12.element_order(1) == 12
    assert c12.element_order(4) == 3
    assert c12.exponent() == 12
    assert c12.is_abelian()


def test_symmetric_group_multiplies_left_to_right():
    s3 = symmetric_group(3)
    perms = all_perms(3)
    i_12 = perms.index(parse_cycles("(12)", 3))
    i_13 = perms.index(parse_cycles("(13)", 3))
    i_123 = perms.index(parse_cycles("(123)", 3))
    # apply (12) first, then (13): 1->2->2, 2->1->... gives the 3-cycle (123)
    assert s3.mul(i_12, i_13) == i_123
    assert not s3.is_abelian()
    assert s3.order == 6


def test_symmetric_group_4_order_profile():
    s4 = symmetric_group(4)
    orders = sorted(s4.element_orders().tolist())
    assert orders.count(1) == 1
    assert orders.count(2) == 9
    assert orders.count(3) == 8
    assert orders.count(4) == 6
    assert s4.exponent() == 12


def test_dihedral_group():
    d4 = dihedral_group(4)
    assert d4.order == 8
    assert not d4.is_abelian()
    assert sorted(d4.element_orders().tolist()) == [1, 2, 2, 2, 2, 2, 4, 4]
    assert are_isomorphic(dihedral_group(3), symmetric_group(3)) is not None


def test_heisenberg_group():
    h = heisenberg_group(3)
    assert h.order == 27
    assert not h.is_abelian()
    assert h.exponent() == 3
    assert len(h.center()) == 3


def test_m3_group():
    g = m3_group(3)
    assert g.order == 27
    assert not g.is_abelian()
    assert g.exponent() == 9
    assert are_isomorphic(g, heisenberg_group(3)) is None


def test_direct_product():
    g = direct_product(cyclic_group(2), cyclic_group(3))
    assert g.order == 6
    assert g.is_abelian()
    assert g.exponent() == 6


def test_semidirect_product_builds_s3():
    c3, c2 = cyclic_group(3), cyclic_group(2)
    inversion = [0, 2, 1]
    g = semidirect_product(c3, c2, [[0, 1, 2], inversion])
    assert g.order == 6
    assert not g.is_abelian()
    assert are_isomorphic(g, symmetric_group(3)) is not None


def test_semidirect_product_rejects_non_automorphism():
    c3, c2 = cyclic_group(3), cyclic_group(2)
    with pytest.raises(ActionNotAutomorphism):
        semidirect_product(c3, c2, [[0, 1, 2], [0, 0, 1]])


# ---------------------------------------------------------------------------
# subgroups


def test_subgroup_closure_in_s4():
    s4 = symmetric_group(4)
    perms = all_perms(4)
    r = perms.index(parse_cycles("(1234)", 4))
    cyc = subgroup_closure(s4, [r])
    assert len(cyc) == 4
    sub = subgroup_group(s4, cyc)
    assert recognize(sub) == "C4"


def test_subgroup_group_rejects_non_closed():
    s4 = symmetric_group(4)
    perms = all_perms(4)
    r = perms.index(parse_cycles("(1234)", 4))
    with pytest.raises(ValueError):
        subgroup_group(s4, [0, r])


# ---------------------------------------------------------------------------
# automorphisms


def test_aut_s3_has_order_6():
    assert automorphism_group(symmetric_group(3)).order == 6


def test_aut_elementary_abelian_2_cubed_is_168():
    assert automorphism_group(abelian_group([2, 2, 2])).order == 168


def _gl3_count(p: int) -> int:
    """Count invertible 3x3 matrices over Z/p via the determinant."""
    cells = np.array(list(itertools.product(range(p), repeat=9)), dtype=np.int64)
    m = cells.reshape(-1, 3, 3)
    det = (
        m[:, 0, 0] * (m[:, 1, 1] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 1])
        - m[:, 0, 1] * (m[:, 1, 0] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 0])
        + m[:, 0, 2] * (m[:, 1, 0] * m[:, 2, 1] - m[:, 1, 1] * m[:, 2, 0])
    )
    return int(np.count_nonzero(det % p))


def test_aut_elementary_abelian_3_cubed_matches_matrix_count():
    assert _gl3_count(2) == 168
    gl3 = _gl3_count(3)
    assert gl3 == 11232
    assert automorphism_group(abelian_group([3, 3, 3])).order == gl3


def test_aut_search_agrees_with_brute_force_up_to_order_8():
    groups = [
        cyclic_group(1),
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        abelian_group([2, 2]),
        cyclic_group(5),
        cyclic_group(6),
        symmetric_group(3),
        cyclic_group(7),
        cyclic_group(8),
        abelian_group([2, 4]),
        abelian_group([2, 2, 2]),
        dihedral_group(4),
        quaternion_group(),
    ]
    for g in groups:
        assert automorphism_group(g) == brute_force_automorphisms(g)


def test_generating_sequence_generates():
    for g in [symmetric_group(4), heisenberg_group(3), abelian_group([2, 2, 3])]:
        gens = generating_sequence(g)
        assert len(subgroup_closure(g, gens)) == g.order


def test_budget_exhaustion_raises():
    with pytest.raises(SearchLimitExceeded):
        automorphism_group(cyclic_group(59), budget=10)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("BRACELAB_BUDGET", "5")
    with pytest.raises(SearchLimitExceeded):
        automorphism_group(cyclic_group(61))


# ---------------------------------------------------------------------------
# isomorphism


def test_are_isomorphic_distinguishes_c4_from_klein():
    assert are_isomorphic(cyclic_group(4), abelian_group([2, 2])) is None


def test_are_isomorphic_finds_map():
    hom = are_isomorphic(abelian_group([3, 2]), cyclic_group(6))
    assert hom is not None
    assert hom.is_bijective()


# ---------------------------------------------------------------------------
# regular representation and holomorph


def test_left_regular_is_regular():
    rep = left_regular(symmetric_group(3))
    rep.verify()
    assert rep.is_regular()


def test_holomorph_orders():
    assert holomorph(cyclic_group(3)).order == 6
    assert holomorph(abelian_group([2, 2])).order == 24
    hol = holomorph(cyclic_group(5))
    assert hol.order == 20
    hol.verify_closure()


def test_holomorph_of_klein_is_s4():
    hol = group_from_permutations(holomorph(abelian_group([2, 2])))
    assert are_isomorphic(hol, symmetric_group(4)) is not None


def test_group_from_permutations_identity_first():
    g = group_from_permutations(holomorph(cyclic_group(3)))
    assert recognize(g) == "S3"


# ---------------------------------------------------------------------------
# recognition


def test_recognize_names():
    assert recognize(cyclic_group(1)) == "C1"
    assert recognize(cyclic_group(12)) == "C12"
    assert recognize(abelian_group([2, 6])) == "C2 x C6"
    assert recognize(abelian_group([6, 2])) == "C2 x C6"
    assert recognize(abelian_group([2, 2, 2])) == "C2 x C2 x C2"
    assert recognize(symmetric_group(3)) == "S3"
    assert recognize(symmetric_group(4)) == "S4"
    assert recognize(dihedral_group(4)) == "D4"
    assert recognize(dihedral_group(6)) == "D6"
    assert recognize(heisenberg_group(3)) == "M(3)"
    assert recognize(m3_group(3)) == "M3(3)"
    assert recognize(quaternion_group()) == "unrecognized"
