import numpy as np
import pytest

from bracelab.braces import is_biskew, validate_direct
from bracelab.errors import IntersectionNontrivial, NotSubgroup, OrderMismatch
from bracelab.factorizations import (
    byott_embedding,
    circle_from_factorization,
    demo_s4,
    is_semidirect,
    left_group,
    pair_group,
    right_group,
    validate_factorization,
)
from bracelab.groups import (
    are_isomorphic,
    automorphism_group,
    cyclic_group,
    direct_product,
    group_from_permutations,
    heisenberg_group,
    holomorph,
    recognize,
    semidirect_product,
    subgroup_closure,
    symmetric_group,
)
from bracelab.perms import all_perms, parse_cycles


def s3_factorization():
    s3 = symmetric_group(3)
    perms = all_perms(3)
    rot = perms.index(parse_cycles("(123)", 3))
    flip = perms.index(parse_cycles("(12)", 3))
    return validate_factorization(
        s3, subgroup_closure(s3, [rot]), subgroup_closure(s3, [flip])
    )


def test_validate_factorization_errors():
    s3 = symmetric_group(3)
    perms = all_perms(3)
    rot = perms.index(parse_cycles("(123)", 3))
    flip = perms.index(parse_cycles("(12)", 3))
    with pytest.raises(NotSubgroup) as exc:
        validate_factorization(s3, [0, rot], subgroup_closure(s3, [flip]))
    assert exc.value.side == "left"
    cyc = subgroup_closure(s3, [rot])
    with pytest.raises(IntersectionNontrivial):
        validate_factorization(s3, cyc, cyc)
    with pytest.raises(OrderMismatch):
        validate_factorization(s3, [0], subgroup_closure(s3, [flip]))


def test_decomposition_multiplies_back():
    f = s3_factorization()
    for x, (a, b) in enumerate(f.decomposition):
        assert f.group.mul(a, b) == x
        assert a in f.left
        assert b in f.right


def test_s3_factorization_circle_is_c6():
    f = s3_factorization()
    assert recognize(left_group(f)) == "C3"
    assert recognize(right_group(f)) == "C2"
    brace = circle_from_factorization(f)
    assert recognize(brace.add) == "S3"
    assert recognize(brace.mult) == "C6"
    assert is_semidirect(f, "left")
    assert not is_semidirect(f, "right")
    assert is_biskew(brace)


def test_byott_embedding_s3():
    f = s3_factorization()
    rep = byott_embedding(f)
    rep.verify()
    assert rep.is_regular()
    hol = holomorph(f.group)
    assert all(p in hol for p in rep.perms)
    # the permutation sending 0 to x is the circle row of x
    brace = circle_from_factorization(f)
    for p in rep.perms:
        x = p[0]
        assert list(p) == list(brace.mult.table[x])


def test_frobenius_20_factorization():
    c5, c4 = cyclic_group(5), cyclic_group(4)
    action = [[(pow(2, j, 5) * x) % 5 for x in range(5)] for j in range(4)]
    g = semidirect_product(c5, c4, action)
    assert not g.is_abelian()
    f = validate_factorization(g, [h * 4 for h in range(5)], list(range(4)))
    assert is_semidirect(f, "left")
    brace = circle_from_factorization(f)
    assert recognize(brace.mult) == "C20"
    assert is_biskew(brace)


def test_heisenberg_internal_factorization():
    g = heisenberg_group(3)
    f = validate_factorization(g, list(range(9)), [0, 9, 18])
    assert is_semidirect(f, "left")
    brace = circle_from_factorization(f)
    assert recognize(brace.add) == "M(3)"
    assert recognize(brace.mult) == "C3 x C3 x C3"
    assert is_biskew(brace)


def test_order_36_factorization_circle_is_product_of_nonabelian():
    s3 = symmetric_group(3)
    aut = automorphism_group(s3)
    actor = group_from_permutations(aut)
    g = semidirect_product(s3, actor, list(aut.elements))
    assert g.order == 36
    f = validate_factorization(g, [h * 6 for h in range(6)], list(range(6)))
    assert is_semidirect(f, "left")
    brace = circle_from_factorization(f)
    assert not brace.add.is_abelian()
    assert not brace.mult.is_abelian()
    target = direct_product(s3, s3)
    assert are_isomorphic(brace.mult, target) is not None
    assert are_isomorphic(brace.add, target) is not None
    assert is_biskew(brace)


def test_pair_group_matches_circle():
    for f in [s3_factorization()]:
        brace = circle_from_factorization(f)
        assert are_isomorphic(brace.mult, pair_group(f)) is not None


def test_demo_s4_report():
    r = demo_s4()
    assert r.forward_valid
    assert not r.swapped_valid
    assert r.swapped_failure_count == 5376
    assert (r.left_name, r.right_name) == ("S3", "C4")
    assert r.circle_matches_pair
    assert r.featured == ("(243)", "(23)", "(1324)")
    assert r.featured_sides == ("(132)", "(134)")
    assert r.first_failure == ("(34)", "(34)", "(34)")
    assert r.first_failure_sides == ("(23)", "(14)")
    assert r.contrast_triple == ("(1234)", "(12)", "(13)(24)")
    assert r.contrast_sides[0] == r.contrast_sides[1] == "(132)"


def test_s4_factorization_is_not_semidirect_either_side():
    g = symmetric_group(4)
    perms = all_perms(4)
    fix_last = [i for i, p in enumerate(perms) if p[3] == 3]
    four_cycle = subgroup_closure(g, [perms.index(parse_cycles("(1234)", 4))])
    f = validate_factorization(g, fix_last, four_cycle)
    assert not is_semidirect(f, "left")
    assert not is_semidirect(f, "right")
    brace = circle_from_factorization(f)
    assert not is_biskew(brace)
    assert validate_direct(brace.add, brace.mult) is None
