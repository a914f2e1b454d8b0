import numpy as np
import pytest

from bracelab.braces import (
    are_brace_isomorphic,
    brace_automorphism_group,
    brace_from_groups,
    exponent_compare,
    find_axiom_failures,
    is_biskew,
    is_two_sided,
    l_map,
    make_brace,
    opposite_brace,
    square_agreement_set,
    trivial_brace,
    validate_direct,
    validate_via_holomorph,
)
from bracelab.errors import BraceAxiomFailure, IdentityMismatch
from bracelab.groups import (
    abelian_group,
    cyclic_group,
    make_group,
    recognize,
    symmetric_group,
)


def mod4_ring_brace():
    """Addition mod 4 with circle x + y + 2xy; a nilpotent-ring brace."""
    star = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    circ = [[(i + j + 2 * i * j) % 4 for j in range(4)] for i in range(4)]
    return make_brace(star, circ)


def scrambled_c4():
    """A cyclic table relabeled by a non-automorphism (1 <-> 2 swap)."""
    sigma = [0, 2, 1, 3]
    return make_group(
        [[sigma[(sigma[i] + sigma[j]) % 4] for j in range(4)] for i in range(4)]
    )


def test_mod4_ring_brace_is_valid_and_biskew():
    b = mod4_ring_brace()
    assert recognize(b.add) == "C4"
    assert recognize(b.mult) == "C2 x C2"
    assert is_biskew(b)


def test_trivial_brace_properties():
    b = trivial_brace(symmetric_group(3))
    assert is_biskew(b)
    assert is_two_sided(b)
    assert brace_automorphism_group(b).order == 6


def test_opposite_brace_is_biskew_and_two_sided():
    b = opposite_brace(symmetric_group(3))
    assert is_biskew(b)
    assert is_two_sided(b)


def test_validate_direct_accepts_and_rejects():
    good = mod4_ring_brace()
    assert validate_direct(good.add, good.mult) is None
    assert validate_direct(cyclic_group(4), scrambled_c4()) is not None


def test_validators_agree_on_first_failure():
    c4 = cyclic_group(4)
    bad = scrambled_c4()
    ct = validate_direct(c4, bad)
    hw = validate_via_holomorph(c4, bad)
    assert ct is not None and hw is not None
    assert hw.element == ct.a
    assert (hw.x, hw.y) == (ct.b, ct.c)
    # the reported sides really are the two sides of the law
    lhs = bad.mul(ct.a, c4.mul(ct.b, ct.c))
    rhs = c4.mul(c4.mul(bad.mul(ct.a, ct.b), c4.inv(ct.a)), bad.mul(ct.a, ct.c))
    assert (ct.left, ct.right) == (lhs, rhs)
    assert ct.left != ct.right


def test_find_axiom_failures_matches_first_witness():
    c4 = cyclic_group(4)
    bad = scrambled_c4()
    ct = validate_direct(c4, bad)
    failures = find_axiom_failures(c4, bad)
    assert failures[0] == ct
    only = find_axiom_failures(c4, bad, sides=(ct.left, ct.right), limit=1)
    assert only[0] == ct


def test_make_brace_raises_axiom_failure():
    c4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    with pytest.raises(BraceAxiomFailure) as exc:
        make_brace(c4, scrambled_c4().table.tolist())
    w = exc.value.witness
    assert w.left != w.right


def test_make_brace_identity_mismatch():
    shifted = [[0] * 4 for _ in range(4)]
    sigma = [1, 0, 2, 3]
    for i in range(4):
        for j in range(4):
            shifted[sigma[i]][sigma[j]] = sigma[(i + j) % 4]
    plain = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    with pytest.raises(IdentityMismatch):
        make_brace(shifted, plain)


def test_make_brace_relabels_both_tables_together():
    b = mod4_ring_brace()
    sigma = [2, 1, 0, 3]
    star = [[0] * 4 for _ in range(4)]
    circ = [[0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            star[sigma[i]][sigma[j]] = sigma[b.add.mul(i, j)]
            circ[sigma[i]][sigma[j]] = sigma[b.mult.mul(i, j)]
    recovered = make_brace(star, circ)
    assert np.array_equal(recovered.add.table, b.add.table)
    assert np.array_equal(recovered.mult.table, b.mult.table)


def test_l_map_values_and_law():
    b = mod4_ring_brace()
    rep = l_map(b)
    rep.verify()
    # displacement by a is multiplication by 1 + 2a mod 4
    assert rep.perms == ((0, 1, 2, 3), (0, 3, 2, 1), (0, 1, 2, 3), (0, 3, 2, 1))


def test_swapped_orientation_caching():
    b = mod4_ring_brace()
    assert is_biskew(b)
    s = b.swapped()
    assert s.add is b.mult
    assert validate_direct(s.add, s.mult) is None


def test_brace_automorphism_group_mod4():
    b = mod4_ring_brace()
    assert brace_automorphism_group(b).order == 2


def test_exponent_compare_mod4():
    rep = exponent_compare(mod4_ring_brace())
    assert rep.add_exponent == 4
    assert rep.mult_exponent == 2
    assert rep.first_mismatch == (1, 4, 2)
    assert not rep.orders_agree


def test_square_agreement_mod4():
    assert square_agreement_set(mod4_ring_brace()) == [0, 2]


def test_two_sided_mod4():
    assert is_two_sided(mod4_ring_brace())


def test_are_brace_isomorphic():
    b = mod4_ring_brace()
    # transport both tables along the Klein automorphism swapping 1 and 2
    tau = [0, 2, 1, 3]
    star = [[0] * 4 for _ in range(4)]
    circ = [[0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            star[tau[i]][tau[j]] = tau[b.add.mul(i, j)]
            circ[tau[i]][tau[j]] = tau[b.mult.mul(i, j)]
    other = make_brace(star, circ)
    assert are_brace_isomorphic(b, other) is not None
    assert are_brace_isomorphic(b, trivial_brace(cyclic_group(4))) is None


def test_brace_from_groups_holomorph_check():
    b = mod4_ring_brace()
    again = brace_from_groups(b.add, b.mult, check="holomorph")
    assert validate_direct(again.add, again.mult) is None
    with pytest.raises(BraceAxiomFailure):
        brace_from_groups(cyclic_group(4), scrambled_c4(), check="holomorph")


def test_trivial_brace_of_klein_aut_count():
    b = trivial_brace(abelian_group([2, 2]))
    assert brace_automorphism_group(b).order == 6
