import pytest

from bracelab.algebras import catalog, cyclic_ring, to_brace
from bracelab.braces import make_brace, opposite_brace, trivial_brace
from bracelab.errors import NotBiskew
from bracelab.groups import symmetric_group
from bracelab.hgs import count_hgs, reciprocity_check


def mod4_brace():
    star = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    circ = [[(i + j + 2 * i * j) % 4 for j in range(4)] for i in range(4)]
    return make_brace(star, circ)


def test_count_mod4():
    r = count_hgs(mod4_brace())
    assert (r.galois_name, r.type_name) == ("C2 x C2", "C4")
    assert (r.aut_mult, r.aut_add, r.aut_brace) == (6, 2, 2)
    assert r.count == 3


def test_reciprocity_mod4():
    r = reciprocity_check(mod4_brace())
    assert (r.count_forward, r.count_swapped) == (3, 1)
    assert r.balanced


def test_count_trivial_brace_is_one():
    r = count_hgs(trivial_brace(symmetric_group(3)))
    assert r.count == 1
    assert r.aut_brace == r.aut_mult == 6


def test_opposite_brace_count_s3():
    r = count_hgs(opposite_brace(symmetric_group(3)))
    # automorphisms of the pair = automorphisms of the group itself
    assert r.aut_brace == 6
    assert r.count == 1
    rec = reciprocity_check(opposite_brace(symmetric_group(3)))
    assert rec.balanced


def test_count_degraaf_3():
    r = count_hgs(to_brace(catalog("degraaf_A340", 3)))
    assert (r.galois_name, r.type_name) == ("M(3)", "C3 x C3 x C3")
    assert (r.aut_mult, r.aut_add, r.aut_brace) == (432, 11232, 36)
    assert r.count == 12
    assert r.aut_add == 26 * r.aut_mult


def test_reciprocity_degraaf_3():
    r = reciprocity_check(to_brace(catalog("degraaf_A340", 3)))
    assert (r.count_forward, r.count_swapped) == (12, 312)
    assert r.count_forward * r.aut_add == r.count_swapped * r.aut_mult == 134784
    assert r.balanced


def test_count_cyclic_r2():
    r = count_hgs(to_brace(cyclic_ring(3, 2)))
    assert (r.aut_mult, r.aut_add, r.aut_brace) == (18, 18, 9)
    assert r.count == 2
    rec = reciprocity_check(to_brace(cyclic_ring(3, 2)))
    assert rec.count_forward == rec.count_swapped == 2
    assert rec.balanced


def test_reciprocity_rejects_one_sided_brace():
    with pytest.raises(NotBiskew):
        reciprocity_check(to_brace(cyclic_ring(3, 1)))


def test_report_lines_are_ordered_pairs():
    lines = count_hgs(mod4_brace()).lines()
    assert [k for k, _ in lines] == [
        "galois_group",
        "type",
        "aut_mult",
        "aut_add",
        "aut_brace",
        "count",
    ]
