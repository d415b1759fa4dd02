import pytest
from hypothesis import given
from hypothesis import strategies as st

from gclt.constructors import abelian, cyclic, dicyclic, dihedral, direct_product, generalized_quaternion, trivial_group
from gclt.errors import ClosedFormDomainError
from gclt.models import AbelianPGroupShape, NonabelianPRQShape
from gclt.predicates import (
    abelian_index_p_subgroup_is_normal,
    cclt_shape,
    count_cyclic_subgroups,
    count_subgroups,
    group_report,
    has_trivial_center_commutator_meet,
    is_a_group,
    is_aclt_group,
    is_cclt_group,
    is_clt_group,
    is_metabelian,
    is_metacyclic,
    is_minimal_nonabelian,
    is_minimal_noncyclic,
    is_nilpotent,
    is_supersolvable,
    is_z_group,
    product_aclt_expected,
    product_cclt_expected,
    same_order_subgroups_isomorphic,
    sylow_q_structure,
)
from gclt.specs import build

A4 = "E(2,2,[0,1;1,1],3)"
S4 = "P(4;(1,2),(1,2,3,4))"


def test_elementary_abelian_eight_is_not_cclt():
    report = is_cclt_group(abelian([2, 2, 2]))
    assert not report.ok
    assert report.missing == [4]
    assert sorted(report.divisors) == [1, 2, 4]


def test_alternating_group_fails_at_six():
    G = build(A4)
    assert is_clt_group(G).missing == [6]
    assert is_aclt_group(G).missing == [6]


def test_witness_subgroups_have_the_right_order():
    report = is_aclt_group(dihedral(6))
    assert report.ok
    for d, result in report.divisors.items():
        assert len(result.witness) == d


def test_symmetric_group_is_clt_but_not_aclt():
    G = build(S4)
    assert is_clt_group(G).ok
    assert is_aclt_group(G).missing == [6, 8, 12]


@pytest.mark.parametrize(
    "spec, cclt",
    [("C28", True), ("C2xC14", False), ("D14", False), ("Dic7", True), ("Q8", True), ("C2xC4", True)],
)
def test_cclt_groups(spec, cclt):
    assert is_cclt_group(build(spec)).ok == cclt


@pytest.mark.parametrize("spec", ["C28", "C2xC14", "D14", "Dic7"])
def test_order_twenty_eight_is_aclt(spec):
    assert is_aclt_group(build(spec)).ok


@pytest.mark.parametrize(
    "check, spec, expected",
    [
        (is_metacyclic, "D7", True),
        (is_metacyclic, "Q8", True),
        (is_metacyclic, A4, False),
        (is_z_group, "Dic3", True),
        (is_z_group, "D4", False),
        (is_a_group, A4, True),
        (is_a_group, "D4", False),
        (is_metabelian, A4, True),
        (is_metabelian, S4, False),
        (is_supersolvable, "D3", True),
        (is_supersolvable, A4, False),
        (is_nilpotent, "D4", True),
        (is_nilpotent, "D3", False),
        (is_minimal_noncyclic, "Q8", True),
        (is_minimal_noncyclic, "C2xC2", True),
        (is_minimal_noncyclic, "D4", False),
        (is_minimal_nonabelian, A4, True),
        (is_minimal_nonabelian, "Q8", True),
        (is_minimal_nonabelian, S4, False),
    ],
)
def test_structural_properties(check, spec, expected):
    assert check(build(spec)) == expected


def test_minimal_nonabelian_without_order_six():
    G = build(A4)
    assert is_minimal_nonabelian(G)
    assert not is_clt_group(G).ok
    assert not is_aclt_group(G).ok


@pytest.mark.parametrize("spec", ["D4", "Q8", "M(9,3,4)", "M(7,3,2)"])
def test_minimal_nonabelian_clt_groups_are_aclt(spec):
    G = build(spec)
    assert is_minimal_nonabelian(G)
    assert is_clt_group(G).ok
    assert is_aclt_group(G).ok


@pytest.mark.parametrize(
    "left, right, expected",
    [
        ("C2", "C3", True),
        ("C2", "C4", True),
        ("C4", "C4", False),
        ("C2", "D3", False),
        ("C1", "D3", True),
        ("C1", "C2xC2xC2", False),
    ],
)
def test_product_cclt_expected(left, right, expected):
    H, K = build(left), build(right)
    assert product_cclt_expected(H, K) == expected
    assert is_cclt_group(direct_product(H, K)).ok == expected


@pytest.mark.parametrize(
    "left, right, expected",
    [
        ("D3", "C2", True),
        ("D3", "C5", False),
        ("D3", "D5", False),
        ("D4", "C2", True),
        ("C4", "C6", True),
        (A4, "C1", False),
    ],
)
def test_product_aclt_expected(left, right, expected):
    H, K = build(left), build(right)
    assert product_aclt_expected(H, K) == expected
    assert is_aclt_group(direct_product(H, K)).ok == expected


def test_cclt_shapes():
    assert cclt_shape(dihedral(3)) == NonabelianPRQShape(p=2, r=1, q=3)
    assert cclt_shape(abelian([2, 4])) == AbelianPGroupShape(p=2, k=3)
    with pytest.raises(ClosedFormDomainError):
        cclt_shape(generalized_quaternion(8))
    with pytest.raises(ClosedFormDomainError):
        cclt_shape(abelian([2, 2, 2]))


def test_dicyclic_five_counts():
    G = dicyclic(5)
    assert count_subgroups(G) == 10
    assert count_cyclic_subgroups(G) == 9


def test_center_commutator_meet():
    assert has_trivial_center_commutator_meet(dihedral(3))
    assert not has_trivial_center_commutator_meet(dihedral(4))
    assert abelian_index_p_subgroup_is_normal(dihedral(4))


def test_sylow_q_structure():
    assert sylow_q_structure(build(A4))["normal"] is False
    assert all(sylow_q_structure(build("Dic7")).values())
    assert all(sylow_q_structure(trivial_group()).values())


def test_same_order_subgroups_isomorphic():
    assert same_order_subgroups_isomorphic(dicyclic(3))
    assert not same_order_subgroups_isomorphic(dihedral(4))


def test_group_report():
    report = group_report(dihedral(3), with_predicates=True, with_subgroups=True)
    assert report.element_orders == {1: 1, 2: 3, 3: 2}
    assert len(report.subgroups) == 6
    assert report.predicates["cclt"] and not report.predicates["abelian"]
    assert group_report(cyclic(4)).predicates is None


@given(st.integers(1, 60))
def test_cyclic_groups_are_cclt_and_aclt(n):
    G = cyclic(n)
    assert is_cclt_group(G).ok and is_aclt_group(G).ok and is_clt_group(G).ok


@given(st.integers(2, 30))
def test_cclt_implies_aclt_on_dihedral_groups(n):
    G = dihedral(n)
    if is_cclt_group(G).ok:
        assert is_aclt_group(G).ok
