import pytest
from hypothesis import given
from hypothesis import strategies as st

from minram.errors import InputError, ParseError
from minram.permgroup import (
    AbstractGroup,
    GroupSpec,
    PermGroup,
    alternating_group,
    are_conjugate,
    catalog_names,
    conjugating_element,
    find_normalizer_quotient,
    format_perms,
    is_isomorphic,
    named_group,
    normalizer,
    normalizer_exhaustive,
    parse_cycles,
    parse_group_spec,
    quotient,
    special_case_An_minus_1,
    subgroups_up_to_conjugacy,
    symmetric_group,
    verify_isomorphism,
)
from minram.permgroup.nq import verify_hit
from minram.permgroup.perm import conj, cycle_type, inv, mul, sign
from minram.permgroup.search import all_subgroups_exhaustive, conjugacy_classes_of_subsets


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


# -- permutations --------------------------------------------------------------


@given(perms(6), perms(6), perms(6))
def test_mul_is_associative_and_acts_left_to_right(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    ab = mul(a, b)
    assert all(ab[i] == b[a[i]] for i in range(6))
    assert mul(a, inv(a)) == tuple(range(6))
    assert sign(ab) == sign(a) * sign(b)
    assert cycle_type(conj(a, b)) == cycle_type(a)


def test_parse_cycles():
    gens, n = parse_cycles("(1 2 3)(4 5), (1 2)")
    assert n == 5
    assert gens[0] == (1, 2, 0, 4, 3)
    assert format_perms(gens) == "(1 2 3)(4 5), (1 2)"
    with pytest.raises(ParseError) as exc:
        parse_cycles("(1 2")
    assert exc.value.offset == 4
    with pytest.raises(ParseError):
        parse_cycles("(1 1)")
    with pytest.raises(ParseError):
        parse_cycles("(0 1)")


# -- stabilizer chains -----------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetric_and_alternating_orders(n):
    from math import factorial

    assert symmetric_group(n).order() == factorial(n)
    assert alternating_group(n).order() == max(1, factorial(n) // 2)


@given(st.lists(perms(6), min_size=1, max_size=3))
def test_chain_order_matches_closure(gens):
    G = PermGroup(gens, 6)
    closure = {tuple(range(6))}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    assert G.order() == len(closure)
    assert set(G.elements()) == closure
    assert all(G.order() % len(o) == 0 for o in G.orbits())


# -- normalizers and subgroup classes ---------------------------------------------


@given(st.lists(perms(5), min_size=1, max_size=2))
def test_normalizer_matches_exhaustive(gens):
    S = symmetric_group(5)
    H = PermGroup(gens, 5)
    N = normalizer(S, H)
    oracle = normalizer_exhaustive(S, H)
    assert N == oracle
    assert H.is_normal_in(N)


@pytest.mark.parametrize("group,count", [
    (symmetric_group(3), 4),
    (symmetric_group(4), 11),
    (alternating_group(4), 5),
    (alternating_group(5), 9),
    (symmetric_group(5), 19),
])
def test_subgroup_class_counts(group, count):
    assert len(subgroups_up_to_conjugacy(group)) == count


@pytest.mark.parametrize("group", [symmetric_group(3), symmetric_group(4), alternating_group(4)])
def test_subgroup_classes_match_exhaustive_oracle(group):
    classes = conjugacy_classes_of_subsets(group, all_subgroups_exhaustive(group))
    reps = subgroups_up_to_conjugacy(group)
    assert len(reps) == len(classes)
    for cls in classes:
        hits = [R for R in reps if R.element_set() in cls]
        assert len(hits) == 1


def test_conjugating_element():
    S = symmetric_group(4)
    U = PermGroup(parse_cycles("(1 2)", 4)[0], 4)
    V = PermGroup(parse_cycles("(3 4)", 4)[0], 4)
    g = conjugating_element(S, U, V)
    assert g is not None and U.conjugate(g) == V
    W = PermGroup(parse_cycles("(1 2)(3 4)")[0], 4)
    assert not are_conjugate(S, U, W)


# -- abstract groups and the catalog ----------------------------------------------


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_entries_are_groups(name):
    spec = GroupSpec.named(name)
    A = spec.abstract()
    A.check_axioms()
    assert is_isomorphic(A, AbstractGroup.from_perm_group(spec.perm_group())) is not None


def test_catalog_distinguishes_groups():
    pairs = [("C4", "V4"), ("D4", "Q8"), ("C6", "S3"), ("C8", "C4xC2"), ("A4", "D6"), ("D6", "Dic3")]
    for a, b in pairs:
        assert is_isomorphic(GroupSpec.named(a).abstract(), GroupSpec.named(b).abstract()) is None
    assert is_isomorphic(GroupSpec.named("C6").abstract(), GroupSpec.named("C6xC2").abstract()) is None
    assert is_isomorphic(GroupSpec.named("C6").abstract(), parse_group_spec("(1 2 3)(4 5)").abstract())


def test_isomorphism_witness_verifies():
    A = GroupSpec.named("S3").abstract()
    B = AbstractGroup.from_perm_group(PermGroup(parse_cycles("(1 2), (1 2 3)")[0], 3))
    phi = is_isomorphic(A, B)
    assert verify_isomorphism(A, B, phi)
    bad = list(phi)
    bad[1], bad[2] = bad[2], bad[1]
    assert not verify_isomorphism(A, B, bad) or bad == list(phi)


def test_table_text_roundtrip_and_errors():
    A = GroupSpec.named("D4").abstract()
    assert AbstractGroup.from_table_text(A.to_table_text()).table == A.table
    with pytest.raises(InputError):
        AbstractGroup.from_table_text("2\n0 1\n1 1\n")
    with pytest.raises(InputError):
        parse_group_spec("NoSuchGroup")


def test_quotient_of_s4_by_v4_is_s3():
    S4 = symmetric_group(4)
    V4 = PermGroup(parse_cycles("(1 2)(3 4), (1 3)(2 4)")[0], 4)
    Q = quotient(S4, V4)
    assert Q.order == 6
    assert is_isomorphic(Q, GroupSpec.named("S3").abstract())


# -- normalizer quotients -----------------------------------------------------------


def test_nq_c2_first_hit():
    hits = find_normalizer_quotient(GroupSpec.named("C2"), range(1, 6), first_only=True)
    assert hits
    h = hits[0]
    assert (h.n, h.kind) == (2, "S") and h.H.order() == 1
    assert h.oracle_checked
    assert verify_hit(GroupSpec.named("C2").abstract(), h.to_json())


def test_nq_s3_hits_include_s4_mod_v4():
    hits = find_normalizer_quotient(GroupSpec.named("S3"), range(1, 5))
    assert any(h.n == 4 and h.kind == "S" and h.H.order() == 4 and h.H.is_transitive() for h in hits)
    assert all(verify_hit(GroupSpec.named("S3").abstract(), h.to_json()) for h in hits)


def test_verify_hit_rejects_tampering():
    target = GroupSpec.named("C2").abstract()
    hit = find_normalizer_quotient(GroupSpec.named("C2"), [5], kinds=("S",))[0].to_json()
    assert verify_hit(target, hit)
    assert not verify_hit(target, dict(hit, N_order="999"))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_special_case_an_minus_1(n):
    H, N, Q, phi = special_case_An_minus_1(n)
    assert Q.order == 2
    assert N.order() == 2 * H.order()


def test_named_group_rejects_unknown():
    with pytest.raises(InputError):
        named_group("Z99")
