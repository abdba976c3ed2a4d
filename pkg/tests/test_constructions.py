from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minram.constructions import (
    build_c_and_P,
    build_f,
    bms_search,
    compute_H,
    frucht_field_recipe,
    function_field_family,
    integral_model,
    local_obstructions,
    realize,
    recipe_graph,
    relation_r,
    residue_set,
    schinzel_search,
    select_a,
    specialize,
    verify_instance,
)
from minram.constructions.schinzel import check_a
from minram.errors import InputError, NotFoundError, PreconditionError, UnsupportedError
from minram.exact.integers import factor_integer, is_prime
from minram.exact.poly import Poly
from minram.exact.resultants import discriminant
from minram.galois import CERTIFIED_SN, ramified_primes
from minram.graphs import ASYMMETRIC_GRAPH, CYCLIC_THREE_GRAPH, graph_automorphisms
from minram.permgroup import GroupSpec, is_isomorphic
from minram.permgroup.abstract import AbstractGroup

# -- Schinzel family ------------------------------------------------------------------


def test_c_and_P():
    assert build_c_and_P(2) == ((-3, 2), 2)
    assert build_c_and_P(3) == ((-6, 11, -6), 30)
    assert build_c_and_P(4)[1] == 2 * 3 * 5 * 7 * 11


def test_f_and_H_for_n2():
    f = build_f(2, (1, -1))
    assert str(f) == "X^2 + (-3*T - 3)*X + 2*T^2 - 4"
    assert compute_H(2, (1, -1)) == Poly([25, 18, 1])


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-50, 50))
def test_H_is_the_discriminant_of_the_specialization(a1, a2, t):
    a = (a1, a2)
    try:
        H = compute_H(2, a)
    except Exception:
        return
    assert H(t) == discriminant(specialize(2, a, t))


def test_select_a_checks():
    ok, _, _, reason = check_a(2, (0, 1))
    assert not ok
    for a in [(1, 1), (1, -1)]:
        ok, checks, H, _ = check_a(2, a)
        assert ok and checks["content"] == "1"
    assert select_a(2).a == (1, 0)


def test_schinzel_n2_instance():
    inst = schinzel_search(2)
    assert inst.t == 4 and inst.a == (1, 0)
    assert is_prime(abs(inst.H_value))
    assert inst.galois.status == CERTIFIED_SN
    assert verify_instance(inst)


def test_schinzel_explicit_a_matches_cli_example():
    inst = schinzel_search(2, a=(1, -1), t_max=10)
    assert inst.t == 4 and inst.H_value == 113
    assert inst.f == Poly([28, -15, 1])


def test_schinzel_empty_range():
    with pytest.raises(NotFoundError) as exc:
        schinzel_search(2, a=(1, -1), t_min=5, t_max=4)
    assert exc.value.stage is not None or exc.value.stats is not None


def test_local_obstructions():
    assert local_obstructions(2) == []
    assert local_obstructions(3) == [2]
    assert local_obstructions(5) == [2]
    assert local_obstructions(6) == [2, 3]
    with pytest.raises(NotFoundError) as exc:
        select_a(3)
    assert exc.value.stats["local_obstructions"] == [2]


def _disc_residues(coeff_classes, modulus):
    """Set of disc(X^n + b_{n-1} X^{n-1} + ... + b_0) mod ``modulus`` over all residue choices."""
    out = set()
    for b in product(*coeff_classes):
        f = Poly(list(reversed(b)) + [1])
        out.add(discriminant(f) % modulus)
    return out


def test_cubic_obstruction_by_exhaustion():
    # X^3 + b2 X^2 + b1 X + b0 with b2, b0 even: disc is 0 mod 4 for every choice
    evens, anys = range(0, 4, 2), range(4)
    assert _disc_residues([evens, anys, evens], 4) == {0}


def test_quartic_obstruction_by_exhaustion():
    evens, anys = range(0, 16, 2), range(16)
    assert _disc_residues([evens, anys, evens, evens], 16) == {0}


@given(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)), st.integers(-40, 40))
def test_cubic_specializations_have_disc_divisible_by_4(a, t):
    f = specialize(3, a, t)
    # the forced parity pattern of the family
    assert f.coeff(2) % 2 == 0 and f.coeff(0) % 2 == 0
    assert discriminant(f) % 4 == 0


def test_residue_sets():
    assert residue_set(2, (1, -1), 1).U == (0,)
    assert residue_set(2, (1, -1), 3).U == (1, 2)
    assert residue_set(2, (1, -1), 5).U == (1, 3, 4)
    with pytest.raises(InputError):
        residue_set(2, (1, -1), 0)


def test_schinzel_modulus_restriction():
    inst = schinzel_search(2, a=(1, -1), modulus=(3, 1), t_max=200)
    assert inst.t % 3 == 1


def test_schinzel_rejects_small_n():
    with pytest.raises(PreconditionError):
        schinzel_search(1)


# -- BMS trinomials -------------------------------------------------------------------


@pytest.mark.parametrize("n,triple", [(2, (2, 3, 11)), (3, (3, 2, 89)), (4, (2, 3, 593)), (5, (3, 2, 9887))])
def test_bms_first_triples(n, triple):
    res = bms_search(n)
    assert res.triple == triple
    assert res.galois.status == CERTIFIED_SN
    assert res.verify()


@given(st.integers(2, 7), st.sampled_from([2, 3, 5, 7, 11]), st.sampled_from([2, 3, 5, 7, 13]))
def test_integral_model_discriminant_support(n, p, q):
    if p == q:
        return
    r = relation_r(n, p, q)
    assert r == n**n * p + (n - 1) ** (n - 1) * q
    d = abs(discriminant(integral_model(n, p, q)))
    support = {p, q} | set(factor_integer(r).primes)
    assert set(factor_integer(d).primes) <= support


def test_bms_ramification_bounded_by_triple():
    res = bms_search(3)
    rep = ramified_primes(res.model)
    assert set(rep.ramified + rep.undecided) <= {res.p, res.q, res.r}


def test_bms_not_found():
    with pytest.raises(NotFoundError):
        bms_search(2, p_max=1)


def test_bms_is_deterministic_across_threads():
    assert bms_search(4, threads=1).to_json() == bms_search(4, threads=3).to_json()


# -- Frucht recipes ---------------------------------------------------------------------


@pytest.mark.parametrize("name,n", [("C1", 6), ("C2", 2), ("C3", 9), ("S3", 3)])
def test_frucht_recipe(name, n):
    spec = GroupSpec.named(name)
    recipe = frucht_field_recipe(spec)
    assert recipe.n == n
    aut = AbstractGroup.from_perm_group(graph_automorphisms(recipe.graph))
    assert is_isomorphic(aut, spec.abstract()) is not None
    assert recipe.verify()


def test_recipe_graph_table():
    assert recipe_graph(GroupSpec.named("C1"))[1] == ASYMMETRIC_GRAPH
    assert recipe_graph(GroupSpec.named("C3"))[1] == CYCLIC_THREE_GRAPH


# -- function-field family -------------------------------------------------------------


def test_ffield_n9():
    inst = function_field_family(9, 2, samples=60)
    assert inst.disc_constant
    assert inst.evidence["all_even"]
    assert inst.verify()


@pytest.mark.parametrize("n,q,err", [(10, 2, PreconditionError), (9, 3, UnsupportedError), (9, 6, InputError)])
def test_ffield_errors(n, q, err):
    with pytest.raises(err):
        function_field_family(n, q)


# -- realize ---------------------------------------------------------------------------


def test_realize_trivial():
    cert = realize(GroupSpec.named("C1"))
    assert cert.n == 1 and cert.degree == 1 and cert.verify()


def test_realize_c2_via_bms():
    cert = realize(GroupSpec.named("C2"))
    assert (cert.n, cert.degree) == (2, 2)
    assert cert.k_poly.kind == "stem"
    assert cert.source.ram_bound == ["3", "11"]
    assert cert.verify()


def test_realize_s3_with_degree_override():
    cert = realize(GroupSpec.named("S3"), n=4)
    assert cert.hit.H.order() == 4 and cert.degree == 6
    assert cert.k_poly is None
    assert cert.verify()


def test_realize_s3_default_uses_alt_stem():
    cert = realize(GroupSpec.named("S3"))
    assert cert.n == 3 and cert.k_poly.kind == "alt-stem" and cert.k_poly.poly.degree == 6
    assert cert.verify()


def test_realize_with_explicit_subgroup():
    cert = realize(GroupSpec.named("C2"), n=5, H="(1 2 3), (2 3 4)")
    assert cert.hit.H.order() == 12 and cert.k_poly.kind == "alt-stem"
    assert cert.verify()


def test_realize_schinzel_strategy():
    cert = realize(GroupSpec.named("C2"), strategy="schinzel")
    assert cert.source.ram_bound == ["97"] and cert.verify()


def test_realize_rejects_bad_subgroup():
    with pytest.raises(InputError):
        realize(GroupSpec.named("C2"), n=4, H="(1 2)(3 4), (1 3)(2 4)")
