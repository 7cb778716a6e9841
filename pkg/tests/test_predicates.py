from fractions import Fraction as F
from itertools import product
from pathlib import Path

import pytest

from conftest import random_path
from pathmodel.errors import NotDominantError, PreconditionError
from pathmodel.operators import f_alpha, generate_F_orbit, seed_path
from pathmodel.paths import PLPath, concat, load, pi_lambda, reverse
from pathmodel.predicates import (
    check_dilation_theorem,
    contained_in_delta,
    is_generalized_hecke,
    is_generalized_ls1,
    is_hecke_path,
    is_ls_path,
    satisfies_chain_condition,
    satisfies_simple_chain_condition,
    split_by_delta_length,
)
from pathmodel.root_system import build
from pathmodel.weyl import contragredient, orbit

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "a2_hecke_not_ls.json"
A2 = build("A2")
HALF = F(1, 2)


def candidate_paths(R, lam, cuts=(F(1, 4), F(1, 3), HALF, F(2, 3), F(3, 4))):
    """Paths of one or two straight pieces along W-images of lam, cut at a few times."""
    dirs = sorted(orbit(R, lam))
    out = {pi_lambda(R, d) for d in dirs}
    for a, b in product(dirs, repeat=2):
        for c in cuts:
            out.add(PLPath(R, [tuple(c * x for x in a), tuple((1 - c) * x for x in b)]))
    return out


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("A2", (2, 0)), ("B2", (1, 1)), ("B2", (0, 2)), ("G2", (1, 0))])
def test_ls_agrees_with_operator_orbit(name, lam):
    R = build(name)
    orb = set(generate_F_orbit(R, pi_lambda(R, lam)))
    for p in candidate_paths(R, lam):
        assert bool(is_ls_path(R, p, lam)) == (p in orb), p


def test_fixture_is_hecke_but_not_ls():
    p, _ = load(FIXTURE)
    assert is_hecke_path(A2, p)
    assert satisfies_chain_condition(A2, p)
    assert satisfies_simple_chain_condition(A2, p)
    v = is_ls_path(A2, p, (1, 1))
    assert not v and "W-maximal" in v.reason


def test_ls_examples():
    assert is_ls_path(A2, pi_lambda(A2, (2, 1)), (2, 1))
    assert not is_ls_path(A2, pi_lambda(A2, (2, 1)), (1, 1))
    assert is_ls_path(A2, PLPath(A2), (0, 0))
    with pytest.raises(NotDominantError):
        is_ls_path(A2, pi_lambda(A2, (1, 0)), (-1, 1))
    # dominant then anti-dominant is not even billiard
    p = concat(pi_lambda(A2, (1, 0)), pi_lambda(A2, (-1, 0)))
    assert not is_hecke_path(A2, p)
    assert is_hecke_path(A2, p).reason == "not a billiard path"


def test_witnesses_are_serializable():
    p, _ = load(FIXTURE)
    obj = is_hecke_path(A2, p).to_json_obj()
    assert obj["verdict"] is True
    assert obj["witnesses"][0]["vertices"] == [["-1", "-1"], ["1", "1"]]


@pytest.mark.parametrize("name,lam", [("A2", (2, 1)), ("B2", (1, 2)), ("G2", (1, 1))])
def test_ls_is_reversal_symmetric(name, lam):
    R = build(name)
    dual = contragredient(R, lam)
    for p in generate_F_orbit(R, pi_lambda(R, lam)):
        assert is_ls_path(R, reverse(p), dual)
    for p in candidate_paths(R, lam, cuts=(HALF,)):
        assert bool(is_ls_path(R, p, lam)) == bool(is_ls_path(R, reverse(p), dual))


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_class_implications(name, rng):
    R = build(name)
    seen_hecke_not_ls = 0
    for _ in range(300):
        p = random_path(R, rng, integral=rng.random() < 0.5)
        hecke = bool(is_hecke_path(R, p))
        if satisfies_simple_chain_condition(R, p):
            assert hecke
        if hecke:
            assert satisfies_chain_condition(R, p)
    for p in candidate_paths(R, R.rho):
        ls = bool(is_ls_path(R, p, R.rho))
        hecke = bool(is_hecke_path(R, p))
        if ls:
            assert hecke
        seen_hecke_not_ls += hecke and not ls
    assert seen_hecke_not_ls > 0


def test_offset_changes_the_stabilizer():
    p, _ = load(FIXTURE)
    # moved off the theta wall the break has trivial stabilizer
    assert not is_hecke_path(A2, p, offset=(F(1, 3), 0))
    assert is_hecke_path(A2, p, offset=(1, 0))


def test_split_by_delta_length():
    p = concat(pi_lambda(A2, (1, 0)), pi_lambda(A2, (0, 1)))
    pieces = split_by_delta_length(A2, p, [(1, 0), (0, 1)])
    assert pieces == [pi_lambda(A2, (1, 0)), pi_lambda(A2, (0, 1))]
    assert split_by_delta_length(A2, pi_lambda(A2, (2, 2)), [(1, 1), (1, 1)]) == [pi_lambda(A2, (1, 1))] * 2
    assert split_by_delta_length(A2, p, [(0, 1), (1, 0)]) is None
    assert split_by_delta_length(A2, p, [(1, 0)]) is None


def test_generalized_ls_examples():
    lams = [(1, 0), (0, 1)]
    seed = seed_path(A2, (1, 1))
    assert is_generalized_ls1(A2, seed, lams)
    assert is_generalized_ls1(A2, f_alpha(A2, seed, 0), lams)
    # w1 then straight back along -w1: the junction fails
    v = is_generalized_ls1(A2, concat(pi_lambda(A2, (1, 0)), pi_lambda(A2, (-1, 0))), lams)
    assert not v and "junction" in v.reason
    assert not is_generalized_ls1(A2, seed, [(0, 1), (1, 0)])
    with pytest.raises(PreconditionError):
        is_generalized_ls1(A2, seed, [(0, 0), (1, 1)])


def test_generalized_ls_picks_out_one_summand():
    # The nine products of a w1-path and a w2-path model w1 (x) w2 = adjoint + trivial.
    lams = [(1, 0), (0, 1)]
    orb = set(generate_F_orbit(A2, seed_path(A2, (1, 1))))
    products = [concat(pi_lambda(A2, a), pi_lambda(A2, b)) for a in orbit(A2, (1, 0)) for b in orbit(A2, (0, 1))]
    passing = {p for p in products if is_generalized_ls1(A2, p, lams)}
    assert passing == orb and len(passing) == 8


@pytest.mark.parametrize("name,lams", [("A2", [(1, 0), (0, 1)]), ("B2", [(1, 0), (0, 1)]), ("A2", [(1, 0), (1, 0)])])
def test_generalized_orbit_members_pass(name, lams):
    R = build(name)
    seed = concat(*(pi_lambda(R, l) for l in lams))
    orb = generate_F_orbit(R, seed)
    assert all(is_generalized_ls1(R, p, lams) for p in orb)


def test_generalized_hecke_examples():
    assert is_generalized_hecke(A2, pi_lambda(A2, (1, 0)))
    assert is_generalized_hecke(A2, pi_lambda(A2, (0, 2)))
    assert not is_generalized_hecke(A2, pi_lambda(A2, (1, 1)))  # not along one fundamental coweight
    assert not is_generalized_hecke(A2, pi_lambda(A2, (HALF, 0)))  # ends off the vertex set
    B2 = build("B2")
    assert is_generalized_hecke(B2, pi_lambda(B2, (0, HALF)))
    p = concat(pi_lambda(A2, (1, 0)), pi_lambda(A2, (-1, 1)))
    assert is_generalized_hecke(A2, p) == bool(satisfies_chain_condition(A2, p))


def test_dilation_check():
    B2 = build("B2")
    p = pi_lambda(B2, (0, HALF))
    assert check_dilation_theorem(B2, p)
    assert check_dilation_theorem(B2, p, [(0, HALF)])
    with pytest.raises(PreconditionError):
        check_dilation_theorem(B2, pi_lambda(B2, (1, 1)))


def test_contained_in_delta():
    assert contained_in_delta(A2, pi_lambda(A2, (1, 2)))
    assert not contained_in_delta(A2, pi_lambda(A2, (-1, 1)))
    assert contained_in_delta(A2, pi_lambda(A2, (-1, 1)), offset=(1, 0))
    assert not contained_in_delta(A2, PLPath(A2), offset=(-1, 0))
