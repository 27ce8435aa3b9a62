import pathlib
from fractions import Fraction

import pytest

import syntaft

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def brute_force_homs(order, product, identity, genus):
    inverse = {a: next(b for b in range(order) if product(a, b) == identity) for a in range(order)}
    count = 0

    def walk(acc, remaining):
        nonlocal count
        if remaining == 0:
            count += acc == identity
            return
        for a in range(order):
            for b in range(order):
                walk(product(product(product(product(acc, a), b), inverse[a]), inverse[b]), remaining - 1)

    walk(identity, genus)
    return count


def test_wfa_evaluation_and_minimization():
    counting = syntaft.load_file(DATA / "a_counting.wfa")
    assert counting("aab") == 2
    assert counting(["a", "b", "a"]) == 2
    one = syntaft.load_file(DATA / "constant_one.wfa")
    assert one.dim == 3
    assert syntaft.minimize(one).dim == 1
    assert syntaft.equivalent(one, syntaft.minimize(one))
    assert syntaft.is_exchangeable(counting)


def test_algebra_predicates():
    m2 = syntaft.matrix_algebra(2)
    trace = syntaft.Functional([1, 0, 0, 1])
    assert syntaft.validate(m2) == (True, "")
    assert syntaft.is_semisimple(m2)
    assert syntaft.is_symmetric(m2, trace)
    assert syntaft.canonical_form(m2).coefficients == [2, 0, 0, 2]
    assert not syntaft.is_semisimple(syntaft.dual_numbers())
    assert syntaft.block_sizes(syntaft.diagonal_algebra(3)) == [1, 1, 1]
    series = syntaft.series_from_algebra(m2, trace)
    assert series(["E12", "E21"]) == 1


def test_group_homs_match_brute_force():
    s3 = syntaft.catalog("symmetric", 3)
    table = syntaft.load_file(DATA / "s3.group")
    assert table.order == s3.order == 6
    # Oracle: S3 as permutations of {0,1,2}, composed directly.
    import itertools

    perms = list(itertools.permutations(range(3)))
    compose = lambda i, j: perms.index(tuple(perms[i][perms[j][k]] for k in range(3)))
    assert syntaft.count_surface_homs(s3, 2) == brute_force_homs(6, compose, perms.index((0, 1, 2)), 2)


def test_state_sum_and_closed_invariant():
    genus2 = syntaft.standard_triangulation(2)
    assert syntaft.analyze(genus2)["genus"] == 2
    assert syntaft.state_sum(syntaft.matrix_algebra(2), genus2) == Fraction(1, 4)
    scrambled = syntaft.random_moves(genus2, 3, 7)
    assert syntaft.state_sum(syntaft.matrix_algebra(2), scrambled) == Fraction(1, 4)
    alg, dw = syntaft.group_algebra(syntaft.catalog("cyclic", 2), "dw")
    homs = brute_force_homs(2, lambda a, b: (a + b) % 2, 0, 2)
    assert syntaft.closed_invariant(alg, dw, 2) == Fraction(homs, 2)


def test_group_code_report():
    report = syntaft.verify_group_code(syntaft.catalog("cyclic", 3))
    assert report["all_pass"]
    assert report["algebra_dim"] == 3


def test_mso():
    f = syntaft.parse_formula("exists x. P_a(x)")
    assert syntaft.evaluate_formula(f, "aba") == 2
    assert syntaft.evaluate_formula(syntaft.parse_formula("forall x. 2"), "abc") == 8
    assert syntaft.is_restricted(f)
    counting = syntaft.load_file(DATA / "a_counting.wfa")
    g = syntaft.wfa_to_formula(syntaft.minimize(counting))
    assert syntaft.evaluate_formula(g, "aab", ["a", "b"]) == 2


def test_errors():
    with pytest.raises(syntaft.Error) as info:
        syntaft.catalog("dihedral", 4)
    assert info.value.code == "UnknownCatalogEntry"
    with pytest.raises(syntaft.ParseError) as info:
        syntaft.load("syntaft-functional v1\ndim 2\ncoeffs 1 1/0\n")
    assert info.value.line == 3
    with pytest.raises(syntaft.ParseError):
        syntaft.parse_formula("exists X. x in X")


def test_cli():
    code, out, _ = syntaft.run_cli(["wfa", "eval", str(DATA / "a_counting.wfa"), "--word", "aab"])
    assert (code, out) == (0, "2\n")
    code, _, _ = syntaft.run_cli(["group", "make", "--name", "foo"])
    assert code == 2
