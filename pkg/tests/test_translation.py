"""The translation subgroup: pair coordinates, the induced two-dimensional
action, scalar routes, and harvesting actual group elements."""

from fractions import Fraction

import pytest

from reflect3.errors import DegenerateBasis
from reflect3.linalg import Mat, vec_scale
from reflect3.params import CoxeterParams, build_rep, make_params
from reflect3.translation import (TranslationModule, harvest_translations,
                                  homothety_checks, psi_expectations,
                                  psi_table_value, scaling_routes,
                                  witness_records)


@pytest.fixture(scope="module")
def aff333(pack):
    return TranslationModule(pack["affine-333"])


def test_pair_matrix_frozen(aff333):
    f = aff333.field
    got = aff333.pair_matrix((f.one(), f.zero()))
    want = Mat(f, [[-2, 3, 0], [-3, 4, 0], [-3, 3, 1]])
    assert got == want


def test_pair_roundtrip(aff333):
    f = aff333.field
    for v in ((f.one(), f.zero()), (f.from_rational(Fraction(2, 3)),
                                    f.from_rational(-5))):
        assert aff333.pair_of(aff333.pair_matrix(v)) == v


def test_pair_of_rejects_non_translation(aff333):
    assert aff333.pair_of(aff333.rep.s1) is None


def test_translation_composition_is_addition(aff333):
    f = aff333.field
    u = (f.one(), f.from_rational(2))
    v = (f.from_rational(-3), f.one())
    w = (u[0] + v[0], u[1] + v[1])
    assert aff333.pair_matrix(u) * aff333.pair_matrix(v) == aff333.pair_matrix(w)


def test_gamma_4_has_no_adapted_basis(pack):
    p = pack["affine-333"]
    bad = CoxeterParams(p.field, 4, 4, 4, 1, 1, 1, p.alpha, p.beta,
                        p.field.from_rational(4), p.field.from_rational(2),
                        p.field.from_rational(2), None, "explicit")
    with pytest.raises(DegenerateBasis):
        TranslationModule(bad)


def test_conjugation_matches_induced_action(pack):
    for name in ("affine-636", "reducible-444"):
        mod = TranslationModule(pack[name])
        f = mod.field
        v = (f.one(), f.from_rational(Fraction(1, 2)))
        tv = mod.pair_matrix(v)
        for i in (1, 2, 3):
            g = mod.rep.gens[i - 1]
            got = mod.pair_of(g * tv * g.inverse())
            assert got == mod.act(i, v), (name, i)


def test_act_word_reverses_letters(aff333):
    f = aff333.field
    v = (f.one(), f.from_rational(3))
    step = aff333.act(2, aff333.act(1, v))
    assert aff333.act_word((2, 1), v) == step


def test_action_matrices_are_involutions(pack):
    for p in pack.values():
        mod = TranslationModule(p)
        ident = Mat.identity(p.field, 2)
        assert mod.act_matrix(2) * mod.act_matrix(2) == ident
        assert mod.act_matrix(3) * mod.act_matrix(3) == ident
        square1 = mod.act_matrix(1) * mod.act_matrix(1)
        assert (square1 == ident) == p.is_reducible(), p.label()


def test_homothety_gates(pack):
    for p in pack.values():
        mod = TranslationModule(p)
        for row in homothety_checks(mod):
            agree = row["lhs"] == row["rhs"]
            if row["gate"] == "always":
                assert agree, (p.label(), row["name"])
            else:
                assert agree == p.is_reducible(), (p.label(), row["name"])


def test_psi_expectations_table(pack):
    for name in ("affine-636", "irreducible-444"):
        mod = TranslationModule(pack[name])
        f = mod.field
        v = (f.from_rational(2), f.from_rational(-3))
        rows = psi_expectations(mod)
        assert len(rows) == 15
        for row in rows:
            got = mod.psi_word(row["word"], v)
            want = psi_table_value(mod, row, v)
            assert got == want, (name, row["word"])


def test_scaling_routes_on_reducible(pack):
    mod = TranslationModule(pack["affine-636"])
    f = mod.field
    ident = Mat.identity(f, 2)
    v = (f.one(), f.from_rational(Fraction(-2, 5)))
    for name, mp, scalar in scaling_routes(mod):
        assert mp == scalar * ident, name
        assert mp.apply(v) == vec_scale(scalar, v), name


def test_scaling_routes_gamma_always(pack):
    # the gamma route is a homothety even off the reducible locus
    mod = TranslationModule(pack["irreducible-444"])
    routes = dict((n, m) for n, m, s in scaling_routes(mod))
    f = mod.field
    assert routes["scale-gamma"] == f.from_rational(2) * Mat.identity(f, 2)


def test_harvest_finds_translations(pack):
    mod = TranslationModule(pack["affine-333"])
    found = harvest_translations(mod, radius=6, need=5)
    assert len(found) >= 5
    for t in found:
        from reflect3.groups import matrix_of_word
        assert matrix_of_word(mod.rep.gens, t.word) == mod.pair_matrix(t.pair)
        assert any(t.pair)


def test_witness_records_replay(pack):
    mod = TranslationModule(pack["affine-636"])
    recs = witness_records(mod, harvest_translations(mod, radius=6, need=4))
    assert recs
    for r in recs:
        assert r["computed"] == r["expected"], r["word"]
        assert r["materialized"] == r["expected"], r["word"]


def test_materialize_psi_commutator(pack):
    # [s_i, T(v)] realizes psi_i inside the group, for any system
    for name in ("affine-333", "irreducible-444"):
        mod = TranslationModule(pack[name])
        f = mod.field
        v = (f.one(), f.from_rational(-2))
        for i in (2, 3):
            got = mod.pair_of(mod.materialize_psi((i,), v))
            assert got == mod.psi(i, v), (name, i)
