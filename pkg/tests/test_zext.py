"""Twisted generator systems built from the axis involutions: involutivity,
squares, action tables, pairings and quotient relations."""

import pytest

from reflect3.errors import DegenerateParams, PreconditionFailed
from reflect3.linalg import Mat
from reflect3.params import build_rep, make_params
from reflect3.translation import TranslationModule
from reflect3.zext import (action_line_rows, adapted_triple_rows,
                           adjoin_commuting_involution, axis_divisors,
                           axis_involution, commutation_rows, dihedral_facts,
                           halfturn_word_rows, involution_rows, pairing_rows,
                           quotient_rows, root_flip_rows, twisted,
                           z_product_rows, z_square_rows)

from helpers import assert_rows, names_of


def test_axis_involution_is_involution(pack):
    for name in ("affine-636", "irreducible-444"):
        p = pack[name]
        ident = Mat.identity(p.field, 3)
        for i in (1, 2, 3):
            z = axis_involution(p, i)
            assert z * z == ident, (name, i)
            assert z != ident


def test_axis_involution_degenerate_divisor(pack):
    # irreducible-434 has m + 2 = 0, killing the third axis involution
    p = pack["irreducible-434"]
    assert not axis_divisors(p)[2]
    with pytest.raises(DegenerateParams):
        axis_involution(p, 3)


def test_axis_involutions_share_the_axis(pack):
    from reflect3.params import b_vectors
    p = pack["affine-636"]
    b1 = b_vectors(p)[0]
    for i in (1, 2, 3):
        assert axis_involution(p, i).apply(b1) == b1


def test_involution_and_commutation_rows(extended):
    for p in extended.values():
        rep = build_rep(p)
        assert_rows(involution_rows(rep), p.is_reducible(), p.label())
        assert_rows(commutation_rows(rep), p.is_reducible(), p.label())


def test_halfturn_word_rows(extended):
    for p in extended.values():
        rep = build_rep(p)
        assert_rows(halfturn_word_rows(rep), p.is_reducible(), p.label())


def test_z_product_pairs_frozen(pack):
    # on affine-333 (l = m = 1): z1 z2 -> (2/3, 0), z1 z3 -> (0, 2/3)
    mod = TranslationModule(pack["affine-333"])
    f = mod.field
    rows = {r["name"]: r for r in z_product_rows(mod)}
    third = f.from_rational(2) / 3
    assert rows["axis-prod-12"]["lhs"] == (third, f.zero())
    assert rows["axis-prod-13"]["lhs"] == (f.zero(), third)
    assert rows["axis-prod-23"]["lhs"] == (-third, third)
    assert_rows(list(rows.values()), True, "affine-333")


def test_z_square_rows_and_sign_flags(extended):
    for p in extended.values():
        if p.gamma == 4:
            continue
        mod = TranslationModule(p)
        rows = z_square_rows(mod)
        assert_rows(rows, p.is_reducible(), p.label())
        flags = [r for r in rows if r.get("flag")]
        for r in flags:
            assert r["lhs"] != r["rhs"], (p.label(), r["name"])


def test_action_line_rows(extended):
    for p in extended.values():
        rep = build_rep(p)
        assert_rows(action_line_rows(rep), p.is_reducible(), p.label())


def test_action_line_flags_present(pack):
    rows = action_line_rows(build_rep(pack["affine-636"]))
    names = names_of(rows)
    assert "s32-action-line" in names
    assert "s23-action-line" in names


def test_pairing_rows_reducible_only(pack, reducible_systems):
    with pytest.raises(PreconditionFailed):
        pairing_rows(build_rep(pack["irreducible-444"]))
    for p in reducible_systems:
        rows = pairing_rows(build_rep(p))
        assert len(rows) == 21
        assert_rows(rows, True, p.label())


def test_pairing_values_frozen(pack):
    # affine-636: alpha=3, beta=1, gamma=3; mirrored and plain values
    p = pack["affine-636"]
    rows = {r["name"]: r for r in pairing_rows(build_rep(p))}
    f = p.field
    assert rows["pair-s1-s21"]["rhs"] == f.one()          # 4 - alpha
    assert rows["pair-s21-s31"]["rhs"] == f.from_rational(3)  # gamma
    assert rows["pair-s21-s23"]["rhs"] == f.from_rational(4)
    for r in rows.values():
        assert r["lhs"] == r["rhs"]


def test_root_flip_rows(reducible_systems, pack):
    with pytest.raises(PreconditionFailed):
        root_flip_rows(pack["irreducible-444"])
    for p in reducible_systems:
        rows = root_flip_rows(p)
        assert_rows(rows, True, p.label())
        names = names_of(rows)
        assert "flip-ag-root-paren" in names or "flip-bg-root-paren" in names


def test_twisted_generator_is_reflection_on_reducible(pack):
    p = pack["affine-636"]
    rep = build_rep(p)
    ident = Mat.identity(p.field, 3)
    assert twisted(rep, 2, 1) * twisted(rep, 2, 1) == ident


def test_adjoin_commuting_involution():
    # odd product order: adjoin a fresh central involution in one more
    # dimension and check it commutes with both blocks
    p = make_params(4, 3, 4, mode="explicit", l=-1)
    rep = build_rep(p)
    ba, bb, z = adjoin_commuting_involution(rep.s1, rep.s3)
    assert z * z == Mat.identity(p.field, 4)
    assert z * ba == ba * z and z * bb == bb * z
    assert ba * ba == Mat.identity(p.field, 4)


def test_dihedral_facts_cases(pack):
    p = pack["irreducible-434"]
    rep = build_rep(p)
    facts = dihedral_facts(rep.s1, rep.s2)
    assert facts["n"] == 4
    assert_rows(facts["rows"], p.is_reducible(), "dihedral-434")


def test_adapted_triple_rows(reducible_systems, pack):
    with pytest.raises(PreconditionFailed):
        adapted_triple_rows(build_rep(pack["irreducible-444"]))
    for p in reducible_systems:
        if p.gamma == 4:
            continue
        rep = build_rep(p)
        assert_rows(adapted_triple_rows(rep), True, p.label())


def test_quotient_rows(reducible_systems, pack):
    with pytest.raises(PreconditionFailed):
        quotient_rows(build_rep(pack["irreducible-434"]))
    for p in reducible_systems:
        rep = build_rep(p)
        assert_rows(quotient_rows(rep), True, p.label())
