"""The translation subgroup of a system and its two-parameter module.

In the basis (b, a2, a3), with b the fixed vector of s2*s3, a translation is
the unipotent matrix that adds lam*b to a2 and mu*b to a3. The pair
zeta = (lam, mu) identifies it; conjugation by the generators acts linearly
on these pairs. The derived maps psi_i(zeta) = s_i.zeta - zeta land on the
distinguished directions c1, c2, c3 and generate the scalar action of the
parameter ring on the module.

The action formula for the first generator (and everything built from it)
is specific to reducible systems; the other two hold for any parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateBasis
from .groups import bfs_ball, commutator
from .linalg import Mat
from .params import CoxeterParams, Rep, build_rep


@dataclass(frozen=True)
class Translation:
    """A harvested translation: its pair and a generator word that, when a
    word is present, evaluates to its matrix."""

    pair: tuple
    word: tuple | None = None


class TranslationModule:
    def __init__(self, params: CoxeterParams, rep: Rep | None = None):
        if params.gamma == 4:
            raise DegenerateBasis("gamma = 4 leaves no adapted basis")
        self.params = params
        self.rep = rep if rep is not None else build_rep(params)
        f = params.field
        l, m, g = params.l, params.m, params.gamma
        self.pb = Mat(f, [[4 - g, 0, 0], [l + 2, 1, 0], [m + 2, 0, 1]])
        self.pb_inv = self.pb.inverse()
        self._c = ((params.alpha, params.beta),
                   (-2 * f.one(), l),
                   (m, -2 * f.one()))

    @property
    def field(self):
        return self.params.field

    def c_vectors(self) -> tuple:
        """The pairs c1, c2, c3 spanning the images of the psi maps."""
        return self._c

    def omega(self, v) -> "object":
        """Coefficient of b in the image of a1 under the translation of v."""
        p = self.params
        lam, mu = v
        return -(lam * (p.l + 2) + mu * (p.m + 2)) / (4 - p.gamma)

    def pair_matrix(self, v) -> Mat:
        lam, mu = v
        f = self.field
        u = Mat(f, [[1, lam, mu], [0, 1, 0], [0, 0, 1]])
        return self.pb * u * self.pb_inv

    def pair_of(self, m: Mat):
        """The (lam, mu) pair of a translation matrix, or None when the
        matrix is not a translation."""
        u = self.pb_inv * m * self.pb
        f = self.field
        one, zero = f.one(), f.zero()
        for i in range(3):
            for j in range(3):
                if i == 0 and j in (1, 2):
                    continue
                if u.rows[i][j] != (one if i == j else zero):
                    return None
        return (u.rows[0][1], u.rows[0][2])

    # -- conjugation action on pairs ------------------------------------

    def act(self, i: int, v) -> tuple:
        lam, mu = v
        p = self.params
        if i == 1:
            w = self.omega(v)
            return (lam + w * p.alpha, mu + w * p.beta)
        if i == 2:
            return (-lam, mu + p.l * lam)
        if i == 3:
            return (lam + p.m * mu, -mu)
        raise ValueError("generator index must be 1, 2 or 3")

    def act_word(self, word, v) -> tuple:
        for i in reversed(word):
            v = self.act(i, v)
        return v

    def psi(self, i: int, v) -> tuple:
        lam, mu = v
        al, am = self.act(i, v)
        return (al - lam, am - mu)

    def psi_word(self, word, v) -> tuple:
        for i in reversed(word):
            v = self.psi(i, v)
        return v

    def act_matrix(self, i: int) -> Mat:
        """The 2x2 matrix of the action of generator i on pairs."""
        f = self.field
        e1 = (f.one(), f.zero())
        e2 = (f.zero(), f.one())
        c1 = self.act(i, e1)
        c2 = self.act(i, e2)
        return Mat(f, [[c1[0], c2[0]], [c1[1], c2[1]]])

    def psi_matrix(self, word) -> Mat:
        ident = Mat.identity(self.field, 2)
        out = ident
        for i in word:
            out = out * (self.act_matrix(i) - ident)
        return out

    # -- matrix-level certificates --------------------------------------

    def materialize_psi(self, word, v) -> Mat:
        """psi_word as a group element: nested commutators of generators
        with the translation matrix of v."""
        m = self.pair_matrix(v)
        for i in reversed(word):
            m = commutator(self.rep.gens[i - 1], m)
        return m

    def materialize_difference(self, i: int, j: int, v) -> Mat:
        """(psi_i - psi_j)(v) as a group element:
        [s_i, T(v)] * [s_j, T(v)]^-1."""
        a = commutator(self.rep.gens[i - 1], self.pair_matrix(v))
        b = commutator(self.rep.gens[j - 1], self.pair_matrix(v))
        return a * b.inverse()


def psi_expectations(mod: TranslationModule) -> list[dict]:
    """The composition table of the psi maps.

    Each row says psi_word(zeta) = (x*lam + y*mu + z*omega(zeta)) * c_k and
    carries the word, the target index k and the coefficient triple (x,y,z).
    Rows whose word involves generator 1 hold on reducible systems.
    """
    p = mod.params
    f = p.field
    one, zero = f.one(), f.zero()
    al, bm = p.alphal, p.betam
    rows = [
        ((1,), 1, (zero, zero, one)),
        ((2,), 2, (one, zero, zero)),
        ((3,), 3, (zero, one, zero)),
        ((1, 2), 1, (one, zero, zero)),
        ((1, 3), 1, (zero, one, zero)),
        ((2, 1), 2, (zero, zero, p.alpha)),
        ((2, 3), 2, (zero, p.m, zero)),
        ((3, 1), 3, (zero, zero, p.beta)),
        ((3, 2), 3, (p.l, zero, zero)),
        ((1, 2, 3), 1, (zero, p.m, zero)),
        ((1, 3, 2), 1, (p.l, zero, zero)),
        ((2, 1, 3), 2, (zero, p.alpha, zero)),
        ((2, 3, 1), 2, (zero, zero, bm)),
        ((3, 1, 2), 3, (p.beta, zero, zero)),
        ((3, 2, 1), 3, (zero, zero, al)),
    ]
    return [{"word": w, "target": k, "coeffs": c} for (w, k, c) in rows]


def psi_table_value(mod: TranslationModule, row: dict, v) -> tuple:
    """Right-hand side of one composition-table row at the pair v."""
    lam, mu = v
    x, y, z = row["coeffs"]
    coeff = x * lam + y * mu + z * mod.omega(v)
    ck = mod.c_vectors()[row["target"] - 1]
    return (coeff * ck[0], coeff * ck[1])


def homothety_checks(mod: TranslationModule) -> list[dict]:
    """The three squared-difference identities as check rows.

    The difference avoiding the first generator squares to its homothety
    for any parameters; the two differences using it do so exactly on
    reducible systems.
    """
    p = mod.params
    f = p.field
    ident = Mat.identity(f, 2)
    d32 = mod.act_matrix(3) - mod.act_matrix(2)
    d13 = mod.act_matrix(1) - mod.act_matrix(3)
    d21 = mod.act_matrix(2) - mod.act_matrix(1)
    rows = [
        ("sq-diff-32", d32 * d32, (4 - p.gamma) * ident, "always"),
        ("sq-diff-13", d13 * d13, (4 - p.beta) * ident, "reducible"),
        ("sq-diff-21", d21 * d21, (4 - p.alpha) * ident, "reducible"),
    ]
    return [{"name": n, "lhs": got, "rhs": want, "gate": g}
            for n, got, want, g in rows]


def scaling_routes(mod: TranslationModule):
    """Constructive scalar actions on the module, as (name, map, scalar).

    Each map is built only from psi compositions and differences, so its
    effect on an actual translation is materializable inside the group; the
    scalar is what the map must multiply every pair by (reducible systems).
    """
    p = mod.params
    ident = Mat.identity(p.field, 2)
    d32 = mod.act_matrix(3) - mod.act_matrix(2)
    d13 = mod.act_matrix(1) - mod.act_matrix(3)
    d21 = mod.act_matrix(2) - mod.act_matrix(1)
    m_gamma = 4 * ident - d32 * d32
    m_beta = 4 * ident - d13 * d13
    m_alpha = 4 * ident - d21 * d21
    four_term = (mod.psi_matrix((1, 3, 2)) + 2 * mod.psi_matrix((1, 3))
                 - m_beta * mod.psi_matrix((2,)) + mod.psi_matrix((2, 1, 3)))
    m_alphal = four_term - 2 * m_beta
    m_betam = (8 * ident - 2 * m_alpha - 2 * m_beta - 2 * m_gamma) - m_alphal
    m_s = 4 * ident - m_alpha - m_beta - m_gamma
    return [
        ("scale-alpha", m_alpha, p.alpha),
        ("scale-beta", m_beta, p.beta),
        ("scale-gamma", m_gamma, p.gamma),
        ("scale-alphal", m_alphal, p.alphal),
        ("scale-betam", m_betam, p.betam),
        ("scale-root-gap", m_alphal - m_s, p.alphal - p.half_root_sum),
    ]


def harvest_translations(mod: TranslationModule, radius: int = 10,
                         cap: int = 200_000, need: int = 8) -> list[Translation]:
    """Collect translations found in a group ball, with their words.

    If the ball yields fewer than `need` distinct nontrivial translations,
    the list is padded with sums of found ones (word concatenation), which
    stay inside the subgroup.
    """
    ball = bfs_ball(mod.rep.gens, radius=radius, cap=cap)
    found: dict = {}
    for m, w in ball.elements.items():
        pr = mod.pair_of(m)
        if pr is not None and any(pr) and pr not in found:
            found[pr] = w
    base = list(found.items())
    k = 0
    while len(found) < need and k < len(base):
        p0, w0 = base[k]
        for p1, w1 in base:
            s = (p0[0] + p1[0], p0[1] + p1[1])
            if any(s) and s not in found:
                found[s] = w0 + w1
                if len(found) >= need:
                    break
        k += 1
    return [Translation(p, w) for p, w in found.items()]


def witness_records(mod: TranslationModule, translations) -> list[dict]:
    """Certificates that coefficient sets of the translation module map into
    each other along the psi maps.

    For each harvested translation and each two-step composition row, the
    record carries the expected multiple of the target direction and the
    commutator word that materializes it in the group.
    """
    out = []
    rows = [r for r in psi_expectations(mod) if len(r["word"]) == 2]
    for t in translations:
        for row in rows:
            expected = psi_table_value(mod, row, t.pair)
            computed = mod.psi_word(row["word"], t.pair)
            mat = mod.materialize_psi(row["word"], t.pair)
            out.append({
                "translation": t,
                "word": row["word"],
                "expected": expected,
                "computed": computed,
                "materialized": mod.pair_of(mat),
            })
    return out
