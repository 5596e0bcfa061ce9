"""Parameter systems and the defining rank-3 reflection representation.

A system is determined by three rotation orders (p, q, r), optional rotation
classes (kp, kq, kr), and a module parameter l with l*m fixed by the third
rotation value. The reducible modes pick l so that the representation has an
invariant plane (the reducibility indicator delta vanishes); explicit mode
takes l as given.

Conventions. Matrices act on columns. The three generator reflections are

    s1 = [[-1, a, b],        s2 = [[ 1, 0, 0],        s3 = [[ 1, 0, 0],
          [ 0, 1, 0],              [ 1,-1, l],              [ 0, 1, 0],
          [ 0, 0, 1]]              [ 0, 0, 1]]              [ 1, m,-1]]

with a = alpha, b = beta, so s_i(x) = x - phi_i(x) a_i for the standard basis
vector a_i and the linear forms phi_1 = (2, -alpha, -beta),
phi_2 = (-1, 2, -l), phi_3 = (-1, -m, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cheby import is_exact_rotation_order
from .errors import (BadInput, DegenerateParams, ExtractionFailed,
                     NotAReflection)
from .field import CycloBase, Field, FieldElem, make_field, sqrt_in_field, two_cos
from .linalg import Mat, mat_from_cols, vec_is_zero, vec_scale, vec_sub

MODES = ("reducible-plus", "reducible-minus", "explicit")


def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


@dataclass(frozen=True)
class CoxeterParams:
    """One parameter system, with all values exact in `field`."""

    field: Field
    p: int
    q: int
    r: int
    kp: int
    kq: int
    kr: int
    alpha: FieldElem
    beta: FieldElem
    gamma: FieldElem
    l: FieldElem
    m: FieldElem
    theta: FieldElem | None
    mode: str
    name: str = ""

    @property
    def alphal(self) -> FieldElem:
        return self.alpha * self.l

    @property
    def betam(self) -> FieldElem:
        return self.beta * self.m

    @property
    def half_root_sum(self) -> FieldElem:
        """Half the sum of the two roots of the module polynomial."""
        return 4 - self.alpha - self.beta - self.gamma

    @property
    def disc(self) -> FieldElem:
        """Quarter discriminant of the module polynomial."""
        s = self.half_root_sum
        return s * s - self.alpha * self.beta * self.gamma

    def delta(self) -> FieldElem:
        """The reducibility indicator; zero iff the representation has an
        invariant plane."""
        return (8 - 2 * self.alpha - 2 * self.beta - 2 * self.gamma
                - self.alphal - self.betam)

    def is_reducible(self) -> bool:
        return not self.delta()

    def orders(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def label(self) -> str:
        if self.name:
            return self.name
        return f"({self.p},{self.q},{self.r})/{self.mode}"


def _rotation_value(field: Field, base: CycloBase, n_lcm: int, p: int, k: int) -> FieldElem:
    # 4*cos(k*pi/p)^2 = 2 + 2*cos(2k*pi/p), exact in the base field
    j = 2 * k * n_lcm // p
    return field.from_base(two_cos(base, j)) + 2


def make_params(p: int, q: int, r: int, *, kp: int = 1, kq: int = 1, kr: int = 1,
                mode: str = "reducible-plus", l=None, ext_square=None,
                name: str = "") -> CoxeterParams:
    """Build a parameter system.

    Reducible modes solve for l so that delta vanishes (plus/minus pick the
    root of the module polynomial assigned to alpha*l). Explicit mode takes l
    as an element of the working field; ext_square optionally adjoins a square
    root to the field first so that l can be written in it.
    """
    if mode not in MODES:
        raise BadInput(f"unknown mode {mode!r}")
    for n, k, nm in ((p, kp, "p"), (q, kq, "q"), (r, kr, "r")):
        if n < 3:
            raise DegenerateParams(f"order {nm} must be at least 3")
        if not (0 < k < n) or gcd(k, n) != 1:
            raise DegenerateParams(f"rotation class k{nm} must be coprime to {nm} and inside (0, {nm})")
    n_lcm = _lcm(p, q, r)
    base = CycloBase(n_lcm)
    field = make_field(n_lcm, ext_square)

    alpha = _rotation_value(field, base, n_lcm, p, kp)
    beta = _rotation_value(field, base, n_lcm, q, kq)
    gamma = _rotation_value(field, base, n_lcm, r, kr)
    s = 4 - alpha - beta - gamma
    d = s * s - alpha * beta * gamma

    if mode == "explicit":
        if l is None:
            raise BadInput("explicit mode needs l")
        if isinstance(l, (int, Fraction)):
            l = field.from_rational(l)
        elif isinstance(l, FieldElem):
            if not (l.field is field or l.field.same_structure(field)):
                raise BadInput("l lives in a different field than the system")
            l = FieldElem(field, l.parts) if l.field is not field else l
        else:
            raise BadInput("l must be an int, Fraction or FieldElem")
        if not l:
            raise DegenerateParams("l must be nonzero")
        m = gamma / l
        # alpha, beta, gamma are base elements, so d always is one too
        theta = sqrt_in_field(field, d.base_part()[0])
        return CoxeterParams(field, p, q, r, kp, kq, kr, alpha, beta, gamma,
                             l, m, theta, mode, name)

    # reducible modes: need a square root of the quarter discriminant
    d_base = d.base_part()[0]
    theta = sqrt_in_field(field, d_base)
    if theta is None:
        if field.ncomp == 2:
            raise BadInput("discriminant has no square root in the extended field; "
                           "drop ext_square to let the field be chosen automatically")
        field = Field(base, d_base)
        alpha, beta, gamma = (FieldElem(field, (x.parts[0], base.zero()))
                              for x in (alpha, beta, gamma))
        s = 4 - alpha - beta - gamma
        theta = field.gen()
    root = s + theta if mode == "reducible-plus" else s - theta
    other = s - theta if mode == "reducible-plus" else s + theta
    l = root / alpha
    if not l:
        raise DegenerateParams("degenerate system: the chosen root is zero")
    m = gamma / l
    params = CoxeterParams(field, p, q, r, kp, kq, kr, alpha, beta, gamma,
                           l, m, theta, mode, name)
    assert params.betam == other
    assert not params.delta()
    return params


# ---------------------------------------------------------------------------
# the defining representation


@dataclass(frozen=True)
class Rep:
    """The defining representation: three exact reflection matrices."""

    params: CoxeterParams
    s1: Mat
    s2: Mat
    s3: Mat

    @property
    def gens(self) -> tuple[Mat, Mat, Mat]:
        return (self.s1, self.s2, self.s3)

    @property
    def field(self) -> Field:
        return self.params.field


def build_rep(params: CoxeterParams) -> Rep:
    f = params.field
    a, b, g = params.alpha, params.beta, params.gamma
    l, m = params.l, params.m
    s1 = Mat(f, [[-1, a, b], [0, 1, 0], [0, 0, 1]])
    s2 = Mat(f, [[1, 0, 0], [1, -1, l], [0, 0, 1]])
    s3 = Mat(f, [[1, 0, 0], [0, 1, 0], [1, m, -1]])
    return Rep(params, s1, s2, s3)


def std_basis(field: Field) -> tuple:
    one, zero = field.one(), field.zero()
    return ((one, zero, zero), (zero, one, zero), (zero, zero, one))


def phi_functionals(params: CoxeterParams) -> tuple:
    """The three linear forms with s_i(x) = x - phi_i(x) a_i."""
    f = params.field
    one = f.one()
    return (
        (2 * one, -params.alpha, -params.beta),
        (-one, 2 * one, -params.l),
        (-one, -params.m, 2 * one),
    )


def cartan(params: CoxeterParams) -> Mat:
    """Rows are the phi forms evaluated on the standard basis."""
    return Mat(params.field, [list(row) for row in phi_functionals(params)])


def apply_form(form, vec) -> FieldElem:
    acc = form[0] * vec[0]
    for c, x in zip(form[1:], vec[1:]):
        acc = acc + c * x
    return acc


def rotation_pairs() -> tuple:
    """Index pairs whose rotation fixes the b-vector of the same slot."""
    return ((2, 3), (1, 3), (1, 2))


def b_vectors(params: CoxeterParams) -> tuple:
    """The distinguished fixed vectors of the three rotations.

    b1 is fixed by s2*s3, b2 by s1*s3, b3 by s1*s2; normalizations follow the
    closed forms below, which fixed_line() cross-checks against kernels.
    """
    f = params.field
    a, b, g = params.alpha, params.beta, params.gamma
    l, m = params.l, params.m
    b1 = (4 - g, l + 2, m + 2)
    b2 = (2 * a + b * m, 4 - b, a + 2 * m)
    b3 = (2 * b + a * l, b + 2 * l, 4 - a)
    return tuple(tuple(x if isinstance(x, FieldElem) else f.from_rational(x) for x in v)
                 for v in (b1, b2, b3))


def fixed_line(rep: Rep, i: int, j: int) -> tuple:
    """Kernel basis vector of (s_i s_j - 1); errors if the fixed space is not
    a line."""
    gens = rep.gens
    rot = gens[i - 1] * gens[j - 1]
    ker = (rot - Mat.identity(rep.field, 3)).kernel()
    if len(ker) != 1:
        raise DegenerateParams(f"rotation ({i},{j}) fixes a space of dimension {len(ker)}")
    return ker[0]


def t_matrix(params: CoxeterParams) -> Mat:
    """Columns are b1, b2, b3."""
    return mat_from_cols(params.field, list(b_vectors(params)))


def t_relations(params: CoxeterParams) -> list[dict]:
    """The nine 2x2 minors of the b-vector matrix, each a unit multiple of
    the reducibility indicator.

    Returns one entry per minor position with the minor's exact value and its
    unit factor; value == unit * delta always, so the nine vanish together
    exactly on reducible systems.
    """
    f = params.field
    t = t_matrix(params)
    units = {
        (1, 1): 2 * f.one(), (1, 2): f.one(), (1, 3): -f.one(),
        (2, 1): params.alpha, (2, 2): 2 * f.one(), (2, 3): params.m,
        (3, 1): -params.beta, (3, 2): params.l, (3, 3): 2 * f.one(),
    }
    out = []
    for i in range(1, 4):
        for j in range(1, 4):
            rows = [r for r in range(3) if r != i - 1]
            cols = [c for c in range(3) if c != j - 1]
            minor = (t.rows[rows[0]][cols[0]] * t.rows[rows[1]][cols[1]]
                     - t.rows[rows[0]][cols[1]] * t.rows[rows[1]][cols[0]])
            out.append({"pos": (i, j), "value": minor, "unit": units[(i, j)]})
    return out


def q_poly(params: CoxeterParams) -> tuple:
    """Coefficients (constant first) of the module polynomial
    X^2 - 2*S*X + alpha*beta*gamma."""
    f = params.field
    return (params.alpha * params.beta * params.gamma,
            -2 * params.half_root_sum, f.one())


def q_roots(params: CoxeterParams) -> tuple | None:
    if params.theta is None:
        return None
    s = params.half_root_sum
    return (s + params.theta, s - params.theta)


def center_space(params: CoxeterParams) -> list:
    """Kernel of the pairing matrix: vectors on which every phi form
    vanishes."""
    return cartan(params).kernel()


def delta_identity_checks(rep: Rep) -> list[tuple]:
    """Cross identities tying the b-vectors, the pairing matrix and delta.

    Returns (name, lhs, rhs) with lhs == rhs expected; all hold for any
    parameter values, reducible or not.
    """
    params = rep.params
    f = rep.field
    delta = params.delta()
    t = t_matrix(params)
    c = cartan(params)
    ident = Mat.identity(f, 3)
    checks = [
        ("product-tc", t * c, delta * ident),
        ("product-ct", c * t, delta * ident),
        ("gram-det", t.det(), delta * delta),
    ]
    bs = b_vectors(params)
    basis = std_basis(f)
    for j in range(3):
        lhs = tuple(delta * x for x in basis[j])
        rhs = (f.zero(),) * 3
        for k in range(3):
            rhs = tuple(y + c.rows[k][j] * x for y, x in zip(rhs, bs[k]))
        checks.append((f"b-span-a{j + 1}", lhs, rhs))
    for i in range(3):
        lhs = rep.gens[i].apply(bs[i])
        rhs = vec_sub(bs[i], vec_scale(delta, basis[i]))
        checks.append((f"reflect-b{i + 1}", lhs, rhs))
    return checks


def rotation_order_checks(rep: Rep) -> list[tuple]:
    """(pair, value, declared order, polynomial-test result) per rotation."""
    params = rep.params
    vals = (params.gamma, params.beta, params.alpha)
    orders = (params.r, params.q, params.p)
    out = []
    for (i, j), val, n in zip(rotation_pairs(), vals, orders):
        out.append(((i, j), val, n, is_exact_rotation_order(val, n)))
    return out


# ---------------------------------------------------------------------------
# reflections as data, pairings, parameter extraction


def refl_data(mat: Mat) -> tuple:
    """Split a reflection into (root vector, linear form).

    mat must square to the identity and move a one-dimensional space;
    mat(x) = x - form(x) * root with form(root) = 2.
    """
    n = mat.n
    f = mat.field
    diff = mat - Mat.identity(f, n)
    cols = list(zip(*diff.rows))
    root = None
    for col in cols:
        if not vec_is_zero(col):
            root = tuple(-x for x in col)
            break
    if root is None:
        raise NotAReflection("matrix is the identity")
    if not (mat * mat).is_identity():
        raise NotAReflection("matrix does not square to the identity")
    pivot = next(i for i, x in enumerate(root) if x)
    pinv = root[pivot].inv()
    form = tuple(-cols[j][pivot] * pinv for j in range(n))
    # rank-one check: every column of mat - 1 must be form[j] * root
    for j, col in enumerate(cols):
        if tuple(-form[j] * x for x in root) != tuple(col):
            raise NotAReflection("moved space has dimension above one")
    if apply_form(form, root) != 2:
        raise NotAReflection("root is not sent to its negative")
    return root, form


def pairing(m1: Mat, m2: Mat) -> FieldElem:
    """Scale-invariant pairing of two reflections: form1(root2)*form2(root1)."""
    e1, f1 = refl_data(m1)
    e2, f2 = refl_data(m2)
    return apply_form(f1, e2) * apply_form(f2, e1)


@dataclass(frozen=True)
class Extraction:
    """Parameters read off a triple of reflections, with the adapted basis
    that realizes them."""

    alpha: FieldElem
    beta: FieldElem
    gamma: FieldElem
    alphal: FieldElem
    betam: FieldElem
    basis: tuple

    def five(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.alphal, self.betam)


def extract_params(t1: Mat, t2: Mat, t3: Mat, e1=None) -> Extraction:
    """Read the parameter five-tuple off a triple of reflections.

    The adapted basis is (e1, t2(e1)-e1, t3(e1)-e1); e1 defaults to the root
    of t1 and may be passed explicitly to pin its scaling. The result is
    invariant under rescaling of e1.
    """
    r1, f1 = refl_data(t1)
    r2, f2 = refl_data(t2)
    r3, f3 = refl_data(t3)
    if e1 is None:
        e1 = r1
    else:
        e1 = tuple(e1)
        pivot = next(i for i, x in enumerate(r1) if x)
        u = e1[pivot] / r1[pivot]
        if not u or tuple(u * x for x in r1) != e1:
            raise ExtractionFailed("e1 does not span the root line of the first reflection")
        f1 = tuple(x / u for x in f1)
    alpha = apply_form(f1, r2) * apply_form(f2, e1)
    beta = apply_form(f1, r3) * apply_form(f3, e1)
    gamma = apply_form(f2, r3) * apply_form(f3, r2)
    e2p = vec_sub(t2.apply(e1), e1)
    e3p = vec_sub(t3.apply(e1), e1)
    d2 = apply_form(f2, e1)
    d3 = apply_form(f3, e1)
    if not d2 or not d3:
        raise ExtractionFailed("first basis vector is fixed by another reflection")
    lhat = apply_form(f2, e3p) / d2
    mhat = apply_form(f3, e2p) / d3
    return Extraction(alpha, beta, gamma, alpha * lhat, beta * mhat,
                      (e1, e2p, e3p))


def dual_rep(rep: Rep) -> tuple:
    """Transposed generators: the action on linear forms."""
    return tuple(s.transpose() for s in rep.gens)


def _parallel(u, v) -> bool:
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n)
               for j in range(i + 1, n))


def dual_rows(rep: Rep) -> list[dict]:
    """The transposed triple realizes the system with the two mixed
    parameters swapped, and transposing twice returns the original.

    Parameter readout goes through extract_params, which never inverts
    the root basis, so the rows survive the reducible systems on which
    that basis degenerates. A flag row records a published action line
    whose step lands on the wrong dual root direction.
    """
    p = rep.params
    duals = dual_rep(rep)
    ext = extract_params(*duals)
    own = extract_params(*rep.gens)
    r2 = refl_data(duals[1])[0]
    r3 = refl_data(duals[2])[0]
    rows = [
        {"name": "dual-params", "lhs": ext.five(),
         "rhs": (p.alpha, p.beta, p.gamma, p.betam, p.alphal),
         "gate": "always"},
        {"name": "self-params", "lhs": own.five(),
         "rhs": (p.alpha, p.beta, p.gamma, p.alphal, p.betam),
         "gate": "always"},
        {"name": "dual-involutive",
         "lhs": tuple(m.transpose() for m in duals), "rhs": rep.gens,
         "gate": "always"},
        {"name": "dual-step-2", "lhs": _parallel(ext.basis[1], r2),
         "rhs": True, "gate": "always"},
        {"name": "dual-step-3", "lhs": _parallel(ext.basis[2], r3),
         "rhs": True, "gate": "always"},
        {"name": "dual-basis-typo", "flag": True, "expect": "different",
         "lhs": _parallel(ext.basis[2], r3),
         "rhs": _parallel(ext.basis[2], r2),
         "note": "published action line sends the third step to the second "
                 "dual root; it is parallel to the third"},
    ]
    return rows
