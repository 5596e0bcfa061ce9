"""The default parameter pack and config-file ingestion.

Configs are JSON objects {"p", "q", "r", "mode", "root", "l",
"conjugates", "ext_square", "name"}. Field elements are written either
as a rational (int or "a/b" string) or as an array of one or two arrays
of rationals: the outer index is the power of the adjoined square root,
the inner index the power of the base cosine generator.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .errors import BadInput
from .field import Field, FieldElem, make_field
from .params import CoxeterParams, make_params


def default_pack() -> list[CoxeterParams]:
    """Seven systems covering both reducibility branches and every parity
    combination the suites distinguish."""
    return [
        make_params(3, 3, 3, name="affine-333"),
        make_params(6, 3, 6, name="affine-636"),
        make_params(4, 3, 4, name="reducible-434"),
        make_params(4, 4, 4, name="reducible-444"),
        make_params(4, 4, 4, mode="explicit", l=1, name="irreducible-444"),
        make_params(4, 3, 4, mode="explicit", l=-1, name="irreducible-434"),
        _g443(),
    ]


def extended_pack() -> list[CoxeterParams]:
    """The default pack plus the systems that exercise eight-fold orders,
    doubled odd orders, and the remaining mixed parities."""
    return default_pack() + [
        make_params(8, 4, 4, name="reducible-844"),
        make_params(3, 3, 4, name="reducible-334"),
        make_params(6, 6, 3, name="reducible-663"),
        make_params(6, 6, 3, mode="explicit", l=1, name="irreducible-663"),
        make_params(3, 4, 4, mode="explicit", l=-2, name="irreducible-344"),
    ]


def _g443() -> CoxeterParams:
    # quotient is the complex reflection group G(4,4,3); needs i adjoined
    f = make_field(12, Fraction(-1))
    return make_params(3, 3, 4, mode="explicit", l=f.gen() - 1,
                       ext_square=-1, name="g443")


def _rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise BadInput(f"expected a rational, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise BadInput(f"bad rational literal {x!r}") from None


def elem_from_literal(field: Field, lit) -> FieldElem:
    """Parse a field-element literal against the given field."""
    if isinstance(lit, (int, str)):
        return field.from_rational(_rational(lit))
    if not isinstance(lit, list) or not lit or len(lit) > 2:
        raise BadInput("field literal must be a rational or one or two "
                       "coefficient arrays")
    if len(lit) == 2 and field.ncomp == 1 and any(_rational(x) for x in lit[1]):
        raise BadInput("literal uses the adjoined root but the field has "
                       "none (set ext_square)")
    parts = []
    for comp in lit:
        if not isinstance(comp, list):
            raise BadInput("field literal components must be arrays")
        coeffs = [_rational(x) for x in comp]
        if len(coeffs) > field.base.degree:
            raise BadInput(f"literal has {len(coeffs)} coefficients but the "
                           f"base field has degree {field.base.degree}")
        coeffs.extend([Fraction(0)] * (field.base.degree - len(coeffs)))
        parts.append(tuple(coeffs))
    out = field.from_base(parts[0])
    if len(parts) == 2 and any(parts[1]):
        out = out + field.gen() * field.from_base(parts[1])
    return out


def literal_of(elem: FieldElem) -> list:
    """Serialize a field element in the literal form configs use."""
    def comp(t):
        return [str(x) for x in t]
    if elem.field.ncomp == 1:
        return [comp(elem.parts[0])]
    return [comp(elem.parts[0]), comp(elem.parts[1])]


_CONFIG_KEYS = {"p", "q", "r", "mode", "root", "l", "conjugates",
                "ext_square", "name"}


def params_from_config(cfg: dict) -> CoxeterParams:
    if not isinstance(cfg, dict):
        raise BadInput("parameter config must be a JSON object")
    unknown = set(cfg) - _CONFIG_KEYS
    if unknown:
        raise BadInput(f"unknown config keys {sorted(unknown)}")
    try:
        p, q, r = int(cfg["p"]), int(cfg["q"]), int(cfg["r"])
    except (KeyError, TypeError, ValueError):
        raise BadInput("config needs integer p, q, r") from None
    mode = cfg.get("mode", "reducible")
    conj = cfg.get("conjugates", [1, 1, 1])
    if (not isinstance(conj, (list, tuple)) or len(conj) != 3
            or not all(isinstance(k, int) for k in conj)):
        raise BadInput("conjugates must be three integers")
    ext = cfg.get("ext_square")
    ext = _rational(ext) if ext is not None else None
    name = cfg.get("name", "")
    if mode == "reducible":
        root = cfg.get("root", "plus")
        if root not in ("plus", "minus"):
            raise BadInput(f"unknown root choice {root!r}")
        return make_params(p, q, r, kp=conj[0], kq=conj[1], kr=conj[2],
                           mode=f"reducible-{root}", ext_square=ext,
                           name=name)
    if mode == "explicit":
        if "l" not in cfg:
            raise BadInput("explicit mode needs l")
        field = make_field(math.lcm(p, q, r), ext)
        l = elem_from_literal(field, cfg["l"])
        return make_params(p, q, r, kp=conj[0], kq=conj[1], kr=conj[2],
                           mode="explicit", l=l, ext_square=ext, name=name)
    raise BadInput(f"unknown mode {mode!r}")


def load_params_file(path: str) -> list[CoxeterParams]:
    """Read one config object or a list of them from a JSON file."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as err:
        raise BadInput(f"cannot read {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise BadInput(f"{path} is not valid JSON: {err}") from None
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list) or not data:
        raise BadInput(f"{path} must hold a config object or a non-empty "
                       "list of them")
    return [params_from_config(c) for c in data]
