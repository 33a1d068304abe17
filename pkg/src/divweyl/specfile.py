"""Reading field and algebra specifications.

Spec files are INI-style::

    [field]
    kind = quadratic        ; quadratic | cyclotomic | custom | period
    m = -1

    [algebra]
    a = -1/1

``custom`` takes ``defining_poly`` and ``sigma_image`` as comma-separated
``num/den`` coefficients in ascending degree; ``period`` takes ``p`` and ``d``
(the degree-``d`` subfield of the ``p``-th cyclotomic field).
"""

from __future__ import annotations

import configparser
from pathlib import Path

from .cyclicalg import CyclicAlgebra
from .numberfield import (NumberField, custom_field, cyclotomic_field, gaussian_period_field,
                          quadratic_field, rational)


class SpecError(ValueError):
    pass


def _coeff_list(text: str) -> list:
    return [rational(t) for t in text.replace(";", ",").split(",") if t.strip()]


def field_from_mapping(sec: dict[str, str]) -> NumberField:
    kind = sec.get("kind", "").strip().lower()
    try:
        if kind == "quadratic":
            return quadratic_field(int(sec["m"]))
        if kind in ("cyclotomic", "cyclotomic_prime"):
            return cyclotomic_field(int(sec["p"]))
        if kind == "custom":
            return custom_field(_coeff_list(sec["defining_poly"]), _coeff_list(sec["sigma_image"]),
                                name=sec.get("name", ""))
        if kind == "period":
            return gaussian_period_field(int(sec["p"]), int(sec["d"]))
    except KeyError as exc:
        raise SpecError(f"field of kind {kind!r} needs key {exc.args[0]!r}") from None
    raise SpecError(f"unknown field kind {kind!r}")


def parse_field(text: str) -> NumberField:
    """A field from a spec-file path or an inline ``kind:params`` string.

    Inline forms: ``quadratic:-1``, ``cyclotomic:5``, ``period:7,3`` and
    ``custom:<f coefficients>;<sigma coefficients>``.
    """
    path = Path(text)
    if path.is_file():
        return load_spec(path)[0]
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    if kind == "quadratic":
        return field_from_mapping({"kind": kind, "m": rest})
    if kind in ("cyclotomic", "cyclotomic_prime"):
        return field_from_mapping({"kind": kind, "p": rest})
    if kind == "period":
        p, _, d = rest.partition(",")
        return field_from_mapping({"kind": kind, "p": p, "d": d})
    if kind == "custom":
        f, _, s = rest.partition(";")
        return field_from_mapping({"kind": kind, "defining_poly": f, "sigma_image": s})
    raise SpecError(f"cannot parse field specification {text!r}")


def load_spec(path: str | Path) -> tuple[NumberField, CyclicAlgebra | None, dict[str, str]]:
    """Parse a spec file; the algebra is ``None`` when there is no ``[algebra]`` section."""
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        with open(path, encoding="utf-8") as fh:
            cp.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise SpecError(f"cannot read spec {path}: {exc}") from None
    if not cp.has_section("field"):
        raise SpecError(f"{path}: missing [field] section")
    field = field_from_mapping(dict(cp["field"]))
    alg = None
    extra: dict[str, str] = {}
    if cp.has_section("algebra"):
        sec = dict(cp["algebra"])
        if "a" not in sec:
            raise SpecError(f"{path}: [algebra] needs a = num/den")
        alg = CyclicAlgebra(field, rational(sec.pop("a")), name=sec.pop("name", Path(path).stem))
        extra = sec
    return field, alg, extra
