"""JSON encodings for the value types; every emitted value re-parses equal."""

from __future__ import annotations

from fractions import Fraction

from .characters import DirichletCharacter
from .cyclotomic import CycElem
from .padic import INF, PadicNum


def rational_to_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def cyc_to_json(x: CycElem) -> dict:
    return {"m": x.m, "coeffs": [rational_to_json(c) for c in x.coeffs]}


def cyc_from_json(d: dict) -> CycElem:
    return CycElem(d["m"], [rational_from_json(c) for c in d["coeffs"]])


def character_to_json(chi: DirichletCharacter) -> dict:
    return {
        "f": chi.modulus,
        "exponents": list(chi.exponents),
        "order": chi.order,
        "conductor": chi.conductor,
        "index": chi.index,
    }


def character_from_json(d: dict) -> DirichletCharacter:
    chi = DirichletCharacter(d["f"], d["exponents"])
    for key, got in (("order", chi.order), ("conductor", chi.conductor), ("index", chi.index)):
        if key in d and d[key] != got:
            raise ValueError(f"inconsistent character JSON: {key}={d[key]}, computed {got}")
    return chi


def padic_to_json(x: PadicNum) -> dict:
    return {
        "p": x.p,
        "valuation": "inf" if x.is_zero else x.val,
        "unit_digits": x.digits(),
        "precision": x.prec,
    }


def padic_from_json(d: dict) -> PadicNum:
    p, prec = d["p"], d["precision"]
    if d["valuation"] == "inf":
        return PadicNum.zero(p, prec)
    unit = 0
    for digit in reversed(d["unit_digits"]):
        unit = unit * p + digit
    return PadicNum(p, d["valuation"], unit, prec)
