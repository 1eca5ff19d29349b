"""Weight models: Taylor coefficients of G(z) and specialization of values.

Supported models and their coefficient sequences g_1, g_2, ...:

  generic      keep g_i symbolic (values stay GPoly)
  exp          g_i = 1/i!
  rational     g_i = sum_j e_j(c) h_{i-j}(d) for finite parameter lists c, d
  dual         g_i = h_i(d)                  (rational with empty c)
  quantum      g_i = 1/(q;q)_i, either as an exact rational function of a
               symbolic q (QRat) or at an exact rational q
  taylor       explicit list of rational coefficients

Specialization is plain polynomial evaluation in the model's ring; it is a
ring homomorphism, which the tests exercise.  The (q;q)_m display form is a
formatter only and is never used for equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .algebra import GPOLY_RING, GPoly, RATIONAL_RING, Ring, eval_gpoly
from .partitions import sym_eval
from .qrational import QPoly, QRat

QRAT_RING = Ring("qrat", QRat.const(0), QRat.const(1), QRat.const)

MODEL_KINDS = ("generic", "exp", "rational", "dual", "quantum", "taylor")


@dataclass(frozen=True)
class WeightModel:
    kind: str
    c: tuple[Fraction, ...] = ()
    d: tuple[Fraction, ...] = ()
    q: Fraction | None = None
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown weight model kind {self.kind!r}")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def generic() -> "WeightModel":
        return WeightModel("generic")

    @staticmethod
    def exponential() -> "WeightModel":
        return WeightModel("exp")

    @staticmethod
    def rational(c: Sequence[Any] = (), d: Sequence[Any] = ()) -> "WeightModel":
        return WeightModel("rational", c=tuple(Fraction(x) for x in c),
                           d=tuple(Fraction(x) for x in d))

    @staticmethod
    def dual(d: Sequence[Any]) -> "WeightModel":
        return WeightModel("dual", d=tuple(Fraction(x) for x in d))

    @staticmethod
    def quantum(q: Any = None) -> "WeightModel":
        return WeightModel("quantum", q=None if q is None else Fraction(q))

    @staticmethod
    def taylor(coeffs: Sequence[Any]) -> "WeightModel":
        return WeightModel("taylor", coeffs=tuple(Fraction(x) for x in coeffs))

    # -- properties -----------------------------------------------------

    @property
    def symbolic_q(self) -> bool:
        return self.kind == "quantum" and self.q is None

    @property
    def is_numeric(self) -> bool:
        """True iff values specialize to plain rationals."""
        return self.kind in ("exp", "rational", "dual", "taylor") or (
            self.kind == "quantum" and self.q is not None
        )

    @property
    def ring(self) -> Ring:
        if self.kind == "generic":
            return GPOLY_RING
        if self.symbolic_q:
            return QRAT_RING
        return RATIONAL_RING

    def describe(self) -> str:
        if self.kind == "rational":
            cs = ",".join(str(x) for x in self.c)
            ds = ",".join(str(x) for x in self.d)
            return f"rational:c={cs};d={ds}"
        if self.kind == "dual":
            return "dual:d=" + ",".join(str(x) for x in self.d)
        if self.kind == "quantum":
            return "quantum" if self.q is None else f"quantum:q={self.q}"
        if self.kind == "taylor":
            return "taylor:" + ",".join(str(x) for x in self.coeffs)
        return self.kind


def parse_model(text: str) -> WeightModel:
    """Parse the CLI syntax: generic | exp | rational:c=1,2;d=3 | dual:d=1 |
    quantum | quantum:q=1/3 | taylor:1,1/2,1/6."""
    text = text.strip()
    head, _, rest = text.partition(":")
    try:
        if head == "generic" and not rest:
            return WeightModel.generic()
        if head == "exp" and not rest:
            return WeightModel.exponential()
        if head == "quantum":
            return WeightModel.quantum(None if not rest else _parse_q(rest))
        if head == "taylor":
            return WeightModel.taylor([Fraction(x) for x in rest.split(",") if x])
        if head == "rational":
            c: list[Fraction] = []
            d: list[Fraction] = []
            for clause in rest.split(";"):
                clause = clause.strip()
                if not clause:
                    continue
                key, _, vals = clause.partition("=")
                values = [Fraction(x) for x in vals.split(",") if x]
                if key == "c":
                    c = values
                elif key == "d":
                    d = values
                else:
                    raise ValueError(f"unknown rational parameter {key!r}")
            return WeightModel.rational(c, d)
        if head == "dual":
            key, _, vals = rest.partition("=")
            if key != "d":
                raise ValueError("dual model takes d=...")
            return WeightModel.dual([Fraction(x) for x in vals.split(",") if x])
    except ValueError as exc:
        raise ValueError(f"bad weight model {text!r}: {exc}") from None
    raise ValueError(f"bad weight model {text!r}")


def _parse_q(rest: str) -> Fraction:
    key, _, val = rest.partition("=")
    if key != "q":
        raise ValueError("quantum model takes q=...")
    return Fraction(val)


def qq_pochhammer(i: int) -> QPoly:
    """(1-q)(1-q^2)...(1-q^i); the empty product for i = 0."""
    if i < 0:
        raise ValueError("index must be >= 0")
    out = QPoly.const(1)
    for k in range(1, i + 1):
        out = out * QPoly([1] + [0] * (k - 1) + [-1])
    return out


def taylor_coeffs(model: WeightModel, upto: int) -> list[Any]:
    """g_1 .. g_upto in the model's ring."""
    if upto < 0:
        raise ValueError("upto must be >= 0")
    if model.kind == "generic":
        return [GPoly.var(i) for i in range(1, upto + 1)]
    if model.kind == "exp":
        return [Fraction(1, math.factorial(i)) for i in range(1, upto + 1)]
    if model.kind in ("rational", "dual"):
        c, d = model.c, model.d
        return [
            sum(
                (sym_eval("e", j, c) * sym_eval("h", i - j, d) for j in range(i + 1)),
                start=Fraction(0),
            )
            for i in range(1, upto + 1)
        ]
    if model.kind == "quantum":
        if model.symbolic_q:
            return [QRat(QPoly.const(1), qq_pochhammer(i)) for i in range(1, upto + 1)]
        q = model.q
        out = []
        poch = Fraction(1)
        for i in range(1, upto + 1):
            poch *= 1 - q ** i
            if poch == 0:
                raise ZeroDivisionError(f"(q;q)_{i} vanishes at q={q}")
            out.append(1 / poch)
        return out
    if model.kind == "taylor":
        if len(model.coeffs) < upto:
            raise ValueError(
                f"explicit taylor list has {len(model.coeffs)} coefficients, need {upto}"
            )
        return list(model.coeffs[:upto])
    raise ValueError(f"unknown model kind {model.kind!r}")


def specialize(p: GPoly, model: WeightModel) -> Any:
    """Evaluate a generic value in the model's coefficient ring."""
    needed = max(p.variables(), default=0)
    assignment = {i + 1: v for i, v in enumerate(taylor_coeffs(model, needed))}
    return eval_gpoly(p, assignment, model.ring)


# -- display-only (q;q)_m formatter --------------------------------------


def qrat_pretty(v: QRat, max_index: int = 24) -> str:
    """Try to present v as P(q) / (s(q;q)_m) with integer-coefficient P and
    the smallest feasible m; fall back to the plain num/den form.

    Output is for human comparison against published tables only; equality
    checks always use the normalized QRat value itself.
    """
    if v.is_zero():
        return "0"
    for m in range(max_index + 1):
        candidate = v * QRat.from_poly(qq_pochhammer(m))
        if not candidate.is_polynomial():
            continue
        num = candidate.num  # den is the constant 1 after normalization
        denom_lcm = 1
        for coef in num.coeffs:
            denom_lcm = denom_lcm * coef.denominator // math.gcd(denom_lcm, coef.denominator)
        scaled = num.scale(denom_lcm)
        content = 0
        for coef in scaled.coeffs:
            content = math.gcd(content, coef.numerator)
        content = content or 1
        poly = scaled.scale(Fraction(1, content))
        scalar = Fraction(denom_lcm, content)
        num_s = str(poly) if len([c for c in poly.coeffs if c]) == 1 else f"({poly})"
        if m == 0:
            return num_s if scalar == 1 else f"{num_s} / {scalar}"
        poch = f"(q;q)_{m}" if scalar == 1 else f"{scalar}(q;q)_{m}"
        return f"{num_s} / ({poch})"
    return str(v)


def qrat_pretty_parse(text: str) -> QRat:
    """Parse qrat_pretty output back to a value (round-trip check support)."""
    text = text.strip()
    if " / " in text:
        num_s, den_s = text.split(" / ", 1)
    else:
        num_s, den_s = text, ""
    num = _parse_qpoly(num_s.strip())
    if not den_s:
        return QRat(num)
    den_s = den_s.strip()
    if den_s.startswith("(") and den_s.endswith(")"):
        den_s = den_s[1:-1]
    if "(q;q)_" in den_s:
        scalar_s, _, idx_s = den_s.partition("(q;q)_")
        scalar = Fraction(scalar_s) if scalar_s else Fraction(1)
        den = qq_pochhammer(int(idx_s)).scale(scalar)
    else:
        den = QPoly.const(Fraction(den_s))
    return QRat(num, den)


def _parse_qpoly(text: str) -> QPoly:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    coeffs: dict[int, Fraction] = {}
    for signed_term in text.replace("- ", "+ -").split("+"):
        term = signed_term.strip()
        if not term:
            continue
        coef, _, power = term.partition("q")
        coef = coef.strip().rstrip("*").strip()
        if coef in ("", "-"):
            c = Fraction(coef + "1")
        else:
            c = Fraction(coef)
        if "q" not in term:
            k = 0
        elif power.startswith("^"):
            k = int(power[1:])
        else:
            k = 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
    return QPoly([coeffs.get(i, Fraction(0)) for i in range(max(coeffs, default=0) + 1)])
