"""The character/content-product pipeline, valid for any profile length.

The nonconnected value for a profile mu of weight N and branching order d
is the coefficient extraction

    H^d(mu) = sum over lambda |- N of
              chi_lambda(mu) / (hook_product(lambda) * z_mu)
              * [beta^d] prod over boxes (i,j) of lambda of G((j - i) beta).

Connected values follow by Moebius inversion over set partitions of the
labeled profile entries, with the |aut| bookkeeping that makes the
coefficient of one ordered monomial equal |aut(mu)| times the value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .algebra import GPoly
from .partitions import (
    CapExceeded,
    Partition,
    as_partition,
    aut_of,
    character,
    compositions_of,
    contents,
    format_partition,
    hook_product,
    partitions_of,
    set_partitions,
    z_of,
)
from .series import BetaSeries, g_product

WEIGHT_CAP = 10
DEGREE_CAP = 12


@dataclass(frozen=True)
class ContentProductSeries:
    """The box-content product series of a diagram, truncated in beta."""

    lam: Partition
    series: BetaSeries


@lru_cache(maxsize=None)
def content_product(lam: Partition, order: int) -> ContentProductSeries:
    """prod over boxes of G(content * beta); the empty diagram gives 1."""
    lam = as_partition(lam)
    cs = tuple(sorted(contents(lam)))
    return ContentProductSeries(lam, g_product(cs, order))


@lru_cache(maxsize=None)
def hurwitz_any(mu: Partition, d: int, weight_cap: int = WEIGHT_CAP,
                degree_cap: int = DEGREE_CAP) -> GPoly:
    """Nonconnected generic value for any profile length."""
    mu = as_partition(mu)
    if sum(mu) > weight_cap:
        raise CapExceeded(f"|mu| = {sum(mu)} exceeds cap {weight_cap}")
    if d > degree_cap:
        raise CapExceeded(f"d = {d} exceeds cap {degree_cap}")
    if d < 0:
        raise ValueError("d must be >= 0")
    N = sum(mu)
    z = z_of(mu)
    acc = GPoly.zero()
    for lam in partitions_of(N):
        chi = character(lam, mu)
        if not chi:
            continue
        coeff = content_product(lam, d).series.coeff(d)
        if coeff:
            acc = acc + coeff.scale(Fraction(chi, hook_product(lam) * z))
    return acc


@lru_cache(maxsize=None)
def connected_any(mu: Partition, d: int, weight_cap: int = WEIGHT_CAP,
                  degree_cap: int = DEGREE_CAP) -> GPoly:
    """Connected value for any profile length, by cumulant inversion.

    Labeled values phi(parts) := |aut(parts)| * H(parts) are combined over
    set partitions of the label positions with weight (-1)^(l-1) (l-1)! and
    a convolution of the beta order over blocks, then divided by |aut(mu)|.
    """
    mu = as_partition(mu)
    n = len(mu)
    if n == 0:
        return GPoly.one() if d == 0 else GPoly.zero()
    acc = GPoly.zero()
    for blocks in set_partitions(range(n)):
        ell = len(blocks)
        sign = Fraction((-1) ** (ell - 1) * math.factorial(ell - 1))
        block_parts = [as_partition(mu[i] for i in block) for block in blocks]
        for ds in compositions_of(d, ell):
            term = GPoly.one()
            for parts, db in zip(block_parts, ds):
                factor = hurwitz_any(parts, db, weight_cap, degree_cap)
                if not factor:
                    term = GPoly.zero()
                    break
                term = term * factor.scale(aut_of(parts))
            if term:
                acc = acc + term.scale(sign)
    return acc / aut_of(mu)


def genus_slice(g: int, mu: Partition, weight_cap: int = WEIGHT_CAP,
                degree_cap: int = DEGREE_CAP) -> GPoly:
    """Connected value at branching order d = 2g - 2 + length + weight."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    mu = as_partition(mu)
    d = 2 * g - 2 + len(mu) + sum(mu)
    if d < 0:
        return GPoly.zero()
    return connected_any(mu, d, weight_cap, degree_cap)


@dataclass(frozen=True)
class HurwitzResult:
    """One computed value, with provenance."""

    mu: Partition
    d: int
    connected: bool
    pipeline: str
    value: Any
    model: str = "generic"

    def value_json(self) -> Any:
        v = self.value
        if isinstance(v, GPoly):
            return v.to_json()
        if isinstance(v, Fraction):
            return str(v)
        return v.to_json()

    def to_json(self) -> dict:
        return {
            "mu": format_partition(self.mu),
            "d": self.d,
            "connected": self.connected,
            "pipeline": self.pipeline,
            "model": self.model,
            "value": self.value_json(),
        }

    @staticmethod
    def from_json(data: dict) -> "HurwitzResult":
        from .partitions import parse_partition
        from .qrational import QRat

        raw = data["value"]
        if isinstance(raw, str):
            value: Any = Fraction(raw)
        elif isinstance(raw, dict):
            value = QRat.from_json(raw)
        else:
            value = GPoly.from_json(raw)
        return HurwitzResult(
            mu=parse_partition(data["mu"]),
            d=int(data["d"]),
            connected=bool(data["connected"]),
            pipeline=data["pipeline"],
            model=data.get("model", "generic"),
            value=value,
        )
