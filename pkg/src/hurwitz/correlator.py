"""The pair-correlator pipeline.

Everything here is built from the two-index coefficient series

    rho_{ab}(beta) = (-1)^b * [ prod_{i=-b}^{a} G(i*beta) ] / (a! b! (a+b+1)),

whose beta^d coefficient rho^d_{ab} is a homogeneous GPoly of weighted
degree d.  The scalar denominator divides the whole product once (reading
it inside the product symbol does not reproduce the small-index reference
values).  The coefficients satisfy rho^d_{ab} = (-1)^{a+b+d} rho^d_{ba}.

Three consumers:

* closed forms for connected values with marked profile of length 1, 2, 3
  (linear / quadratic / cubic cycle sums over the rho grid);
* `wtilde_expand`, an independent validator that expands the connected
  n-point functions directly from single-n-cycle products of pair kernels,
  eliminating the 1/(x_i - x_j) poles exactly with telescoping
  divided-difference identities (any residual pole is a hard error);
* cumulant assembly of nonconnected from connected values.

Conventions fixed against the other pipelines (see tests): the length-2
linear cycle sum runs over rho^d_{mu1+mu2-b-1, b}; the length-3 quadratic
pair sum has upper limit min(mu_i, mu_j) - 1, symmetric in the paired
parts.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .algebra import GPoly
from .partitions import Partition, as_partition, aut_of
from .series import BetaSeries, TruncationError, g_product, series_mul

RHO_SCHEMA_VERSION = 1


@lru_cache(maxsize=None)
def rho_series(a: int, b: int, order: int) -> BetaSeries:
    """rho_{ab}(beta) truncated at `order`."""
    if a < 0 or b < 0:
        raise ValueError("rho indices must be >= 0")
    factors = tuple(sorted(range(-b, a + 1)))
    prod = g_product(factors, order)
    return prod.scale(Fraction((-1) ** b, math.factorial(a) * math.factorial(b) * (a + b + 1)))


def rho_coeff(a: int, b: int, d: int) -> GPoly:
    """rho^d_{ab} as a GPoly."""
    return rho_series(a, b, d).coeff(d)


@lru_cache(maxsize=None)
def _rho_pair(a1: int, b1: int, a2: int, b2: int, order: int) -> BetaSeries:
    return series_mul(rho_series(a1, b1, order), rho_series(a2, b2, order), order)


def _rho_pair_coeff(a1: int, b1: int, a2: int, b2: int, d: int) -> GPoly:
    return _rho_pair(a1, b1, a2, b2, d).coeff(d)


class RhoTable:
    """Read-only grid of rho_{ab}(beta) series for 0 <= a <= max_a, 0 <= b <= max_b."""

    def __init__(self, max_a: int, max_b: int, max_d: int,
                 entries: Mapping[tuple[int, int], BetaSeries]):
        self.max_a = max_a
        self.max_b = max_b
        self.max_d = max_d
        self._entries = dict(entries)

    @classmethod
    def build(cls, max_a: int, max_b: int, max_d: int) -> "RhoTable":
        entries = {
            (a, b): rho_series(a, b, max_d)
            for a in range(max_a + 1)
            for b in range(max_b + 1)
        }
        return cls(max_a, max_b, max_d, entries)

    def series(self, a: int, b: int) -> BetaSeries:
        return self._entries[(a, b)]

    def coeff(self, a: int, b: int, d: int) -> GPoly:
        return self._entries[(a, b)].coeff(d)

    # -- disk cache ----------------------------------------------------

    def _payload(self) -> dict:
        return {
            "schema_version": RHO_SCHEMA_VERSION,
            "max_a": self.max_a,
            "max_b": self.max_b,
            "max_d": self.max_d,
            "entries": [
                [self._entries[(a, b)].to_json() for b in range(self.max_b + 1)]
                for a in range(self.max_a + 1)
            ],
        }

    def to_json(self) -> dict:
        payload = self._payload()
        digest = hashlib.sha256(
            json.dumps(payload, sort_keys=True).encode()
        ).hexdigest()
        payload["checksum"] = digest
        return payload

    @classmethod
    def from_json(cls, data: dict) -> "RhoTable":
        if data.get("schema_version") != RHO_SCHEMA_VERSION:
            raise ValueError("rho cache: schema version mismatch")
        digest = data.get("checksum")
        body = {k: v for k, v in data.items() if k != "checksum"}
        expect = hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()
        if digest != expect:
            raise ValueError("rho cache: checksum mismatch")
        entries = {
            (a, b): BetaSeries.from_json(cell)
            for a, row in enumerate(data["entries"])
            for b, cell in enumerate(row)
        }
        return cls(data["max_a"], data["max_b"], data["max_d"], entries)

    def save(self, path: str) -> None:
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(self.to_json(), fh)
        os.replace(tmp, path)

    @classmethod
    def load_or_build(cls, max_a: int, max_b: int, max_d: int,
                      cache_dir: str | None = None) -> "RhoTable":
        """Load a valid cached table covering the request, else rebuild.

        Caches are advisory: a missing, stale, or corrupt file is silently
        replaced by a fresh computation, never trusted.
        """
        if cache_dir is None:
            return cls.build(max_a, max_b, max_d)
        path = os.path.join(cache_dir, f"rho_{max_a}_{max_b}_{max_d}.json")
        if os.path.exists(path):
            try:
                with open(path) as fh:
                    table = cls.from_json(json.load(fh))
                if (table.max_a, table.max_b, table.max_d) == (max_a, max_b, max_d):
                    return table
            except (ValueError, KeyError, json.JSONDecodeError, OSError):
                pass
        table = cls.build(max_a, max_b, max_d)
        os.makedirs(cache_dir, exist_ok=True)
        try:
            table.save(path)
        except OSError:
            pass
        return table


# -- closed forms for length(mu) <= 3 ------------------------------------


def connected_len1(mu1: int, d: int) -> GPoly:
    """Connected value for a single marked part: (1/mu1) sum_a rho^d_{a, mu1-a-1}."""
    if mu1 < 1:
        raise ValueError("part must be >= 1")
    acc = GPoly.zero()
    for a in range(mu1):
        acc = acc + rho_coeff(a, mu1 - 1 - a, d)
    return acc / mu1


def connected_len2(mu1: int, mu2: int, d: int) -> GPoly:
    """Connected value for two marked parts: parity-gated linear sum minus
    the quadratic convolution of pair coefficients."""
    if mu1 < 1 or mu2 < 1:
        raise ValueError("parts must be >= 1")
    parity = 1 + (-1) ** (d + mu1 + mu2)
    acc = GPoly.zero()
    if parity:
        for b in range(mu2):
            acc = acc + rho_coeff(mu1 + mu2 - b - 1, b, d).scale(parity)
    for a in range(mu1):
        for b in range(mu2):
            acc = acc - _rho_pair_coeff(a, mu2 - b - 1, b, mu1 - a - 1, d)
    return acc / (mu1 * mu2 * aut_of((mu1, mu2)))


def connected_len3(mu1: int, mu2: int, mu3: int, d: int) -> GPoly:
    """Connected value for three marked parts: linear + quadratic + cubic
    cycle sums, all gated by the odd-parity factor 1 - (-1)^(d+|mu|)."""
    if min(mu1, mu2, mu3) < 1:
        raise ValueError("parts must be >= 1")
    parity = 1 - (-1) ** (d + mu1 + mu2 + mu3)
    if not parity:
        return GPoly.zero()
    acc = GPoly.zero()
    # linear part
    for b in range(mu2):
        acc = acc + rho_coeff(mu2 - b - 1, mu1 + mu3 + b, d)
        acc = acc - rho_coeff(mu1 + mu2 - b - 1, mu3 + b, d)
    # quadratic part over the three pair splittings; the pair-sum upper
    # limit is min of the paired parts (symmetric in them)
    for m1, m2, m3 in ((mu1, mu2, mu3), (mu1, mu3, mu2), (mu3, mu2, mu1)):
        for a in range(min(m1, m2)):
            for c in range(m3):
                acc = acc + _rho_pair_coeff(c, m1 + m2 - a - 1, a, m3 - c - 1, d)
    # cubic part
    for a in range(mu1):
        for b in range(mu2):
            for c in range(mu3):
                pair = _rho_pair(a, mu2 - b - 1, b, mu3 - c - 1, d)
                third = rho_series(c, mu1 - a - 1, d)
                acc = acc + series_mul(pair, third, d).coeff(d)
    return acc.scale(Fraction(parity, mu1 * mu2 * mu3 * aut_of((mu1, mu2, mu3))))


def connected_closed_form(mu: Partition, d: int) -> GPoly:
    """Dispatch the length-1/2/3 closed forms for a sorted partition."""
    mu = as_partition(mu)
    if len(mu) == 1:
        return connected_len1(mu[0], d)
    if len(mu) == 2:
        return connected_len2(mu[0], mu[1], d)
    if len(mu) == 3:
        return connected_len3(mu[0], mu[1], mu[2], d)
    raise ValueError("closed forms cover marked profiles of length 1..3 only")


# -- nonconnected assembly (cumulants, length <= 3) ----------------------

ConnectedSupplier = Callable[[Partition, int], GPoly]


def nonconnected_assemble(mu: Partition, d: int,
                          connected: ConnectedSupplier) -> GPoly:
    """Nonconnected value from connected ones for length(mu) <= 3."""
    mu = as_partition(mu)
    n = len(mu)
    if n == 1:
        return connected(mu, d)
    if n == 2:
        mu1, mu2 = mu

        def single(m: int, k: int) -> GPoly:
            return connected((m,), k)

        acc = connected(mu, d)
        cross = GPoly.zero()
        for k in range(d + 1):
            cross = cross + single(mu1, k) * single(mu2, d - k)
        return acc + cross / aut_of(mu)
    if n == 3:
        mu1, mu2, mu3 = mu

        def single(m: int, k: int) -> GPoly:
            return connected((m,), k)

        def pair(a: int, b: int, k: int) -> GPoly:
            return nonconnected_assemble(as_partition((a, b)), k, connected)

        acc = GPoly.zero()
        for k in range(d + 1):
            acc = acc + single(mu1, k) * pair(mu2, mu3, d - k).scale(aut_of((mu2, mu3)))
            acc = acc + single(mu2, k) * pair(mu1, mu3, d - k).scale(aut_of((mu1, mu3)))
            acc = acc + single(mu3, k) * pair(mu1, mu2, d - k).scale(aut_of((mu1, mu2)))
            for j in range(d - k + 1):
                acc = acc - (single(mu1, j) * single(mu2, k) * single(mu3, d - j - k)).scale(2)
        return connected(mu, d) + acc / aut_of(mu)
    raise ValueError("closed-form assembly covers length <= 3 only")


# -- direct expansion of the connected n-point functions -----------------


@dataclass(frozen=True)
class CoeffArray:
    """Coefficients of a polynomial n-point expansion.

    data maps exponent tuples (one exponent per marked variable) to the
    BetaSeries coefficient; exponents run within `bounds` componentwise.
    """

    n: int
    bounds: tuple[int, ...]
    data: dict[tuple[int, ...], BetaSeries]

    def coeff(self, exponents: tuple[int, ...], d: int) -> GPoly:
        if len(exponents) != self.n:
            raise ValueError("wrong arity")
        if any(e < 0 for e in exponents):
            raise RuntimeError("internal error: residual pole (negative exponent)")
        if any(e > b for e, b in zip(exponents, self.bounds)):
            raise TruncationError("exponent outside computed bounds")
        series = self.data.get(exponents)
        return series.coeff(d) if series is not None else GPoly.zero()


def _telescope(u: int, v: int):
    """Monomials of (x^u y^v - x^v y^u)/(x - y) as ((i, j), sign) pairs.

    The expansion is exact: u > v gives +x^t y^(u+v-1-t) for v <= t < u,
    u < v the mirrored negatives, u = v nothing.  This identity is the only
    way poles are ever removed, so no division (hence no residue) occurs.
    """
    if u == v:
        return ()
    if u > v:
        return tuple(((t, u + v - 1 - t), 1) for t in range(v, u))
    return tuple(((t, u + v - 1 - t), -1) for t in range(u, v))


def _w1_series(p: int, order: int) -> BetaSeries:
    acc = BetaSeries.zero(order)
    for a in range(p + 1):
        acc = acc + rho_series(a, p - a, order)
    return acc


def _w2_series(p: int, q: int, order: int) -> BetaSeries:
    acc = BetaSeries.zero(order)
    # divided difference of the antisymmetrized kernel
    for a in range(p + q + 2):
        b = p + q + 1 - a
        if b < 0:
            continue
        for (i, j), sign in _telescope(a, b):
            if i == p and j == q:
                acc = acc + rho_series(a, b, order).scale(sign)
    # minus the product of the two kernels
    for a in range(p + 1):
        for b in range(q + 1):
            acc = acc + _rho_pair(a, q - b, b, p - a, order).scale(-1)
    return acc


def _w3_series(p1: int, p2: int, p3: int, order: int) -> BetaSeries:
    acc = BetaSeries.zero(order)
    # single-kernel bracket: double divided differences
    for a in range(p1 + p2 + p3 + 3):
        for b in range(p1 + p2 + p3 + 3 - a):
            sign_total = 0
            if p1 < a:
                for (i, j), sign in _telescope(a - 1 - p1, b):
                    if i == p2 and j == p3:
                        sign_total += sign
            if p1 < b:
                for (i, j), sign in _telescope(b - 1 - p1, a):
                    if i == p2 and j == p3:
                        sign_total += sign
            if sign_total:
                acc = acc + rho_series(a, b, order).scale(sign_total)
    # two-kernel brackets, one divided difference each
    for bexp in range(p3 + 1):
        aexp = p3 - bexp
        for a in range(p1 + p2 + 2):
            bp = p1 + p2 + 1 - a
            if bp < 0:
                continue
            for (i, j), sign in _telescope(a, bp):
                if i == p1 and j == p2:
                    acc = acc + _rho_pair(a, bexp, aexp, bp, order).scale(-sign)
    for a in range(p1 + 1):
        bp = p1 - a
        for b in range(p2 + p3 + 2):
            ap = p2 + p3 + 1 - b
            if ap < 0:
                continue
            for (i, j), sign in _telescope(b, ap):
                if i == p2 and j == p3:
                    acc = acc + _rho_pair(a, b, ap, bp, order).scale(sign)
    for b in range(p2 + 1):
        ap = p2 - b
        for a in range(p1 + p3 + 2):
            bp = p1 + p3 + 1 - a
            if bp < 0:
                continue
            for (i, j), sign in _telescope(a, bp):
                if i == p1 and j == p3:
                    acc = acc + _rho_pair(a, b, ap, bp, order).scale(-sign)
    # three-kernel bracket: both cyclic orders, plain convolution
    for a1 in range(p1 + 1):
        b3 = p1 - a1
        for b1 in range(p2 + 1):
            a2 = p2 - b1
            for b2 in range(p3 + 1):
                a3 = p3 - b2
                pair = _rho_pair(a1, b1, a2, b2, order)
                acc = acc + series_mul(pair, rho_series(a3, b3, order), order)
    for a1 in range(p1 + 1):
        b3 = p1 - a1
        for b2 in range(p2 + 1):
            a3 = p2 - b2
            for b1 in range(p3 + 1):
                a2 = p3 - b1
                pair = _rho_pair(a1, b1, a2, b2, order)
                acc = acc + series_mul(pair, rho_series(a3, b3, order), order)
    return acc


@lru_cache(maxsize=None)
def wtilde_series(n: int, exponents: tuple[int, ...], order: int) -> BetaSeries:
    """One coefficient of the connected n-point expansion, as a BetaSeries."""
    if n not in (1, 2, 3):
        raise ValueError("the expansion is implemented for n = 1, 2, 3")
    if len(exponents) != n:
        raise ValueError("exponent arity mismatch")
    if any(e < 0 for e in exponents):
        raise RuntimeError("internal error: residual pole (negative exponent)")
    kernel = {1: _w1_series, 2: _w2_series, 3: _w3_series}[n]
    return kernel(*exponents, order)


def wtilde_expand(n: int, bounds: tuple[int, ...], order: int) -> CoeffArray:
    """Polynomial part of the connected n-point function, n = 1, 2 or 3.

    Expands the single-n-cycle products of pair kernels and removes every
    1/(x_i - x_j) factor with the telescoping identity, term by term, over
    exact GPoly coefficients.  Coefficients are produced for all exponent
    tuples within `bounds` and all beta powers up to `order`.
    """
    if len(bounds) != n:
        raise ValueError("bounds arity mismatch")

    def exponent_tuples(bs: tuple[int, ...]):
        if not bs:
            yield ()
            return
        for head in range(bs[0] + 1):
            for rest in exponent_tuples(bs[1:]):
                yield (head,) + rest

    data = {exps: wtilde_series(n, exps, order) for exps in exponent_tuples(tuple(bounds))}
    return CoeffArray(n, tuple(bounds), data)


def connected_from_wtilde(array: CoeffArray, mu: Partition, d: int) -> GPoly:
    """Read a connected value out of a CoeffArray: coefficient at
    x_i^(mu_i - 1) divided by (prod mu_i) * |aut(mu)|."""
    mu = as_partition(mu)
    if len(mu) != array.n:
        raise ValueError("profile length does not match array arity")
    exps = tuple(m - 1 for m in mu)
    denom = math.prod(mu) * aut_of(mu)
    return array.coeff(exps, d) / denom


def connected_via_wtilde(mu: Partition, d: int) -> GPoly:
    """Connected value for length(mu) <= 3 straight from the expansion."""
    mu = as_partition(mu)
    exps = tuple(m - 1 for m in mu)
    series = wtilde_series(len(mu), exps, d)
    return series.coeff(d) / (math.prod(mu) * aut_of(mu))
