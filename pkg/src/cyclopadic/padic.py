"""Exact p-adic integer helpers: valuations, Morita Gamma, Wilson primes.

Everything in this module is plain arbitrary-precision integer arithmetic.
p-adic membership statements ("x is in m*Z_p") are decided by comparing
valuations; no truncated p-adic expansions are ever used.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

INFINITY = math.inf

Valuation = Union[int, float]  # int, or math.inf for the valuation of 0

factorial = math.factorial

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires n, k >= 0")
    return math.comb(n, k)


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Miller-Rabin with the 12-base set, which is exact for all n < 3.3e24;
    far beyond any prime this package sweeps.
    """
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single identity/congruence check, with its witness data."""

    passed: bool
    details: dict = field(default_factory=dict)


class PadicContext:
    """A prime p together with p-adic helpers.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p < 2 or not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("PadicContext is immutable")

    def __repr__(self):
        return f"PadicContext(p={self.p})"

    def __eq__(self, other):
        return isinstance(other, PadicContext) and other.p == self.p

    def __hash__(self):
        return hash(("PadicContext", self.p))

    def vp(self, x: int) -> Valuation:
        """p-adic valuation of x; math.inf for x = 0."""
        if x == 0:
            return INFINITY
        p = self.p
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    def in_mZp(self, x: int, m: int) -> bool:
        """True iff x lies in the ideal m*Z_p, i.e. vp(x) >= vp(m).

        The prime-to-p part of m is a unit in Z_p and is ignored.
        """
        if m == 0:
            raise ValueError("m must be nonzero")
        return self.vp(x) >= self.vp(m)

    def morita_gamma(self, n: int) -> int:
        """Morita Gamma at a positive integer: (-1)^n * prod of j < n with p∤j."""
        if n < 1:
            raise ValueError("morita_gamma requires n >= 1")
        prod = 1
        for j in range(1, n):
            if j % self.p:
                prod *= j
        return -prod if n % 2 else prod

    def morita_gamma_range(self, nmax: int):
        """Yield (n, morita_gamma(n)) for n = 1..nmax with a running product."""
        prod = 1
        for n in range(1, nmax + 1):
            yield n, (-prod if n % 2 else prod)
            if n % self.p:
                prod *= n

    def morita_gamma_ratio(self, a: int, b: int) -> int:
        """Exact integer value of morita_gamma(a) / morita_gamma(b), a >= b >= 1.

        Equals (-1)^(a-b) times the product of the p-coprime integers in [b, a).
        """
        if not 1 <= b <= a:
            raise ValueError("need 1 <= b <= a")
        prod = 1
        for j in range(b, a):
            if j % self.p:
                prod *= j
        return -prod if (a - b) % 2 else prod

    def wilson_quotient_test(self) -> bool:
        """True iff p is a Wilson prime: (p-1)! = -1 (mod p^2)."""
        if self.p == 2:
            raise ValueError("Wilson test requires p >= 3")
        p2 = self.p * self.p
        f = 1
        for j in range(2, self.p):
            f = f * j % p2
        return f == p2 - 1


@dataclass(frozen=True)
class ValuedInt:
    """An integer together with its p-adic valuation."""

    value: int
    vp: Valuation

    @classmethod
    def of(cls, value: int, ctx: PadicContext) -> "ValuedInt":
        return cls(value, ctx.vp(value))


def check_gamma_identity(m: int, ctx: PadicContext) -> CheckResult:
    """Exact integer identity (mp)! = (-1)^(pm+1) * Gamma_p(pm+1) * m! * p^m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    p = ctx.p
    lhs = factorial(m * p)
    rhs = (-1) ** (p * m + 1) * ctx.morita_gamma(p * m + 1) * factorial(m) * p**m
    return CheckResult(
        passed=(lhs == rhs),
        details={"p": p, "m": m, "lhs": lhs, "rhs": rhs},
    )


def check_gamma_congruence(m: int, ctx: PadicContext) -> CheckResult:
    """Valuation bound vp(Gamma_p(pm+1) + 1) >= vp(pm) - vp(2).

    For odd p the bound is vp(pm), since 2 is a p-adic unit.
    """
    p = ctx.p
    g = ctx.morita_gamma(p * m + 1)
    observed = ctx.vp(g + 1)
    required = ctx.vp(p * m) - ctx.vp(2)
    return CheckResult(
        passed=(observed >= required),
        details={"p": p, "m": m, "observed_vp": observed, "required_vp": required},
    )


def check_binomial_lift(n: int, m: int, ctx: PadicContext) -> CheckResult:
    """Both congruences C(np,pm) = C(n,m) (mod np Z_p) and pm*C(n,m) in np Z_p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = ctx.p
    vnp = ctx.vp(n * p)
    diff = binomial(n * p, p * m) - binomial(n, m)
    v1 = ctx.vp(diff)
    v2 = ctx.vp(p * m * binomial(n, m))
    return CheckResult(
        passed=(v1 >= vnp and v2 >= vnp),
        details={
            "p": p,
            "n": n,
            "m": m,
            "required_vp": vnp,
            "vp_binom_diff": v1,
            "vp_pm_binom": v2,
        },
    )
