"""Reference integer sequences: Catalan, tangent, secant, Genocchi and friends."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Callable


class UnknownReferenceError(KeyError):
    pass


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n >= 0")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _entringer_row(k: int) -> tuple[int, ...]:
    # Seidel-Entringer boustrophedon: E(k, j) = E(k, j-1) + E(k-1, k-j)
    if k == 0:
        return (1,)
    prev = _entringer_row(k - 1)
    row = [0]
    for j in range(1, k + 1):
        row.append(row[-1] + prev[k - j])
    return tuple(row)


def zigzag(k: int) -> int:
    """Euler zigzag number: alternating permutations of length k."""
    if k < 0:
        raise ValueError("k >= 0")
    return _entringer_row(k)[k]


def tangent(n: int) -> int:
    """T_{2n-1}: tan u = u + 2 u^3/3! + 16 u^5/5! + ..."""
    if n < 1:
        raise ValueError("n >= 1")
    return zigzag(2 * n - 1)


def secant(n: int) -> int:
    """E_{2n}: sec u = 1 + u^2/2! + 5 u^4/4! + ..."""
    if n < 0:
        raise ValueError("n >= 0")
    return zigzag(2 * n)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def genocchi(n: int) -> int:
    """Unsigned Genocchi number G_{2n} = n T_{2n-1} / 2^(2n-2)."""
    if n < 1:
        raise ValueError("n >= 1")
    return _exact_div(n * tangent(n), 2 ** (2 * n - 2))


def theorem_rhs(n: int) -> int:
    """n T_{2n-1} / 2^(n-2), the common count of the six tangent supports."""
    if n < 2:
        raise ValueError("n >= 2")
    return _exact_div(n * tangent(n), 2 ** (n - 2))


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def double_factorial_even(n: int) -> int:
    """(2n)!! = 2^n n!"""
    return 2 ** n * factorial(n)


def odd_double_factorial(n: int) -> int:
    """(2n-1)!! with (-1)!! = 1."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


@lru_cache(maxsize=None)
def little_schroeder(n: int) -> int:
    """Super-Catalan numbers 1, 1, 3, 11, 45, 197, ..."""
    if n <= 1:
        return 1
    # (n+1) s(n) = 3(2n-1) s(n-1) - (n-2) s(n-2)
    return (3 * (2 * n - 1) * little_schroeder(n - 1)
            - (n - 2) * little_schroeder(n - 2)) // (n + 1)


def central_binomial_adjacent(n: int) -> int:
    """binom(2n, n-1): 1, 4, 15, 56, 210, ..."""
    return comb(2 * n, n - 1) if n >= 1 else 0


def koch_angles(n: int) -> int:
    """4^n + 2: angles of the Koch snowflake after n iterations (n >= 0 gives 3, 6, 18, ...)."""
    return 4 ** n + 2


@dataclass(frozen=True)
class ReferenceSequence:
    """A named exact sequence; ``term(n)`` evaluates ``func(n + offset)``."""

    name: str
    func: Callable[[int], int]
    offset: int = 0

    def term(self, n: int) -> int:
        return self.func(n + self.offset)

    def terms(self, n_min: int, n_max: int) -> list[int]:
        return [self.term(n) for n in range(n_min, n_max + 1)]

    def aligned(self, offset: int) -> "ReferenceSequence":
        return ReferenceSequence(self.name, self.func, offset)


REGISTRY: dict[str, ReferenceSequence] = {
    s.name: s for s in [
        ReferenceSequence("catalan", catalan),
        ReferenceSequence("fibonacci", fibonacci),
        ReferenceSequence("double_factorial_even", double_factorial_even),
        ReferenceSequence("odd_double_factorial", odd_double_factorial),
        ReferenceSequence("little_schroeder", little_schroeder),
        ReferenceSequence("central_binomial_adjacent", central_binomial_adjacent),
        ReferenceSequence("koch_angles", koch_angles),
        ReferenceSequence("tangent", tangent),
        ReferenceSequence("tangent_rhs", theorem_rhs),
        ReferenceSequence("genocchi", genocchi),
        ReferenceSequence("secant", secant),
    ]
}


def named_reference(name: str, offset: int = 0) -> ReferenceSequence:
    try:
        ref = REGISTRY[name]
    except KeyError:
        raise UnknownReferenceError(name) from None
    return ref.aligned(offset) if offset else ref
