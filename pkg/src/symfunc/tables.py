"""
Transition coefficients between the monomial, power-sum and Schur bases.

Every table is memoized per partition pair; the power-sum basis is the working
coordinate system for products and the Hall pairing.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from src.combinatorics import Partition, partitions_of, z_of

Coeffs = Dict[Partition, Fraction]


def add_scaled(target: Coeffs, source: Coeffs, factor: Fraction) -> None:
    for key, value in source.items():
        total = target.get(key, Fraction(0)) + factor * value
        if total:
            target[key] = total
        else:
            target.pop(key, None)


@lru_cache(maxsize=None)
def _distributions(parts: Tuple[int, ...], capacities: Tuple[int, ...]) -> int:
    if not parts:
        return int(not any(capacities))
    head, rest = parts[0], parts[1:]
    total = 0
    for k, room in enumerate(capacities):
        if room >= head:
            total += _distributions(rest, capacities[:k] + (room - head,) + capacities[k + 1 :])
    return total


def power_in_monomial(lam: Partition, mu: Partition) -> int:
    """Coefficient of m_mu in p_lam: ways to pour the parts of lam into the parts of mu."""
    if lam.weight != mu.weight or len(mu) > len(lam):
        return 0
    return _distributions(tuple(lam), tuple(mu))


def _horizontal_strips(lam: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    """Partitions nu inside lam with lam/nu a horizontal strip of the given size."""

    def extend(i: int, remaining: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if i == len(lam):
            if remaining == 0:
                yield tuple(p for p in prefix if p)
            return
        floor = lam[i + 1] if i + 1 < len(lam) else 0
        for part in range(lam[i], floor - 1, -1):
            taken = lam[i] - part
            if taken > remaining:
                break
            yield from extend(i + 1, remaining - taken, prefix + (part,))

    yield from extend(0, size, ())


@lru_cache(maxsize=None)
def _kostka(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not mu:
        return int(not lam)
    return sum(_kostka(nu, mu[:-1]) for nu in _horizontal_strips(lam, mu[-1]))


def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    if lam.weight != mu.weight:
        return 0
    return _kostka(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def h_in_power(n: int) -> Tuple[Tuple[Partition, Fraction], ...]:
    """h_n = sum over rho of p_rho / z_rho."""
    return tuple((rho, 1 / z_of(rho)) for rho in partitions_of(n))


def power_product(a: Coeffs, b: Coeffs) -> Coeffs:
    """Product of two expansions in the power-sum basis."""
    out: Coeffs = {}
    for lam, x in a.items():
        for mu, y in b.items():
            key = Partition(sorted(lam + mu, reverse=True))
            add_scaled(out, {key: x * y}, Fraction(1))
    return out


@lru_cache(maxsize=None)
def _h_power(lam: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    result: Coeffs = {Partition(): Fraction(1)}
    for part in lam:
        result = power_product(result, dict(h_in_power(part)))
    return tuple(sorted(result.items()))


def h_power(lam: Partition) -> Coeffs:
    return dict(_h_power(lam))


@lru_cache(maxsize=None)
def _m_power(lam: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    # p_lam = sum over coarsenings mu of R(lam, mu) m_mu, triangular in dominance
    result: Coeffs = {lam: Fraction(1)}
    for mu in partitions_of(lam.weight):
        if mu == lam:
            continue
        count = power_in_monomial(lam, mu)
        if count:
            add_scaled(result, m_power(mu), Fraction(-count))
    diagonal = Fraction(power_in_monomial(lam, lam))
    return tuple(sorted((k, v / diagonal) for k, v in result.items()))


def m_power(lam: Partition) -> Coeffs:
    """m_lam in the power-sum basis."""
    return dict(_m_power(lam))


@lru_cache(maxsize=None)
def _s_power(lam: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    result: Coeffs = {}
    for mu in partitions_of(lam.weight):
        count = kostka(lam, mu)
        if count:
            add_scaled(result, m_power(mu), Fraction(count))
    return tuple(sorted(result.items()))


def s_power(lam: Partition) -> Coeffs:
    """s_lam in the power-sum basis, through its monomial (Kostka) expansion."""
    return dict(_s_power(lam))
