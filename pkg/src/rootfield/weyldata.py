"""Closed-form Weyl-group orders, p-adic valuations, and rank-based bounds.

Orders of the classical families come from their factorial formulas; the
exceptional orders are stored in factored form so valuations at any prime are
exact without factoring large integers.  Exponents have no convenient closed
form, so they are computed once per irreducible type by explicit generation
and cached (all the types the filters actually need are tiny).
"""

from __future__ import annotations

from math import factorial, lcm
from typing import Optional

from .rootsystems import RootSystemType, standard_weyl_group

_EXCEPTIONAL_FACTORS: dict[tuple[str, int], dict[int, int]] = {
    ("E", 6): {2: 7, 3: 4, 5: 1},
    ("E", 7): {2: 10, 3: 4, 5: 1, 7: 1},
    ("E", 8): {2: 14, 3: 5, 5: 2, 7: 1},
    ("F", 4): {2: 7, 3: 2},
    ("G", 2): {2: 2, 3: 1},
}


def legendre_nu(p: int, m: int) -> int:
    """p-adic valuation of m! (Legendre's formula)."""
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    out = 0
    q = p
    while q <= m:
        out += m // q
        q *= p
    return out


def _component_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "BC":
        return 2 if rank == 1 else 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    factors = _EXCEPTIONAL_FACTORS[(family, rank)]
    out = 1
    for p, e in factors.items():
        out *= p**e
    return out


def _component_nu(family: str, rank: int, p: int) -> int:
    if family == "A":
        return legendre_nu(p, rank + 1)
    if family in ("B", "C") or (family == "BC" and rank > 1):
        return (rank if p == 2 else 0) + legendre_nu(p, rank)
    if family == "BC":  # rank 1, same Weyl group as A1
        return 1 if p == 2 else 0
    if family == "D":
        return (rank - 1 if p == 2 else 0) + legendre_nu(p, rank)
    return _EXCEPTIONAL_FACTORS[(family, rank)].get(p, 0)


def weyl_order(t: RootSystemType) -> int:
    out = 1
    for family, rank in t.components:
        out *= _component_order(family, rank)
    return out


def nu_p(t: RootSystemType, p: int) -> int:
    """p-adic valuation of the Weyl-group order; additive over components."""
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    return sum(_component_nu(f, r, p) for f, r in t.components)


def nu2_lower_bound(rank: int) -> int:
    """Every rank-r Weyl group order has 2-adic valuation at least floor((r+1)/2)."""
    if rank < 1:
        raise ValueError("rank must be positive")
    return (rank + 1) // 2


_X_FULL = {("B", 3), ("B", 4), ("B", 5), ("C", 3), ("C", 4), ("C", 5), ("D", 4), ("G", 2)}
_X_MINUS_1 = {("A", 2), ("A", 3), ("D", 5)}
_X_MINUS_2 = {("A", 4)}


def orthogonal_a1_bound(t: RootSystemType) -> int:
    """Largest m such that the Weyl group is known to contain the group of m
    commuting reflections (a product of m two-element groups).

    For a type of the shape X + a*A1 + b*B2 with X in the tabulated list the
    bound is rank, rank-1, or rank-2 depending on X; otherwise only the
    components whose full rank embeds this way contribute.
    """
    reduced = t.reduced_weyl_type()
    others = [c for c in reduced.components if c not in (("A", 1), ("B", 2))]
    if not others:
        return reduced.rank
    if len(others) == 1:
        x = others[0]
        if x in _X_FULL:
            return reduced.rank
        if x in _X_MINUS_1:
            return reduced.rank - 1
        if x in _X_MINUS_2:
            return reduced.rank - 2
    total = 0
    for family, rank in reduced.components:
        if (family, rank) in (("A", 1), ("B", 2), ("G", 2)) or family in ("B", "C"):
            total += rank
        elif family == "D" and rank % 2 == 0:
            total += rank
    return total


_EXPONENT_CACHE: dict[tuple[str, int], int] = {}


def component_exponent(family: str, rank: int, cap: int = 10**4) -> Optional[int]:
    """Exponent of one irreducible Weyl group via explicit generation, or None above cap."""
    if family == "BC":
        family, rank = ("A", 1) if rank == 1 else ("B", rank)
    key = (family, rank)
    if key not in _EXPONENT_CACHE:
        t = RootSystemType.from_components([key])
        if weyl_order(t) > cap:
            return None
        _EXPONENT_CACHE[key] = standard_weyl_group(t).exponent
    return _EXPONENT_CACHE[key]


def exponent(t: RootSystemType, cap: int = 10**4) -> Optional[int]:
    """Exponent of the Weyl group (lcm over components), or None if any component is above cap."""
    exps = []
    for family, rank in t.components:
        e = component_exponent(family, rank, cap)
        if e is None:
            return None
        exps.append(e)
    return lcm(*exps) if exps else 1
