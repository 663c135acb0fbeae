"""Invertible operators x -> a*g(x) on a number field, for a nonzero multiplier a
and a field automorphism g.

These operators form a group (a semidirect product of the multiplications by
nonzero field elements and the automorphism group); composition and inversion
are done on the (multiplier, automorphism) pair, which is an exact normal
form: the matrix of an operator applied to 1 recovers the multiplier.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import Mat, Vector
from .numberfield import FieldElement, NumberField
from .rootsystems import MatrixGroup, default_cap


@dataclass(frozen=True)
class FieldOperator:
    multiplier: FieldElement
    aut: int

    def __post_init__(self) -> None:
        if self.multiplier.is_zero():
            raise ValueError("operator multiplier must be nonzero")

    @property
    def field(self) -> NumberField:
        return self.multiplier.field

    @classmethod
    def identity(cls, field: NumberField) -> "FieldOperator":
        return cls(field.one(), 0)

    def __mul__(self, other: "FieldOperator") -> "FieldOperator":
        k = self.field
        if k is not other.field:
            raise ValueError("field mismatch")
        mult = self.multiplier * k.apply_aut(self.aut, other.multiplier)
        return FieldOperator(mult, k.aut_mul[self.aut][other.aut])

    def inverse(self) -> "FieldOperator":
        k = self.field
        g_inv = k.aut_inv[self.aut]
        return FieldOperator(k.apply_aut(g_inv, self.multiplier.inverse()), g_inv)

    def is_identity(self) -> bool:
        return self.aut == 0 and self.multiplier == self.field.one()

    def apply(self, x: FieldElement) -> FieldElement:
        return self.multiplier * self.field.apply_aut(self.aut, x)

    def matrix(self) -> Mat:
        k = self.field
        return k.mult_matrix(self.multiplier) @ k.automorphisms[self.aut]

    def order(self) -> Optional[int]:
        """Exact order, or None for infinite order.

        The operator has finite order exactly when the product of its
        multiplier over the orbit of its automorphism is a root of unity;
        the order is then found by iterating composition.
        """
        k = self.field
        rel = k.relative_norm(self.multiplier, self.aut)
        d = k.is_root_of_unity(rel)
        if d is None:
            return None
        bound = k.aut_order[self.aut] * d
        cur = self
        for n in range(1, bound + 1):
            if cur.is_identity():
                return n
            cur = cur * self
        raise AssertionError("order exceeded its bound")

    def fixed_space(self) -> tuple[int, list[Vector]]:
        """Dimension and basis of the subspace of fixed vectors."""
        m = self.matrix() - Mat.identity(self.field.degree)
        basis = m.kernel()
        return len(basis), basis

    def __repr__(self) -> str:
        mult = " ".join(str(c) for c in self.multiplier.coords)
        return f"FieldOperator(mult=[{mult}], aut={self.aut})"


def recognize(m: Mat, field: NumberField) -> Optional[FieldOperator]:
    """Decompose a matrix as multiplier-then-automorphism, if possible.

    The multiplier is forced: it is the image of 1.  Each automorphism is then
    tested against the remaining columns.
    """
    n = field.degree
    if not m.is_square() or m.nrows != n:
        raise ValueError("dimension mismatch")
    if m.det() == 0:
        raise ValueError("singular matrix")
    mult = field.element(m.column(0))
    mult_mat = field.mult_matrix(mult)
    for i, aut in enumerate(field.automorphisms):
        if (mult_mat @ aut) == m:
            return FieldOperator(mult, i)
    return None


def generate_operators(gens: Sequence[FieldOperator], cap: Optional[int] = None) -> list[FieldOperator]:
    """Closure of finite-order operators under composition, in deterministic BFS order."""
    cap = default_cap() if cap is None else cap
    if not gens:
        raise ValueError("no generators")
    field = gens[0].field
    for g in gens:
        if g.field is not field:
            raise ValueError("field mismatch")
        if g.order() is None:
            raise ValueError(f"infinite-order generator {g!r}")
    ident = FieldOperator.identity(field)
    seen: dict[tuple[Vector, int], FieldOperator] = {(ident.multiplier.coords, 0): ident}
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = cur * g
            key = (nxt.multiplier.coords, nxt.aut)
            if key not in seen:
                if len(seen) >= cap:
                    raise RuntimeError(f"group generation cap {cap} exceeded")
                seen[key] = nxt
                queue.append(nxt)
    return list(seen.values())


def generate_subgroup(gens: Sequence[FieldOperator], cap: Optional[int] = None) -> MatrixGroup:
    """Explicit matrix group generated by finite-order operators."""
    ops = generate_operators(gens, cap)
    return MatrixGroup(tuple(op.matrix() for op in ops), tuple(g.matrix() for g in gens))
