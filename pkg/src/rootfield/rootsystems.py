"""Finite root sets with an exact bilinear form: axioms, bases, Dynkin types,
reflection matrices, and explicit Weyl-group generation.

Root sets live in ambient rational coordinates with a positive-definite Gram
matrix.  Type recognition goes through a deterministically extracted base and
canonical Dynkin-diagram matching (edge multiplicities plus root lengths, so
the B/C distinction is decided by geometry, not by name).  Non-reduced types
are recognized through their indivisible subsystem plus the doubled roots.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional, Sequence

from .exact import (
    Mat,
    Num,
    QuadForm,
    Vector,
    fr,
    is_zero_vec,
    vec,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
)

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")


def default_cap() -> int:
    return int(os.environ.get("ROOTFIELD_CAP", 10**6))


# -- types -----------------------------------------------------------------------


def _check_component(family: str, rank: int) -> tuple[str, int]:
    if family == "B" and rank == 1:
        family = "A"
    if family == "C" and rank <= 2:
        family = "B" if rank == 2 else "A"
    legal = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
        "BC": rank >= 1,
    }
    if family not in legal or not legal[family]:
        raise ValueError(f"illegal component {family}{rank}")
    return family, rank


def parse_component(text: str) -> tuple[str, int]:
    """Parse a component label such as A2, BC2, or A1' (the non-reduced rank-1 type)."""
    t = text.strip()
    if t in ("A1'", "A1p"):
        return ("BC", 1)
    fam = "".join(ch for ch in t if ch.isalpha())
    num = t[len(fam):]
    if not num.isdigit():
        raise ValueError(f"bad component label {text!r}")
    return _check_component(fam, int(num))


@dataclass(frozen=True, order=True)
class RootSystemType:
    """Multiset of irreducible components, canonically sorted."""

    components: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, *labels: str) -> "RootSystemType":
        return cls.from_components([parse_component(l) for l in labels])

    @classmethod
    def from_components(cls, comps: Sequence[tuple[str, int]]) -> "RootSystemType":
        normed = [_check_component(f, r) for f, r in comps]
        return cls(tuple(sorted(normed, key=lambda c: (c[1], c[0]))))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def is_reduced(self) -> bool:
        return all(f != "BC" for f, _ in self.components)

    def reduced_weyl_type(self) -> "RootSystemType":
        """Same Weyl group, non-reduced components replaced by their reduced twins."""
        out = []
        for f, r in self.components:
            if f == "BC":
                out.append(("A", 1) if r == 1 else ("B", r))
            else:
                out.append((f, r))
        return RootSystemType.from_components(out)

    def __str__(self) -> str:
        if not self.components:
            return "empty"
        parts = []
        for f, r in sorted(set(self.components), key=lambda c: (c[1], c[0])):
            mult = self.components.count((f, r))
            label = "A1'" if (f, r) == ("BC", 1) else f"{f}{r}"
            parts.append((f"{mult}" if mult > 1 else "") + label)
        return "+".join(parts)


ROOT_COUNTS = {
    "A": lambda l: l * (l + 1),
    "B": lambda l: 2 * l * l,
    "C": lambda l: 2 * l * l,
    "D": lambda l: 2 * l * (l - 1),
    "E": lambda l: {6: 72, 7: 126, 8: 240}[l],
    "F": lambda l: 48,
    "G": lambda l: 12,
    "BC": lambda l: 2 * l * (l + 1),
}


# -- root sets ---------------------------------------------------------------------


@dataclass(frozen=True)
class RootSet:
    dim: int
    form: QuadForm
    roots: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.form.dim != self.dim:
            raise ValueError("form dimension does not match ambient dimension")
        for r in self.roots:
            if len(r) != self.dim:
                raise ValueError("root dimension mismatch")


@dataclass
class VerifyReport:
    valid: bool
    reduced: bool
    rank: int
    witnesses: list[str] = field(default_factory=list)


def reflection_matrix(form: QuadForm, alpha: Vector) -> Mat:
    """Matrix of x -> x - (2<x,a>/<a,a>) a; an involution preserving the form."""
    n = len(alpha)
    norm = form.value(alpha)
    if norm == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    cols = []
    for j in range(n):
        e = vec([1 if i == j else 0 for i in range(n)])
        c = Fraction(2) * Fraction(form.pair(e, alpha)) / Fraction(norm)
        cols.append(vec_sub(e, vec_scale(c, alpha)))
    return Mat.from_columns(cols)


def reflect(form: QuadForm, alpha: Vector, x: Vector) -> Vector:
    c = Fraction(2) * Fraction(form.pair(x, alpha)) / Fraction(form.value(alpha))
    return vec_sub(x, vec_scale(c, alpha))


def verify_root_system(rs: RootSet) -> VerifyReport:
    """Check the (possibly non-reduced) root system axioms against the form."""
    witnesses: list[str] = []
    roots = rs.roots
    rset = set(roots)
    if not roots:
        return VerifyReport(False, True, 0, ["empty root set"])
    if len(rset) != len(roots):
        witnesses.append("duplicate roots")
    for r in roots:
        if is_zero_vec(r):
            witnesses.append("zero vector among roots")
            break
    for r in roots:
        if vec_neg(r) not in rset:
            witnesses.append(f"set not symmetric: -({_fmt_vec(r)}) missing")
            break
    reduced = True
    for a in roots:
        na = rs.form.value(a)
        if na <= 0:
            witnesses.append(f"root {_fmt_vec(a)} has nonpositive length")
            break
        for b in roots:
            ratio = _multiple_of(a, b)
            if ratio is not None and ratio not in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)):
                witnesses.append(f"illegal multiple {ratio} of root {_fmt_vec(a)}")
            if ratio in (2, -2, Fraction(1, 2), Fraction(-1, 2)):
                reduced = False
            cartan = Fraction(2) * Fraction(rs.form.pair(b, a)) / Fraction(na)
            if cartan.denominator != 1:
                witnesses.append(
                    f"non-integral Cartan number {cartan} for pair {_fmt_vec(b)}, {_fmt_vec(a)}"
                )
        if witnesses:
            break
    if not witnesses:
        for a in roots:
            for b in roots:
                img = reflect(rs.form, a, b)
                if img not in rset:
                    witnesses.append(
                        f"reflection in {_fmt_vec(a)} sends {_fmt_vec(b)} to {_fmt_vec(img)}, not a root"
                    )
                    break
            if witnesses:
                break
    rank = Mat(list(roots)).rank() if roots else 0
    return VerifyReport(not witnesses, reduced, rank, witnesses)


def _fmt_vec(v: Vector) -> str:
    return " ".join(str(c) for c in v)


def _multiple_of(a: Vector, b: Vector) -> Optional[Num]:
    """Return c with b = c*a if the two roots are parallel, else None."""
    ratio: Optional[Fraction] = None
    for x, y in zip(a, b):
        if x == 0:
            if y != 0:
                return None
            continue
        r = Fraction(y) / Fraction(x)
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
    return fr(ratio) if ratio is not None else None


def extract_base(rs: RootSet) -> tuple[Vector, ...]:
    """Simple roots for a deterministically chosen positive system.

    A rational functional that vanishes nowhere on the roots is picked from a
    fixed sequence; the simple roots are the positive roots that are not sums
    of two positive roots.
    """
    roots = rs.roots
    c = 9973
    while True:
        weights = [Fraction(c) ** i for i in range(rs.dim)]
        values = {r: sum(w * x for w, x in zip(weights, r)) for r in roots}
        if all(v != 0 for v in values.values()):
            break
        c += 1
    positive = sorted([r for r in roots if values[r] > 0])
    pos_set = set(positive)
    simple = []
    for r in positive:
        if not any(vec_sub(r, p) in pos_set for p in positive if p != r and values[p] < values[r]):
            simple.append(r)
    return tuple(sorted(simple))


def _indivisible(rs: RootSet) -> tuple[Vector, ...]:
    rset = set(rs.roots)
    return tuple(r for r in rs.roots if vec_scale(Fraction(1, 2), r) not in rset)


def classify_type(rs: RootSet) -> RootSystemType:
    """Recognize the Dynkin type of a verified root set (reduced or not)."""
    report = verify_root_system(rs)
    if not report.valid:
        raise ValueError(f"not a root system: {report.witnesses[0]}")
    indivisible = _indivisible(rs)
    core = RootSet(rs.dim, rs.form, indivisible)
    base = extract_base(core)
    comps = _diagram_components(core.form, base)
    root_comp = _attribute_roots(core, base, comps)
    doubled = {r for r in rs.roots if r not in set(indivisible)}
    components: list[tuple[str, int]] = []
    for ci, nodes in enumerate(comps):
        fam, rank = _component_family(core.form, base, nodes)
        comp_roots = [r for r, c in root_comp.items() if c == ci]
        if ROOT_COUNTS[fam](rank) != len(comp_roots):
            raise ValueError(
                f"component {fam}{rank} should have {ROOT_COUNTS[fam](rank)} roots, found {len(comp_roots)}"
            )
        comp_doubles = [d for d in doubled if vec_scale(Fraction(1, 2), d) in comp_roots]
        if comp_doubles:
            short_norm = min(core.form.value(r) for r in comp_roots)
            shorts = [r for r in comp_roots if core.form.value(r) == short_norm]
            if fam not in ("A", "B") or (fam == "A" and rank != 1):
                raise ValueError(f"doubled roots on a {fam}{rank} component match no catalogue entry")
            if sorted(comp_doubles) != sorted(vec_scale(2, s) for s in shorts):
                raise ValueError("doubled roots do not cover exactly the short roots")
            fam = "BC"
        components.append((fam, rank))
    if sum(1 for _ in doubled) != sum(
        ROOT_COUNTS["BC"](r) - ROOT_COUNTS["B" if r > 1 else "A"](r)
        for f, r in components
        if f == "BC"
    ):
        raise ValueError("doubled roots left over after classification")
    return RootSystemType.from_components(components)


def _diagram_components(form: QuadForm, base: Sequence[Vector]) -> list[list[int]]:
    n = len(base)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if form.pair(base[i], base[j]) != 0:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _attribute_roots(rs: RootSet, base: Sequence[Vector], comps: list[list[int]]) -> dict[Vector, int]:
    node_comp = {}
    for ci, nodes in enumerate(comps):
        for node in nodes:
            node_comp[node] = ci
    base_mat = Mat(list(base)).transpose()
    out: dict[Vector, int] = {}
    for r in rs.roots:
        sol = base_mat.solve(r)
        if sol is None:
            raise ValueError("root outside the span of the base")
        support = {node_comp[i] for i, c in enumerate(sol) if c != 0}
        if len(support) != 1:
            raise ValueError("root supported on several components")
        out[r] = support.pop()
    return out


def _component_family(form: QuadForm, base: Sequence[Vector], nodes: list[int]) -> tuple[str, int]:
    """Canonical Dynkin-diagram matching for one connected component."""
    k = len(nodes)
    if k == 1:
        return ("A", 1)
    mult = {}
    for ai in range(k):
        for bi in range(ai + 1, k):
            a, b = base[nodes[ai]], base[nodes[bi]]
            pab = form.pair(a, b)
            if pab == 0:
                continue
            n1 = Fraction(2) * Fraction(pab) / Fraction(form.value(b))
            n2 = Fraction(2) * Fraction(pab) / Fraction(form.value(a))
            m = n1 * n2
            if m.denominator != 1 or int(m) not in (1, 2, 3):
                raise ValueError("bond strength matches no catalogue entry")
            mult[(ai, bi)] = int(m)
    degree = [0] * k
    for (ai, bi) in mult:
        degree[ai] += 1
        degree[bi] += 1
    if len(mult) != k - 1 or any(d == 0 for d in degree):
        raise ValueError("diagram is not a tree; matches no catalogue entry")
    norms = [form.value(base[i]) for i in nodes]
    triples = [e for e, m in mult.items() if m == 3]
    doubles = [e for e, m in mult.items() if m == 2]
    if triples:
        if k == 2 and len(triples) == 1:
            return ("G", 2)
        raise ValueError("triple bond outside rank 2 matches no catalogue entry")
    if doubles:
        if len(doubles) > 1 or any(d > 2 for d in degree):
            raise ValueError("diagram matches no catalogue entry")
        if k == 2:
            return ("B", 2)
        (ai, bi) = doubles[0]
        inner = degree[ai] == 2 and degree[bi] == 2
        if inner:
            if k == 4:
                return ("F", 4)
            raise ValueError("interior double bond matches no catalogue entry")
        end = ai if degree[ai] == 1 else bi
        short_end = norms[end] == min(norms)
        return ("B" if short_end else "C", k)
    # simply laced: path or one branch point
    branch = [i for i in range(k) if degree[i] == 3]
    if any(d > 3 for d in degree) or len(branch) > 1:
        raise ValueError("diagram matches no catalogue entry")
    if not branch:
        return ("A", k)
    arms = sorted(_arm_lengths(mult, k, branch[0]))
    if arms[:2] == [1, 1]:
        return ("D", k)
    if arms == [1, 2, 2]:
        return ("E", 6)
    if arms == [1, 2, 3]:
        return ("E", 7)
    if arms == [1, 2, 4]:
        return ("E", 8)
    raise ValueError("diagram matches no catalogue entry")


def _arm_lengths(mult: dict, k: int, center: int) -> list[int]:
    adj: dict[int, list[int]] = {i: [] for i in range(k)}
    for (a, b) in mult:
        adj[a].append(b)
        adj[b].append(a)
    lengths = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return lengths


# -- matrix groups ------------------------------------------------------------------


class MatrixGroup:
    """Explicitly listed finite group of exact matrices."""

    def __init__(self, elements: Sequence[Mat], generators: Sequence[Mat]) -> None:
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self._orders: Optional[tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            self._orders = tuple(sorted(matrix_order(m) for m in self.elements))
        return self._orders

    @property
    def exponent(self) -> int:
        return lcm(*self.element_orders) if self.elements else 1

    def __contains__(self, m: Mat) -> bool:
        return m in set(self.elements)

    def __repr__(self) -> str:
        return f"MatrixGroup(order={self.order})"


def matrix_order(m: Mat, cap: int = 10**6) -> int:
    cur = m
    for n in range(1, cap + 1):
        if cur.is_identity():
            return n
        cur = cur @ m
    raise RuntimeError("element order exceeded the cap")


def close_matrices(gens: Sequence[Mat], cap: Optional[int] = None) -> tuple[Mat, ...]:
    """Deterministic BFS closure of matrices under multiplication."""
    cap = default_cap() if cap is None else cap
    if not gens:
        raise ValueError("no generators")
    ident = Mat.identity(gens[0].nrows)
    seen = {ident: None}
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = cur @ g
            if nxt not in seen:
                if len(seen) >= cap:
                    raise RuntimeError(f"group generation cap {cap} exceeded")
                seen[nxt] = None
                queue.append(nxt)
    return tuple(seen)


def matrix_group(gens: Sequence[Mat], cap: Optional[int] = None) -> MatrixGroup:
    return MatrixGroup(close_matrices(gens, cap), tuple(gens))


def generate_weyl(rs: RootSet, cap: Optional[int] = None) -> MatrixGroup:
    """Close the simple-root reflections of a verified root set."""
    report = verify_root_system(rs)
    if not report.valid:
        raise ValueError(f"not a root system: {report.witnesses[0]}")
    base = extract_base(RootSet(rs.dim, rs.form, _indivisible(rs)))
    gens = [reflection_matrix(rs.form, a) for a in base]
    return matrix_group(gens, cap)


def normal_cyclic_subgroups(g: MatrixGroup) -> list[tuple[int, int]]:
    """(order, index) of every cyclic subgroup normalized by the generators."""
    gens = g.generators or g.elements
    gen_invs = [(s, _matrix_inverse_by_order(s)) for s in gens]
    seen: dict[frozenset, int] = {}
    for x in g.elements:
        cyc = []
        cur = x
        while True:
            cyc.append(cur)
            if cur.is_identity():
                break
            cur = cur @ x
        key = frozenset(cyc)
        if key not in seen:
            seen[key] = len(cyc)
    out = []
    for subgroup, order in seen.items():
        if all(s @ h @ s_inv in subgroup for s, s_inv in gen_invs for h in subgroup):
            out.append((order, g.order // order))
    return sorted(out)


def max_element_order(g: MatrixGroup) -> int:
    return max(g.element_orders) if g.elements else 1


def _matrix_inverse_by_order(m: Mat) -> Mat:
    inv = Mat.identity(m.nrows)
    cur = m
    while not cur.is_identity():
        inv = cur
        cur = cur @ m
    return inv


# -- standard models of the irreducible types ---------------------------------------


def _simple_gram(family: str, rank: int) -> Mat:
    """Gram matrix of a standard set of simple roots (long roots of norm 2)."""
    f2 = Fraction(2)
    g = [[Fraction(0)] * rank for _ in range(rank)]

    def path(norms, pairs):
        for i, v in enumerate(norms):
            g[i][i] = Fraction(v)
        for (i, j), v in pairs.items():
            g[i][j] = Fraction(v)
            g[j][i] = Fraction(v)

    if family == "A":
        path([2] * rank, {(i, i + 1): -1 for i in range(rank - 1)})
    elif family == "B":
        path([2] * (rank - 1) + [1], {(i, i + 1): -1 for i in range(rank - 1)})
    elif family == "C":
        path([2] * (rank - 1) + [4], {(i, i + 1): -1 for i in range(rank - 2)} | {(rank - 2, rank - 1): -2})
    elif family == "D":
        path([2] * rank, {(i, i + 1): -1 for i in range(rank - 2)} | {(rank - 3, rank - 1): -1})
    elif family == "E":
        path([2] * rank, {(i, i + 1): -1 for i in range(rank - 2)} | {(2, rank - 1): -1})
    elif family == "F":
        path([2, 2, 1, 1], {(0, 1): -1, (1, 2): -1, (2, 3): Fraction(-1, 2)})
    elif family == "G":
        path([2, 6], {(0, 1): -3})
    else:
        raise ValueError(f"no standard model for family {family}")
    return Mat(g)


@lru_cache(maxsize=None)
def _standard_component_roots(family: str, rank: int) -> tuple[QuadForm, tuple[Vector, ...]]:
    """Roots of one irreducible type in simple-root coordinates (all integers)."""
    if family == "BC":
        if rank == 1:
            form = QuadForm(Mat([[1]]))
            return form, (vec([-2]), vec([-1]), vec([1]), vec([2]))
        form, b_roots = _standard_component_roots("B", rank)
        short = min(form.value(r) for r in b_roots)
        doubled = tuple(vec_scale(2, r) for r in b_roots if form.value(r) == short)
        return form, tuple(sorted(b_roots + doubled))
    form = QuadForm(_simple_gram(family, rank))
    simples = [vec([1 if i == j else 0 for i in range(rank)]) for j in range(rank)]
    roots = set(simples) | {vec_neg(s) for s in simples}
    frontier = list(roots)
    while frontier:
        new = []
        for r in frontier:
            for s in simples:
                img = reflect(form, s, r)
                if img not in roots:
                    roots.add(img)
                    new.append(img)
        frontier = new
    expect = ROOT_COUNTS[family](rank)
    if len(roots) != expect:
        raise AssertionError(f"{family}{rank}: built {len(roots)} roots, expected {expect}")
    return form, tuple(sorted(roots))


def standard_root_set(rst: RootSystemType) -> RootSet:
    """Block direct sum of the standard models of the components."""
    if not rst.components:
        raise ValueError("empty type has no root set")
    blocks = [_standard_component_roots(f, r) for f, r in rst.components]
    dim = rst.rank
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    roots: list[Vector] = []
    offset = 0
    for (form, comp_roots), (_, rank) in zip(blocks, rst.components):
        for i in range(rank):
            for j in range(rank):
                gram[offset + i][offset + j] = form.gram.entry(i, j)
        for r in comp_roots:
            roots.append(vec([0] * offset + list(r) + [0] * (dim - offset - rank)))
        offset += rank
    return RootSet(dim, QuadForm(Mat(gram)), tuple(sorted(roots)))


@lru_cache(maxsize=None)
def standard_weyl_group(rst: RootSystemType, cap: Optional[int] = None) -> MatrixGroup:
    return generate_weyl(standard_root_set(rst), cap)
