"""Exact arithmetic in a number field: elements, automorphisms, traces, norms, roots of unity.

A field of degree n over the rationals is presented by a monic irreducible
polynomial; elements are coordinate vectors in the power basis 1, t, ...,
t^(n-1) of the defining root t.  A Z-basis of the ring of integers is
supplied (presets cover the fields the package constructs in) and verified
to be a ring.  Automorphisms are found as roots of the defining polynomial
inside the field itself, by exact lattice enumeration under the trace form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Optional, Sequence

from .exact import (
    Mat,
    Num,
    QuadForm,
    Vector,
    enumerate_ball,
    enumerate_level_set,
    fr,
    vec,
)


def totient(d: int) -> int:
    out = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def _poly_trim(p: Sequence[Num]) -> tuple[Num, ...]:
    q = list(p)
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return tuple(q)


class FieldElement:
    """Element of a number field, stored as power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: "NumberField", coords: Vector) -> None:
        self.field = field
        self.coords = vec(coords)

    def _same(self, other: "FieldElement") -> None:
        if self.field is not other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, [-a for a in self.coords])

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.mul_coords(self.coords, other.coords))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldElement) and self.field is other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"<{self.field.name}: {' '.join(str(c) for c in self.coords)}>"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        sol = self.field.mult_matrix(self).solve(self.field.one().coords)
        assert sol is not None
        return FieldElement(self.field, sol)

    def trace(self) -> Num:
        m = self.field.mult_matrix(self)
        return fr(sum(m.entry(i, i) for i in range(m.nrows)))

    def norm(self) -> Num:
        return self.field.mult_matrix(self).det()

    def integral_coords(self) -> Optional[tuple[int, ...]]:
        """Coordinates in the integral basis, or None if not an algebraic integer."""
        sol = self.field.basis_matrix.transpose().solve(self.coords)
        assert sol is not None
        if any(not isinstance(c, int) for c in sol):
            return None
        return tuple(sol)  # type: ignore[return-value]

    def is_integral(self) -> bool:
        return self.integral_coords() is not None


class NumberField:
    """A number field with verified integral basis, automorphisms and trace form."""

    def __init__(
        self,
        name: str,
        min_poly: Sequence,
        integral_basis: Sequence[Sequence],
        conjugation: object = "auto",
        irreducible_certified: bool = False,
        _conj_image: Optional[Sequence] = None,
    ) -> None:
        self.name = name
        self.min_poly = _poly_trim(vec(min_poly))
        self.degree = len(self.min_poly) - 1
        if self.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if self.min_poly[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        if not irreducible_certified:
            _check_irreducible(self.min_poly)
        self._power_table = self._build_power_table()

        self.basis_matrix = Mat(integral_basis)
        if self.basis_matrix.nrows != self.degree or self.basis_matrix.ncols != self.degree:
            raise ValueError("integral basis must be a square matrix of the field degree")
        if self.basis_matrix.det() == 0:
            raise ValueError("integral basis is singular")
        self._check_order()

        auts, conj = _automorphisms_and_conjugation(self, conjugation, _conj_image)
        self.automorphisms: tuple[Mat, ...] = tuple(auts)
        self.conjugation_index = conj
        self._verify_automorphisms()
        self.aut_mul, self.aut_inv, self.aut_order = self._aut_tables()

        self.trace_form = self._trace_form()
        self.trace_form_definite = self.trace_form.is_positive_definite()
        self._unity: Optional[tuple[FieldElement, int]] = None

    # -- construction helpers -------------------------------------------------

    def _build_power_table(self) -> list[Vector]:
        """Coordinates of t^k for k = 0 .. 2n-2, reduced modulo the minimal polynomial."""
        n = self.degree
        table: list[Vector] = []
        for k in range(n):
            table.append(vec([1 if i == k else 0 for i in range(n)]))
        top = vec([-c for c in self.min_poly[:n]])  # t^n
        cur = top
        table.append(cur)
        for _ in range(n - 2):
            shifted = [fr(0)] + list(cur[: n - 1])
            carry = cur[n - 1]
            cur = vec([s + carry * t for s, t in zip(shifted, top)])
            table.append(cur)
        return table[: 2 * n - 1]

    def mul_coords(self, a: Vector, b: Vector) -> Vector:
        n = self.degree
        conv = [fr(0)] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj != 0:
                    conv[i + j] += ai * bj
        out = [fr(0)] * n
        for k, ck in enumerate(conv):
            if ck != 0:
                for i, ti in enumerate(self._power_table[k]):
                    out[i] += ck * ti
        return vec(out)

    def _check_order(self) -> None:
        """The claimed integral basis must span a ring containing 1."""
        one = self.one()
        if one.integral_coords() is None:
            raise ValueError("integral basis lattice does not contain 1")
        basis = [self.from_integral_coords([1 if i == j else 0 for j in range(self.degree)])
                 for i in range(self.degree)]
        for i in range(self.degree):
            for j in range(i, self.degree):
                if (basis[i] * basis[j]).integral_coords() is None:
                    raise ValueError("integral basis is not closed under multiplication")

    def _verify_automorphisms(self) -> None:
        n = self.degree
        e = [vec([1 if i == k else 0 for i in range(n)]) for k in range(n)]
        for a in self.automorphisms:
            if a.apply(e[0]) != e[0]:
                raise ValueError("claimed automorphism does not fix 1")
            if a.det() == 0:
                raise ValueError("claimed automorphism is singular")
            images = [a.apply(e[k]) for k in range(n)]
            for i in range(n):
                for j in range(i, n):
                    lhs = a.apply(self._power_table[i + j])
                    rhs = self.mul_coords(images[i], images[j])
                    if lhs != rhs:
                        raise ValueError("claimed automorphism fails multiplicativity")
        if len(set(self.automorphisms)) != len(self.automorphisms):
            raise ValueError("duplicate automorphisms")
        if n % len(self.automorphisms) != 0:
            raise ValueError("automorphism count does not divide the degree")

    def _aut_tables(self):
        auts = self.automorphisms
        k = len(auts)
        index = {a: i for i, a in enumerate(auts)}
        mul = []
        for i in range(k):
            row = []
            for j in range(k):
                prod = auts[i] @ auts[j]
                if prod not in index:
                    raise ValueError("automorphisms are not closed under composition")
                row.append(index[prod])
            mul.append(tuple(row))
        inv = []
        order = []
        ident = index[Mat.identity(self.degree)]
        for i in range(k):
            j = next(j for j in range(k) if mul[i][j] == ident)
            inv.append(j)
            o, cur = 1, i
            while cur != ident:
                cur = mul[cur][i]
                o += 1
            order.append(o)
        return tuple(mul), tuple(inv), tuple(order)

    def _trace_form(self) -> QuadForm:
        basis = [self.from_integral_coords([1 if i == j else 0 for j in range(self.degree)])
                 for i in range(self.degree)]
        conj = self.automorphisms[self.conjugation_index]
        gram = [[(b1 * FieldElement(self, conj.apply(b2.coords))).trace() for b2 in basis] for b1 in basis]
        return QuadForm(Mat(gram))

    # -- basic values ----------------------------------------------------------

    def element(self, coords: Sequence) -> FieldElement:
        c = vec(coords)
        if len(c) != self.degree:
            raise ValueError("wrong number of coordinates")
        return FieldElement(self, c)

    def zero(self) -> FieldElement:
        return self.element([0] * self.degree)

    def one(self) -> FieldElement:
        return self.element([1] + [0] * (self.degree - 1))

    def gen(self) -> FieldElement:
        if self.degree == 1:
            return self.zero() if self.min_poly[0] == 0 else self.element([-self.min_poly[0]])
        return self.element([0, 1] + [0] * (self.degree - 2))

    def rational(self, q) -> FieldElement:
        return self.element([fr(q)] + [0] * (self.degree - 1))

    def from_integral_coords(self, z: Sequence) -> FieldElement:
        return self.element(self.basis_matrix.transpose().apply(vec(z)))

    def mult_matrix(self, a: FieldElement) -> Mat:
        """Matrix of x -> a*x in the power basis."""
        n = self.degree
        cols = []
        cur = a.coords
        cols.append(cur)
        for _ in range(n - 1):
            cur = self.mul_coords(cur, vec([0, 1] + [0] * (n - 2)))
            cols.append(cur)
        return Mat.from_columns(cols)

    def apply_aut(self, i: int, a: FieldElement) -> FieldElement:
        return FieldElement(self, self.automorphisms[i].apply(a.coords))

    def conjugate(self, a: FieldElement) -> FieldElement:
        return self.apply_aut(self.conjugation_index, a)

    # -- arithmetic invariants -------------------------------------------------

    def relative_norm(self, a: FieldElement, aut: int) -> FieldElement:
        """Product of g^d(a) over d < ord(g); lands in the fixed field of g."""
        m = self.aut_order[aut]
        acc = self.one()
        cur = a
        for _ in range(m):
            acc = acc * cur
            cur = self.apply_aut(aut, cur)
        if self.apply_aut(aut, acc) != acc:
            raise AssertionError("relative norm not fixed by the automorphism")
        return acc

    def is_root_of_unity(self, a: FieldElement) -> Optional[int]:
        """Smallest d with a^d = 1, or None."""
        if a.is_zero():
            return None
        n = self.degree
        one = self.one()
        for d in range(1, max(6, n * n) + 1):
            if totient(d) <= n and a ** d == one:
                return d
        return None

    def roots_of_unity(self) -> tuple[FieldElement, int]:
        """Generator and order of the group of roots of unity.

        Every root of unity has all archimedean absolute values 1, hence trace
        form value exactly n; the level set is finite, so the scan is complete.
        """
        if self._unity is not None:
            return self._unity
        if not self.trace_form_definite:
            raise ValueError(f"unsupported field class for {self.name}: trace form is not positive-definite")
        found: list[tuple[FieldElement, int]] = []
        for z in enumerate_level_set(self.trace_form, self.degree):
            u = self.from_integral_coords(z)
            d = self.is_root_of_unity(u)
            if d is not None:
                found.append((u, d))
        order = len(found)
        top = [u for u, d in found if d == order]
        if not top:
            raise AssertionError("roots of unity do not form a cyclic group of their own order")
        gen = self.gen()
        generator = gen if any(u == gen for u in top) else min(top, key=lambda u: u.coords)
        self._unity = (generator, order)
        return self._unity

    @property
    def unity_group_order(self) -> int:
        return self.roots_of_unity()[1]

    def __repr__(self) -> str:
        return f"NumberField({self.name}, degree {self.degree})"


# -- irreducibility ------------------------------------------------------------


def _integer_rescale(poly: tuple[Num, ...]) -> tuple[int, list[int]]:
    """Substitute x = y/m so that the monic polynomial gets integer coefficients."""
    n = len(poly) - 1
    m = 1
    for c in poly[:-1]:
        if isinstance(c, Fraction):
            m = lcm(m, c.denominator)
    out = [int(poly[k] * m ** (n - k)) for k in range(n + 1)]
    return m, out


def _check_irreducible(poly: tuple[Num, ...]) -> None:
    """Exhaustive rational-root / quadratic-factor scan; only degrees <= 4 supported."""
    n = len(poly) - 1
    if n == 1:
        return
    if n > 4:
        raise ValueError("degrees above 4 require a certified-irreducible flag")
    _, g = _integer_rescale(poly)
    if g[0] == 0:
        raise ValueError("reducible polynomial: 0 is a root")
    divs = _divisors(abs(g[0]))
    for d in divs:
        for r in (d, -d):
            if sum(c * r ** k for k, c in enumerate(g)) == 0:
                raise ValueError(f"reducible polynomial: rational root {r} found")
    if n == 4:
        # monic integer quartic: scan factorizations (y^2+ay+b)(y^2+cy+d)
        g0, g1, g2, g3 = g[0], g[1], g[2], g[3]
        for b in _signed_divisors(g0):
            if g0 % b != 0:
                continue
            d = g0 // b
            s = g3                      # a + c
            p = g2 - b - d              # a * c
            disc = s * s - 4 * p
            if disc < 0:
                continue
            root = _isqrt_exact(disc)
            if root is None:
                continue
            for a in {(s + root) // 2, (s - root) // 2}:
                c = s - a
                if a + c == s and a * c == p and a * d + b * c == g1:
                    raise ValueError("reducible polynomial: quadratic factor found")


def _isqrt_exact(x: int) -> Optional[int]:
    from math import isqrt

    r = isqrt(x)
    return r if r * r == x else None


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, abs(n) + 1) if n % d == 0]


def _signed_divisors(n: int) -> list[int]:
    out = []
    for d in _divisors(n):
        out.extend([d, -d])
    return out


# -- automorphism discovery ----------------------------------------------------


def _aut_matrix_from_root(field: NumberField, root_coords: Vector) -> Mat:
    """Extend t -> u (a root of the defining polynomial) to a linear map."""
    n = field.degree
    cols = [vec([1] + [0] * (n - 1))]
    cur = cols[0]
    for _ in range(n - 1):
        cur = field.mul_coords(cur, root_coords)
        cols.append(cur)
    return Mat.from_columns(cols)


def _poly_value_coords(field: NumberField, poly: Sequence[Num], x: Vector) -> Vector:
    acc = vec([0] * field.degree)
    for c in reversed(list(poly)):
        acc = field.mul_coords(acc, x)
        acc = vec([a + (c if i == 0 else 0) for i, a in enumerate(acc)])
    return acc


def _roots_in_field(field: NumberField, form: QuadForm) -> list[Vector]:
    """All roots of the defining polynomial inside the field, by ball enumeration.

    Roots of the integer-monic rescale are algebraic integers whose conjugates
    are bounded by the Cauchy bound, so their trace-form value is at most
    n * C^2; the positive-definite ball is finite and the scan is complete.
    """
    m, g = _integer_rescale(field.min_poly)
    cauchy = 1 + max(abs(c) for c in g[:-1])
    bound = field.degree * cauchy * cauchy
    roots = []
    zero = vec([0] * field.degree)
    for z in enumerate_ball(form, bound):
        w = field.from_integral_coords(z)
        u = vec([Fraction(c, m) for c in w.coords])
        if _poly_value_coords(field, field.min_poly, u) == zero:
            roots.append(u)
    return roots


def _automorphisms_and_conjugation(
    field: NumberField, conjugation: object, conj_image: Optional[Sequence]
) -> tuple[list[Mat], int]:
    n = field.degree
    ident = Mat.identity(n)
    if n == 1:
        return [ident], 0

    if n == 2:
        # second root of a quadratic in closed form: sum of roots = -a1
        a1 = field.min_poly[1]
        other = vec([-a1, -1])
        auts = [ident, _aut_matrix_from_root(field, other)]
        return auts, _resolve_conj_quadratic(field, auts, conjugation)

    # degree >= 3: a positive-definite form is needed before enumeration
    if conj_image is not None:
        tau = _aut_matrix_from_root(field, vec(conj_image))
        if (tau @ tau) != ident:
            raise ValueError("designated conjugation does not have order 2")
    elif conjugation == "none":
        tau = ident
    else:
        tau = ident  # totally real attempt; verified positive-definite below
    form = _form_with_tau(field, tau)
    if not form.is_positive_definite():
        raise ValueError(
            "cannot resolve automorphisms: designate conjugation 'none' for a totally real "
            "field or use a preset for an imaginary field of degree >= 3"
        )
    auts = [_aut_matrix_from_root(field, r) for r in _roots_in_field(field, form)]
    auts.sort(key=lambda a: a.column(1))
    auts.remove(ident)
    auts.insert(0, ident)
    if tau not in auts:
        raise ValueError("designated conjugation is not an automorphism")
    conj = auts.index(tau)
    _verify_conjugation(field, auts, conj)
    return auts, conj


def _form_with_tau(field: NumberField, tau: Mat) -> QuadForm:
    basis = [field.from_integral_coords([1 if i == j else 0 for j in range(field.degree)])
             for i in range(field.degree)]
    gram = [[(b1 * FieldElement(field, tau.apply(b2.coords))).trace() for b2 in basis] for b1 in basis]
    return QuadForm(Mat(gram))


def _resolve_conj_quadratic(field: NumberField, auts: list[Mat], conjugation: object) -> int:
    if conjugation == "none":
        idx = 0
    elif isinstance(conjugation, int):
        if not 0 <= conjugation < len(auts):
            raise ValueError("conjugation index out of range")
        idx = conjugation
    elif conjugation == "auto":
        idx = next(
            (i for i in (1, 0) if _form_with_tau(field, auts[i]).is_positive_definite()),
            None,
        )
        if idx is None:
            raise ValueError(f"unsupported field class for {field.name}: no conjugation yields a definite trace form")
    else:
        raise ValueError(f"bad conjugation designation: {conjugation!r}")
    _verify_conjugation(field, auts, idx)
    return idx


def _verify_conjugation(field: NumberField, auts: list[Mat], idx: int) -> None:
    tau = auts[idx]
    if (tau @ tau) != Mat.identity(field.degree):
        raise ValueError("designated conjugation does not have order <= 2")
    for a in auts:
        if (a @ tau) != (tau @ a):
            raise ValueError("designated conjugation does not commute with all automorphisms")


# -- presets and field files -----------------------------------------------------

_PRESET_SPECS: dict[str, dict] = {
    "rationals": dict(min_poly=[0, 1], integral_basis=[[1]], conjugation="none"),
    "eisenstein": dict(min_poly=[1, -1, 1], integral_basis=[[1, 0], [0, 1]], conjugation="auto"),
    "gaussian": dict(min_poly=[1, 0, 1], integral_basis=[[1, 0], [0, 1]], conjugation="auto"),
    "sqrt2": dict(min_poly=[-2, 0, 1], integral_basis=[[1, 0], [0, 1]], conjugation="none"),
    "biquadratic": dict(
        min_poly=[1, 0, -1, 0, 1],
        integral_basis=[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        conjugation="auto",
        _conj_image=[0, 1, 0, -1],  # inverse of the defining 12th root of unity
    ),
}

PRESET_NAMES = tuple(sorted(_PRESET_SPECS))


@lru_cache(maxsize=None)
def _preset(name: str) -> NumberField:
    spec = _PRESET_SPECS[name]
    return NumberField(name, **spec)


def make_field(spec) -> NumberField:
    """Build a field from a preset name or a parsed description dict."""
    if isinstance(spec, str):
        if spec in _PRESET_SPECS:
            return _preset(spec)
        raise ValueError(f"unknown field preset {spec!r} (known: {', '.join(PRESET_NAMES)})")
    if isinstance(spec, dict):
        return NumberField(
            spec.get("name", "field"),
            spec["min_poly"],
            spec["integral_basis"],
            spec.get("conjugation", "auto"),
            irreducible_certified=bool(spec.get("irreducible_certified", False)),
        )
    raise ValueError("field spec must be a preset name or a description dict")
