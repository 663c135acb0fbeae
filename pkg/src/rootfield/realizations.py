"""Certified root-system constructions inside specific number fields.

Each construction places a root set inside the ring of integers of a field,
verifies the root-system axioms under the trace form, recognizes the Dynkin
type, and witnesses every reflection as a multiplier-automorphism operator of
the field.  The rank-4 embeddings combine the quadratic constructions inside
the degree-4 field containing both, and the fixed-space obstruction shows why
those embeddings cannot come from root sets in the degree-4 field itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import Mat, QuadForm, Vector, enumerate_level_set, vec
from .fieldops import FieldOperator, generate_operators, recognize
from .numberfield import FieldElement, NumberField, make_field
from .rootsystems import (
    MatrixGroup,
    RootSet,
    RootSystemType,
    classify_type,
    extract_base,
    reflection_matrix,
    verify_root_system,
)

REALIZATION_LABELS = (
    "A1",
    "A1'",
    "A2",
    "A2-alt",
    "G2",
    "2A1",
    "2A1-alt",
    "B2",
    "BC2",
    "2A1'",
    "A1+A1'",
)

_LABEL_ALIASES = {"A1p": "A1'", "2A1p": "2A1'", "A1+A1p": "A1+A1'"}

_CONSTRUCTIONS: dict[str, tuple[str, tuple[int, ...], tuple[tuple[int, ...], ...], tuple[str, ...]]] = {
    # label: (field, norm levels, extra integral points, type components)
    "A1": ("rationals", (1,), (), ("A1",)),
    "A1'": ("rationals", (1,), ((2,), (-2,)), ("A1'",)),
    "A2": ("eisenstein", (1,), (), ("A2",)),
    "A2-alt": ("eisenstein", (3,), (), ("A2",)),
    "G2": ("eisenstein", (1, 3), (), ("G2",)),
    "2A1": ("gaussian", (1,), (), ("A1", "A1")),
    "2A1-alt": ("gaussian", (2,), (), ("A1", "A1")),
    "B2": ("gaussian", (1, 2), (), ("B2",)),
    "BC2": ("gaussian", (1, 2, 4), (), ("BC2",)),
    "2A1'": ("gaussian", (1, 4), (), ("A1'", "A1'")),
    "A1+A1'": ("gaussian", (1,), ((2, 0), (-2, 0)), ("A1", "A1'")),
}


def norm_level_set(field: NumberField, d: int) -> list[FieldElement]:
    """All integral elements of norm d in an imaginary quadratic field.

    The trace form of such a field is twice the norm form, so the level set of
    the trace form at 2d enumerates exactly the integral points of norm d.
    """
    if d < 0:
        raise ValueError("norm level must be nonnegative")
    if field.degree != 2 or field.conjugation_index == 0 or not field.trace_form_definite:
        raise ValueError(f"unsupported field class for {field.name}: need an imaginary quadratic field")
    points = enumerate_level_set(field.trace_form, 2 * d)
    out = [field.from_integral_coords(z) for z in points]
    assert all(x.norm() == d for x in out)
    return out


def reflection_operator(field: NumberField, a: FieldElement) -> FieldOperator:
    """The reflection with respect to a, as the operator mult(-a/conj(a)) then conjugation."""
    if a.is_zero():
        raise ValueError("cannot reflect in zero")
    mult = -(a / field.conjugate(a))
    return FieldOperator(mult, field.conjugation_index)


@dataclass
class RealizationCertificate:
    label: str
    field: NumberField
    claimed_type: RootSystemType
    verified_type: RootSystemType
    roots: tuple[FieldElement, ...]
    root_set: RootSet
    base: tuple[Vector, ...]
    reflections: tuple[tuple[FieldElement, FieldOperator], ...]
    certified: bool
    weyl_order: Optional[int] = None

    def serialize(self) -> str:
        lines = [
            f"label = {self.label}",
            f"field = {self.field.name}",
            f"degree = {self.field.degree}",
            f"type = {self.verified_type}",
            f"rank = {self.verified_type.rank}",
            f"reduced = {'yes' if self.verified_type.is_reduced() else 'no'}",
            "form = " + " ; ".join(_fmt(r) for r in self.root_set.form.gram.rows),
            f"root_count = {len(self.roots)}",
            "base = " + " ; ".join(_fmt(b) for b in self.base),
        ]
        for root, op in self.reflections:
            lines.append(
                f"root = {_fmt(root.integral_coords())} norm {root.norm()} "
                f"reflection {_fmt(op.multiplier.coords)} aut {op.aut}"
            )
        lines.append(f"weyl_check = {'full' if self.certified else 'generators'}")
        if self.weyl_order is not None:
            lines.append(f"weyl_order = {self.weyl_order}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "field": self.field.name,
            "degree": self.field.degree,
            "type": str(self.verified_type),
            "rank": self.verified_type.rank,
            "reduced": self.verified_type.is_reduced(),
            "root_count": len(self.roots),
            "roots": [list(map(str, r.integral_coords())) for r in self.roots],
            "base": [list(map(str, b)) for b in self.base],
            "reflections": [
                {
                    "root": list(map(str, root.integral_coords())),
                    "multiplier": list(map(str, op.multiplier.coords)),
                    "aut": op.aut,
                }
                for root, op in self.reflections
            ],
            "weyl_check": "full" if self.certified else "generators",
            "weyl_order": self.weyl_order,
        }


def _fmt(v) -> str:
    return " ".join(str(c) for c in v)


def realization_roots(label: str) -> tuple[NumberField, list[FieldElement]]:
    label = _LABEL_ALIASES.get(label, label)
    if label not in _CONSTRUCTIONS:
        raise KeyError(label)
    field_name, levels, extra, _ = _CONSTRUCTIONS[label]
    field = make_field(field_name)
    roots: list[FieldElement] = []
    for d in levels:
        roots.extend(norm_level_set(field, d) if field.degree == 2 else _rational_units(field, d))
    for z in extra:
        roots.append(field.from_integral_coords(z))
    roots.sort(key=lambda x: x.integral_coords())
    return field, roots


def _rational_units(field: NumberField, d: int) -> list[FieldElement]:
    assert field.degree == 1
    return [field.rational(-d), field.rational(d)]


def build_realization(label: str, certify: bool = False, cap: Optional[int] = None) -> RealizationCertificate:
    """Construct and fully check one catalogued realization.

    Any failure here is an internal inconsistency, not a user error, so
    failures raise AssertionError.
    """
    canonical = _LABEL_ALIASES.get(label, label)
    if canonical not in _CONSTRUCTIONS:
        raise KeyError(label)
    field, roots = realization_roots(canonical)
    claimed = RootSystemType.of(*_CONSTRUCTIONS[canonical][3])
    vectors = tuple(vec(x.integral_coords()) for x in roots)
    rs = RootSet(field.degree, field.trace_form, vectors)
    report = verify_root_system(rs)
    assert report.valid, f"{canonical}: {report.witnesses}"
    verified = classify_type(rs)
    assert verified == claimed, f"{canonical}: classified {verified}, expected {claimed}"
    base = extract_base(rs)

    reflections = []
    for x, v in zip(roots, vectors):
        op = reflection_operator(field, x)
        expected = _to_integral_coords(field, op.matrix())
        assert expected == reflection_matrix(rs.form, v), f"{canonical}: reflection mismatch at {x!r}"
        assert op.order() == 2
        reflections.append((x, op))

    weyl_order = None
    if certify:
        base_ops = [reflection_operator(field, field.from_integral_coords(b)) for b in base]
        ops = generate_operators(base_ops, cap)
        for op in ops:
            back = recognize(op.matrix(), field)
            assert back == op, f"{canonical}: group element not recognized"
        weyl_order = len(ops)

    return RealizationCertificate(
        label=canonical,
        field=field,
        claimed_type=claimed,
        verified_type=verified,
        roots=tuple(roots),
        root_set=rs,
        base=base,
        reflections=tuple(reflections),
        certified=certify,
        weyl_order=weyl_order,
    )


def _to_integral_coords(field: NumberField, m: Mat) -> Mat:
    """Rewrite a power-basis operator matrix in integral-basis coordinates."""
    b = field.basis_matrix.transpose()
    return b.inverse() @ m @ b


# -- embeddings into the degree-4 field ----------------------------------------------


EMBEDDING_PAIRS = ("A2+B2", "A2+2A1")


@dataclass
class EmbeddedGroup:
    pair: str
    field: NumberField
    operators: tuple[FieldOperator, ...]
    group: MatrixGroup
    expected_order: int


def _quadratic_embeddings(biq: NumberField):
    """Coordinate maps of the two quadratic fields into the degree-4 field.

    With z the defining root (a primitive 12th root of unity), the eisenstein
    generator corresponds to z^2 and the gaussian generator to z^3; the
    automorphism of each quadratic field extends to the automorphism of the
    big field fixing the other one.
    """
    eis = make_field("eisenstein")
    gau = make_field("gaussian")

    def embed_eis(x: FieldElement) -> FieldElement:
        a, b = x.coords
        return biq.element([a, 0, b, 0])

    def embed_gau(x: FieldElement) -> FieldElement:
        a, b = x.coords
        return biq.element([a, 0, 0, b])

    gen = biq.gen()
    z5 = gen**5
    z7 = gen**7
    aut_fixing_gau = next(
        i for i in range(len(biq.automorphisms)) if biq.apply_aut(i, gen) == z5
    )
    aut_fixing_eis = next(
        i for i in range(len(biq.automorphisms)) if biq.apply_aut(i, gen) == z7
    )
    return eis, gau, embed_eis, embed_gau, aut_fixing_gau, aut_fixing_eis


def biquadratic_embedding(pair: str, cap: Optional[int] = None) -> EmbeddedGroup:
    """Image of a product of two quadratic-field Weyl groups in the degree-4 field.

    The image is generated by the images of the reflections of each factor;
    its order must be exactly the product of the factor orders (the kernel of
    the combining map meets the product trivially).
    """
    if pair not in EMBEDDING_PAIRS:
        raise KeyError(pair)
    biq = make_field("biquadratic")
    eis, gau, embed_eis, embed_gau, aut_e, aut_g = _quadratic_embeddings(biq)

    cert1 = build_realization("A2")
    second_label = "B2" if pair == "A2+B2" else "2A1"
    cert2 = build_realization(second_label)

    gens: list[FieldOperator] = []
    for b in cert1.base:
        op = reflection_operator(eis, eis.from_integral_coords(b))
        gens.append(FieldOperator(embed_eis(op.multiplier), aut_e))
    for b in cert2.base:
        op = reflection_operator(gau, gau.from_integral_coords(b))
        gens.append(FieldOperator(embed_gau(op.multiplier), aut_g))

    expected = (cert1.weyl_order or _weyl_order_of(cert1, cap)) * _weyl_order_of(cert2, cap)
    ops = generate_operators(gens, cap)
    if len(ops) != expected:
        raise AssertionError(f"{pair}: embedded order {len(ops)}, expected {expected}")
    group = MatrixGroup(tuple(op.matrix() for op in ops), tuple(g.matrix() for g in gens))
    return EmbeddedGroup(pair, biq, tuple(ops), group, expected)


def _weyl_order_of(cert: RealizationCertificate, cap: Optional[int]) -> int:
    base_ops = [reflection_operator(cert.field, cert.field.from_integral_coords(b)) for b in cert.base]
    return len(generate_operators(base_ops, cap))


@dataclass
class ObstructionReport:
    pair: str
    element_order: int
    aut_is_identity: bool
    fixed_dimension: int

    def holds(self) -> bool:
        return self.element_order == 3 and self.aut_is_identity and self.fixed_dimension == 0


def fixed_space_obstruction(pair: str, cap: Optional[int] = None) -> ObstructionReport:
    """Why the embedded rank-4 groups are not Weyl groups of root sets in the field.

    An order-3 element of the image must be a pure multiplication (its
    automorphism part has order dividing both 3 and 4), and a multiplication
    by anything other than 1 fixes only 0 — but a root subsystem would span a
    2-dimensional fixed subspace.
    """
    emb = biquadratic_embedding(pair, cap)
    z = next(op for op in emb.operators if op.order() == 3)
    back = recognize(z.matrix(), emb.field)
    assert back == z
    dim, _ = z.fixed_space()
    return ObstructionReport(pair, 3, back.aut == 0, dim)
