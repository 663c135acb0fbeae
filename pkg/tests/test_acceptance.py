"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Every tolerance is exact (integer or rational equality); the only
quantitative allowances are the stated wall-clock budgets.
"""

import random
import time
from collections import Counter
from fractions import Fraction
from math import lcm

from rootfield.classify import classify_rank, survivors, verify_degree_window
from rootfield.fieldops import FieldOperator, recognize
from rootfield.numberfield import PRESET_NAMES, make_field
from rootfield.realizations import (
    REALIZATION_LABELS,
    biquadratic_embedding,
    build_realization,
    fixed_space_obstruction,
)
from rootfield.rootsystems import RootSystemType, standard_weyl_group
from rootfield.weyldata import nu2_lower_bound, nu_p, weyl_order


def _report(num: int, label: str, check) -> None:
    try:
        check()
    except BaseException:
        print(f"ACCEPTANCE {num} ({label}): FAIL")
        raise
    print(f"ACCEPTANCE {num} ({label}): PASS")


def test_criterion_1_realization_certificates():
    def check():
        start = time.perf_counter()
        certs = {label: build_realization(label, certify=True) for label in REALIZATION_LABELS}
        elapsed = time.perf_counter() - start
        g2 = certs["G2"]
        assert len(g2.roots) == 12
        assert Counter(r.norm() for r in g2.roots) == {1: 6, 3: 6}
        assert len(certs["BC2"].roots) == 12
        for label, cert in certs.items():
            field = cert.field
            for root, op in cert.reflections:
                assert op.aut == field.conjugation_index
                assert op.multiplier == -(root / field.conjugate(root))
                assert recognize(op.matrix(), field) == op
        assert elapsed < 1.0, f"took {elapsed:.2f}s"

    _report(1, "rank-1/2 certification", check)


def test_criterion_2_order_table():
    def check():
        start = time.perf_counter()
        labels = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "A5", "B5", "D5"]
        for label in labels:
            t = RootSystemType.of(label)
            grp = standard_weyl_group(t)
            assert grp.order == weyl_order(t), label
            if label == "F4":
                assert grp.order == 1152
        for label, exp in (("A2", 6), ("B2", 4), ("G2", 6)):
            assert standard_weyl_group(RootSystemType.of(label)).exponent == exp
        elapsed = time.perf_counter() - start
        assert elapsed < 30.0, f"took {elapsed:.2f}s"

    _report(2, "order table", check)


def test_criterion_3_valuation_table():
    def check():
        nu2_a = [1, 1, 3, 3, 4, 4, 7, 7, 8, 8, 10, 10, 11, 11, 15, 15]
        nu3_a = [0, 1, 1, 1, 2, 2, 2, 4, 4, 4, 5, 5, 5, 6, 6, 6]
        nu2_bc = [3, 4, 7, 8, 10, 11, 15, 16, 18, 19, 22, 23, 25, 26, 31]
        nu3_bc = [0, 1, 1, 1, 2, 2, 2, 4, 4, 4, 5, 5, 5, 6, 6]
        nu2_d = [6, 7, 9, 10, 14, 15, 17, 18, 21, 22, 24, 25, 30]
        nu3_d = [1, 1, 2, 2, 2, 4, 4, 4, 5, 5, 5, 6, 6]
        checked = 0
        for rank, v2, v3 in zip(range(1, 17), nu2_a, nu3_a):
            t = RootSystemType.from_components([("A", rank)])
            assert (nu_p(t, 2), nu_p(t, 3)) == (v2, v3)
            checked += 2
        for rank, v2, v3 in zip(range(2, 17), nu2_bc, nu3_bc):
            for fam in ("B", "C") if rank >= 3 else ("B",):
                t = RootSystemType.from_components([(fam, rank)])
                assert (nu_p(t, 2), nu_p(t, 3)) == (v2, v3)
                checked += 2
        for rank, v2, v3 in zip(range(4, 17), nu2_d, nu3_d):
            t = RootSystemType.from_components([("D", rank)])
            assert (nu_p(t, 2), nu_p(t, 3)) == (v2, v3)
            checked += 2
        for label, v2, v3 in (("E6", 7, 4), ("E7", 10, 4), ("E8", 14, 5), ("F4", 7, 2), ("G2", 2, 1)):
            t = RootSystemType.of(label)
            assert (nu_p(t, 2), nu_p(t, 3)) == (v2, v3)
            checked += 2
        assert checked >= 90

    _report(3, "valuation table", check)


def test_criterion_4_nu2_bound_exhaustive():
    def check():
        from rootfield.classify import enumerate_types

        minimum_at_6 = None
        for rank in range(1, 9):
            for t in enumerate_types(rank):
                v2 = nu_p(t, 2)
                assert v2 >= nu2_lower_bound(rank), str(t)
                if rank == 6 and (minimum_at_6 is None or v2 < minimum_at_6[0]):
                    minimum_at_6 = (v2, str(t))
        assert nu2_lower_bound(6) == 3
        assert nu_p(RootSystemType.of("A2", "A2", "A2"), 2) == 3
        assert minimum_at_6[0] == 3

    _report(4, "two-adic lower bound", check)


def test_criterion_5_classification():
    def check():
        start = time.perf_counter()
        assert verify_degree_window() == [1, 2, 4, 6, 8, 16]
        expected = {
            1: ["A1"],
            2: ["2A1", "A2", "B2", "G2"],
            3: [],
            4: ["2A1+A2", "A2+B2"],
            5: [],
            6: [],
            7: [],
            8: [],
            16: [],
        }
        for n, expect in expected.items():
            reports = classify_rank(n)
            assert [str(t) for t in survivors(reports)] == expect, n
            assert all(r.verdict != "INCOMPLETE" for r in reports), n
            if n == 4:
                by_name = {str(r.rst): r for r in reports}
                assert by_name["A4"].eliminating_filter == "cyclic-normal"
                assert by_name["A1+A3"].eliminating_filter == "max-element-order"
                assert "6" in by_name["A1+A3"].witness
                for name in ("A1+B3", "A1+C3", "2A1+B2", "4A1", "2A1+G2", "B2+G2"):
                    assert by_name[name].eliminating_filter == "orthogonal-a1"
            if n == 6:
                by_name = {str(r.rst): r for r in reports}
                assert by_name["3A2"].eliminating_filter == "exponent"
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, f"took {elapsed:.2f}s"

    _report(5, "degree classification", check)


def test_criterion_6_embedding_orders():
    def check():
        expectations = {
            "A2+B2": (48, ("A2",), ("B2",)),
            "A2+2A1": (24, ("A2",), ("A1", "A1")),
        }
        for pair, (order, f1, f2) in expectations.items():
            emb = biquadratic_embedding(pair)
            assert emb.group.order == order
            g1 = standard_weyl_group(RootSystemType.of(*f1))
            g2 = standard_weyl_group(RootSystemType.of(*f2))
            abstract = Counter(lcm(a, b) for a in g1.element_orders for b in g2.element_orders)
            assert Counter(op.order() for op in emb.operators) == abstract

    _report(6, "degree-4 embeddings", check)


def test_criterion_7_fixed_space_obstruction():
    def check():
        for pair in ("A2+B2", "A2+2A1"):
            rep = fixed_space_obstruction(pair)
            assert rep.element_order == 3
            assert rep.aut_is_identity
            assert rep.fixed_dimension == 0

    _report(7, "fixed-space obstruction", check)


def test_criterion_8_operator_order_examples():
    def check():
        k = make_field("sqrt2")
        a = k.element([1, 1])
        op = FieldOperator(a, 1)
        assert op.order() == 4
        assert k.is_root_of_unity(a) is None
        g = make_field("gaussian")
        b = g.element([Fraction(3, 5), Fraction(4, 5)])
        op2 = FieldOperator(b, g.conjugation_index)
        assert op2.order() == 2
        assert g.is_root_of_unity(b) is None

    _report(8, "finite order with infinite multiplier", check)


def test_criterion_9_property_suites():
    def check():
        failures = 0
        for name in PRESET_NAMES:
            field = make_field(name)
            rng = random.Random(f"acceptance-{name}")
            ident = FieldOperator.identity(field)
            for _ in range(1000):
                ops = []
                for _ in range(3):
                    while True:
                        el = field.element(
                            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(field.degree)]
                        )
                        if not el.is_zero():
                            break
                    ops.append(FieldOperator(el, rng.randrange(len(field.automorphisms))))
                u, v, w = ops
                if (u * v) * w != u * (v * w):
                    failures += 1
                if (u * v).multiplier != u.multiplier * field.apply_aut(u.aut, v.multiplier):
                    failures += 1
                if (u * v).matrix() != u.matrix() @ v.matrix():
                    failures += 1
                if u * u.inverse() != ident:
                    failures += 1
                g = FieldOperator(field.one(), v.aut)
                if g * FieldOperator(u.multiplier, 0) * g.inverse() != FieldOperator(
                    field.apply_aut(v.aut, u.multiplier), 0
                ):
                    failures += 1
                if recognize(u.matrix(), field) != u:
                    failures += 1
        # trace-form preservation for the finite-order operators the artifact produces
        for name in ("eisenstein", "gaussian", "biquadratic"):
            field = make_field(name)
            gram = field.trace_form.gram
            basis_change = field.basis_matrix.transpose()
            to_integral = basis_change.inverse()
            gen, order = field.roots_of_unity()
            for d in range(order):
                for aut in range(len(field.automorphisms)):
                    op = FieldOperator(gen**d, aut)
                    m = to_integral @ op.matrix() @ basis_change
                    if m.transpose() @ gram @ m != gram:
                        failures += 1
        for label in REALIZATION_LABELS:
            cert = build_realization(label)
            field = cert.field
            gram = field.trace_form.gram
            basis_change = field.basis_matrix.transpose()
            to_integral = basis_change.inverse()
            for _, op in cert.reflections:
                m = to_integral @ op.matrix() @ basis_change
                if m.transpose() @ gram @ m != gram:
                    failures += 1
        assert failures == 0

    _report(9, "operator law property suites", check)
