import pytest

from rootfield.classify import (
    DEGREE_CANDIDATES,
    EXPECTED_SURVIVORS,
    admissible_degrees,
    classify_candidate,
    classify_rank,
    enumerate_types,
    filter_exponent,
    filter_orthogonal_a1,
    filter_valuation,
    incomplete,
    survivors,
    verify_degree_window,
)
from rootfield.rootsystems import RootSystemType


def brute_force_types(rank: int) -> set:
    """Independent enumeration: partitions of the rank, then families per part."""

    def families(r):
        out = [("A", r)]
        if r == 2:
            out += [("B", 2), ("G", 2)]
        if r >= 3:
            out += [("B", r), ("C", r)]
        if r >= 4:
            out += [("D", r)]
        if r in (6, 7, 8):
            out += [("E", r)]
        if r == 4:
            out += [("F", 4)]
        return out

    def partitions(n, most):
        if n == 0:
            yield []
            return
        for part in range(min(n, most), 0, -1):
            for rest in partitions(n - part, part):
                yield [part] + rest

    out = set()

    def assign(parts, chosen):
        if not parts:
            out.add(RootSystemType.from_components(chosen))
            return
        for fam in families(parts[0]):
            assign(parts[1:], chosen + [fam])

    for p in partitions(rank, rank):
        assign(p, [])
    return out


@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5, 6])
def test_enumerate_types_matches_brute_force(rank):
    got = set(enumerate_types(rank))
    assert got == brute_force_types(rank)


def test_enumerate_rank_one_and_two():
    assert [str(t) for t in enumerate_types(1)] == ["A1"]
    assert {str(t) for t in enumerate_types(2)} == {"A2", "B2", "G2", "2A1"}


def test_enumerate_rank_four_count():
    # the exhaustive enumeration is the authority for this count
    types = enumerate_types(4)
    assert len(types) == len(brute_force_types(4)) == 18


def test_enumerate_nonreduced():
    got = {str(t) for t in enumerate_types(2, nonreduced=True)}
    assert got == {"A2", "B2", "G2", "2A1", "BC2", "2A1'", "A1+A1'"}


def test_enumerate_deterministic():
    assert enumerate_types(5) == enumerate_types(5)


def test_filter_valuation_odd_degree_kills_everything():
    for n in (3, 5, 7):
        for t in enumerate_types(n):
            assert filter_valuation(t, n).verdict == "eliminated"


def test_filter_valuation_examples():
    assert filter_valuation(RootSystemType.of("A2", "A2", "A2"), 6).verdict == "pass"
    out = filter_valuation(RootSystemType.of("B4"), 4)
    assert out.verdict == "eliminated" and "nu2" in out.witness


def test_filter_orthogonal_a1_examples():
    assert filter_orthogonal_a1(RootSystemType.of("A1", "A1", "A1", "A1"), 4).verdict == "eliminated"
    assert filter_orthogonal_a1(RootSystemType.of("B2", "G2"), 4).verdict == "eliminated"
    # not triggered when the three-adic valuation is large
    assert filter_orthogonal_a1(RootSystemType.of("A2", "A2", "A2"), 6).verdict == "pass"
    assert filter_orthogonal_a1(RootSystemType.of("A2", "A1", "A1"), 4).verdict == "pass"


def test_filter_exponent_examples():
    assert filter_exponent(RootSystemType.of("A2", "A2", "A2"), 6, 10**4).verdict == "eliminated"
    assert filter_exponent(RootSystemType.of("A2"), 2, 10**4).verdict == "pass"
    assert filter_exponent(RootSystemType.of("A1"), 1, 10**4).verdict == "pass"
    assert filter_exponent(RootSystemType.of("A16"), 16, 100).verdict == "abstain"


def test_survivors_match_published_classification():
    for n, expected in EXPECTED_SURVIVORS.items():
        reps = classify_rank(n)
        assert [str(t) for t in survivors(reps)] == sorted(expected), n
        assert incomplete(reps) == []


def test_empty_degrees():
    for n in (3, 5, 6, 7, 8):
        reps = classify_rank(n)
        assert survivors(reps) == []
        assert incomplete(reps) == []


def test_named_eliminations_at_degree_four():
    reps = {str(r.rst): r for r in classify_rank(4)}
    assert reps["A4"].eliminating_filter == "cyclic-normal"
    assert reps["A1+A3"].eliminating_filter == "max-element-order"
    assert "maximum element order is 6" in reps["A1+A3"].witness
    for name in ("A1+B3", "A1+C3", "2A1+B2", "4A1", "2A1+G2", "B2+G2"):
        assert reps[name].eliminating_filter == "orthogonal-a1", name


def test_exponent_kill_at_degree_six():
    reps = {str(r.rst): r for r in classify_rank(6)}
    r = reps["3A2"]
    assert r.eliminating_filter == "exponent"
    assert "216" in r.witness
    # everything else at degree six dies already at the valuation filter
    for name, rep in reps.items():
        if name != "3A2":
            assert rep.outcomes[0].verdict == "eliminated", name


def test_degree_eight_and_sixteen_split_by_filters():
    for n in (8, 16):
        for rep in classify_rank(n):
            v3 = rep.nu3
            if v3 <= 1:
                assert any(
                    o.name == "orthogonal-a1" and o.verdict == "eliminated" for o in rep.outcomes
                ), str(rep.rst)
            else:
                assert rep.outcomes[0].verdict == "eliminated", str(rep.rst)


def test_every_elimination_witness_recomputes():
    import re

    for n in (2, 4, 6):
        for rep in classify_rank(n):
            for o in rep.outcomes:
                if o.verdict != "eliminated":
                    continue
                if o.name == "valuation":
                    if "window" in o.witness:
                        v2, lo, hi = (
                            int(x)
                            for x in re.search(
                                r"= (\d+) outside the window \[(\d+), (\d+)\]", o.witness
                            ).groups()
                        )
                        assert not lo <= v2 <= hi
                    else:
                        vp, bound = (
                            int(x)
                            for x in re.search(r"= (\d+) exceeds .* = (\d+)", o.witness).groups()
                        )
                        assert vp > bound
                elif o.name == "orthogonal-a1":
                    m = int(re.search(r"contains (\d+)", o.witness).group(1))
                    assert n % 2 ** (m - 1) != 0
                elif o.name == "exponent":
                    w, n_times_e = (int(x) for x in re.findall(r"= (\d+)", o.witness))
                    assert n_times_e % w != 0


def test_filters_are_monotone():
    # a candidate eliminated by an early filter is never resurrected
    for n in (2, 4, 6):
        for rep in classify_rank(n):
            verdicts = [o.verdict for o in rep.outcomes]
            if "eliminated" in verdicts:
                assert rep.verdict == "ELIMINATED"


def test_survivors_have_construction_witnesses():
    # both directions: every survivor is backed by an explicit embedding
    from rootfield.realizations import biquadratic_embedding, build_realization
    from rootfield.weyldata import weyl_order

    realized = {
        "A1": lambda: build_realization("A1", certify=True).weyl_order,
        "A2": lambda: build_realization("A2", certify=True).weyl_order,
        "B2": lambda: build_realization("B2", certify=True).weyl_order,
        "G2": lambda: build_realization("G2", certify=True).weyl_order,
        "2A1": lambda: build_realization("2A1", certify=True).weyl_order,
        "2A1+A2": lambda: biquadratic_embedding("A2+2A1").group.order,
        "A2+B2": lambda: biquadratic_embedding("A2+B2").group.order,
    }
    for n, expected in EXPECTED_SURVIVORS.items():
        for t in survivors(classify_rank(n)):
            assert str(t) in realized
            assert realized[str(t)]() == weyl_order(t)


def test_nonreduced_classification_follows_reduced_twins():
    reps = classify_rank(2, nonreduced=True)
    surv = {str(t) for t in survivors(reps)}
    assert surv == {"A2", "B2", "G2", "2A1", "BC2", "2A1'", "A1+A1'"}


def test_degree_window():
    assert admissible_degrees(16) == list(DEGREE_CANDIDATES)
    assert verify_degree_window() == list(DEGREE_CANDIDATES)
    assert verify_degree_window(1 << 12) == list(DEGREE_CANDIDATES)


def test_classify_rejects_bad_degree():
    with pytest.raises(ValueError):
        classify_rank(0)


def test_candidate_report_shape():
    rep = classify_candidate(RootSystemType.of("A2"), 2)
    assert [o.name for o in rep.outcomes] == [
        "valuation",
        "orthogonal-a1",
        "exponent",
        "max-element-order",
        "cyclic-normal",
    ]
    assert rep.verdict == "SURVIVES"
    assert rep.order == 6 and rep.nu2 == 1 and rep.nu3 == 1 and rep.exponent == 6
