import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import reference_main_list
from sopq.multiplets import (
    DIFFERENTIAL,
    IRREDUCIBLE,
    KNAPP_STEIN,
    RELEVANT,
    iter_multiplets,
    main_multiplet,
    physical_pair,
    reduced_multiplet,
    reduced_summary,
    singlet,
    special_reduced,
    validate_multiplet,
)
from sopq.rootsys import AlgebraSpec, InputError, parse_root

SPECS = [AlgebraSpec(N - 2, 2) for N in range(5, 12)]


def _as_list(mult):
    out = {}
    for n in mult.nodes:
        for slot in n.members:
            out[slot] = (n.signature.mlabels, n.c)
    return out


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_main_matches_reference_lists(spec):
    for m in [(1,) * (spec.h + 1), (2,) + (1,) * spec.h, tuple(range(1, spec.h + 2)), (3, 1, 2, 1, 2, 3)[: spec.h + 1]]:
        assert _as_list(main_multiplet(spec, m)) == reference_main_list(spec, m)


def test_so32_literal():
    mult = main_multiplet(AlgebraSpec(3, 2), (1, 1))
    assert [n.signature.text() for n in mult.nodes] == ["[1 ; -3/2]", "[1 ; 3/2]", "[3 ; -1/2]", "[3 ; 1/2]"]
    diff = [(a.src, a.dst, str(a.root), a.degree) for a in mult.differential]
    assert diff == [
        ("chi-1", "chi-2", "e1-e2", 1),
        ("chi+2", "chi+1", "e1+e2", 1),
        ("chi-2", "chi+2", "e1", 1),
    ]
    ks = [(a.name, a.degenerate) for a in mult.knapp_stein]
    assert ks == [("G^+_1", False), ("G^-_1", False), ("G^+_2", True), ("G^-_2", False)]


def test_so42_conjugated_branch():
    mult = main_multiplet(AlgebraSpec(4, 2), (1, 1, 1))
    assert mult.at(3, "-").signature.text() == "[3,1 ; 0]"
    assert mult.at(3, "+").signature.text() == "[1,3 ; 0]"


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_main_node_and_arrow_counts(spec):
    mult = main_multiplet(spec, (1,) * (spec.h + 1))
    assert len(mult.nodes) == 2 * (spec.h + 1)
    expected = 2 * spec.h + 1 if spec.odd else 2 * spec.h + 2
    assert len(mult.differential) == expected
    assert all(n.signature.is_strict for n in mult.nodes)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_reduced_coincidences(spec):
    # m_j = 0 makes two n-labels coincide (or n_1 vanish): two slot pairs merge,
    # except the odd m_1 = 0 case where only the c = 0 pair merges.
    h = spec.h
    for j in range(1, h + 2):
        mult = reduced_multiplet(spec, j, (2,) * h)
        expected = 2 * h + 1 if (spec.odd and j == 1) else 2 * h
        assert len(mult.nodes) == expected
        assert validate_multiplet(mult) == []
        assert 1 <= len(mult.relevant_nodes) <= 2


def _reference_rchi(spec, j, M):
    """Relevant pair of the odd reduced multiplets in the uniform notation."""
    h = spec.h
    M = [Fraction(x) for x in M]
    if j == h + 1:
        return (2 * M[0],) + tuple(M[1:]), Fraction(0)
    return tuple(M), (M[0] + 2 * sum(M[1 : h + 1 - j])) / 2


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([s for s in SPECS if s.odd]), st.data())
def test_relevant_pairs_odd(spec, data):
    M = data.draw(st.lists(st.integers(1, 4), min_size=spec.h, max_size=spec.h))
    for j in range(1, spec.h + 2):
        _, lo, hi = physical_pair(spec, j, M)
        labels, c = _reference_rchi(spec, j, M)
        assert lo.signature.mlabels == labels and hi.signature.mlabels == labels
        assert (lo.c, hi.c) == (-c, c)
        assert RELEVANT in lo.tags


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_reduced_summary_bounds(spec):
    h = spec.h
    for s in reduced_summary(spec, (1,) * h):
        j = s.j
        if spec.odd:
            if j <= h:
                assert (s.d_minus_max, s.d_plus_min) == (j, 2 * h + 1 - j)
            else:
                assert s.is_singlet and s.minus.d == Fraction(2 * h + 1, 2)
        else:
            if j <= h - 1:
                assert (s.d_minus_max, s.d_plus_min) == (j, 2 * h - j)
            else:
                assert (s.d_minus_max, s.d_plus_min) == (Fraction(2 * h - 1, 2), Fraction(2 * h + 1, 2))


def _arrow_set(mult):
    return {(a.src, a.dst, str(a.root), a.degree) for a in mult.relevant_arrows()}


def test_odd_reduced_relevant_arrows():
    spec = AlgebraSpec(7, 2)  # h = 3
    m = (2, 3, 4, 5)
    mult = reduced_multiplet(spec, 4, m[:3])  # m_{h+1} = 0
    assert _arrow_set(mult) == {
        ("chi-1=chi-2", "chi-3", "e1-e3", 4),
        ("chi+3", "chi+1=chi+2", "e1+e3", 4),
    }
    mult = reduced_multiplet(spec, 3, (2, 3, 5))  # m_h = 0
    assert _arrow_set(mult) == {
        ("chi-1", "chi-2=chi-3", "e1-e2", 5),
        ("chi-2=chi-3", "chi-4", "e1-e4", 3),
        ("chi+4", "chi+2=chi+3", "e1+e4", 3),
        ("chi+2=chi+3", "chi+1", "e1+e2", 5),
    }
    mult = reduced_multiplet(spec, 2, (2, 4, 5))  # m_2 = 0
    assert _arrow_set(mult) == {
        ("chi-2", "chi-3=chi-4", "e1-e3", 4),
        ("chi-3=chi-4", "chi+3=chi+4", "e1", 2),
        ("chi+3=chi+4", "chi+2", "e1+e3", 4),
    }
    mult = reduced_multiplet(spec, 1, (3, 4, 5))  # m_1 = 0
    # the source of the e1-e4 operator is chi^-_h; the BGG check fixes it
    assert _arrow_set(mult) == {
        ("chi-3", "chi-4=chi+4", "e1-e4", 3),
        ("chi-4=chi+4", "chi+3", "e1+e4", 3),
    }


def test_special_reduced_pairs():
    spec = AlgebraSpec(5, 2)  # h = 2
    for j, mu, mu2, c in [(1, 1, None, -2), (2, 1, 1, -1), (3, 1, None, Fraction(-1, 2))]:
        mult = special_reduced(spec, j, mu, mu2)
        lo, hi = mult.at(j, "-"), mult.at(j, "+")
        assert lo.c == c and hi.c == -c
        (arrow,) = mult.differential
        assert (arrow.src, arrow.dst, str(arrow.root), arrow.degree) == (lo.id, hi.id, "e1", 2 * abs(c))
        assert validate_multiplet(mult) == []


def test_special_singlet_is_irreducible():
    spec = AlgebraSpec(3, 2)
    mult = singlet(spec, (), mu=3)
    (node,) = mult.nodes
    assert node.signature.text() == "[3 ; 0]"
    assert mult.arrows == [] and IRREDUCIBLE in node.tags


def test_even_singlet():
    spec = AlgebraSpec(6, 2)
    mult = singlet(spec, (2, 3))
    (node,) = mult.relevant_nodes
    assert len(node.members) == 4
    assert node.signature.text() == "[2,2,3 ; 0]" and node.d == spec.h
    assert validate_multiplet(mult) == []


@pytest.mark.parametrize(
    "call",
    [
        lambda: main_multiplet(AlgebraSpec(3, 2), (1, 0)),
        lambda: main_multiplet(AlgebraSpec(3, 2), (1, 1, 1)),
        lambda: main_multiplet(AlgebraSpec(3, 2), (1, Fraction(1, 2))),
        lambda: reduced_multiplet(AlgebraSpec(5, 2), 2, (1, 1, 1)),
        lambda: reduced_multiplet(AlgebraSpec(5, 2), 4, (1, 1)),
        lambda: special_reduced(AlgebraSpec(4, 2), 1, 1),
        lambda: special_reduced(AlgebraSpec(5, 2), 2, 2, 1),
        lambda: special_reduced(AlgebraSpec(5, 2), 2, 1),
        lambda: singlet(AlgebraSpec(4, 2), (1, 1, 1)),
    ],
)
def test_rejected_inputs(call):
    with pytest.raises(InputError):
        call()


def test_validator_catches_wrong_degree_and_root():
    mult = main_multiplet(AlgebraSpec(5, 2), (1, 2, 3))
    a = mult.differential[0]
    broken = dataclasses.replace(mult, arrows=[dataclasses.replace(a, degree=a.degree + 1)])
    assert validate_multiplet(broken)
    broken = dataclasses.replace(mult, arrows=[dataclasses.replace(a, root=parse_root("e1+e2", 3))])
    assert validate_multiplet(broken)
    ks = mult.knapp_stein[0]
    broken = dataclasses.replace(mult, arrows=[dataclasses.replace(ks, dst=ks.src)])
    assert validate_multiplet(broken)


@pytest.mark.parametrize("spec", SPECS[:5], ids=str)
def test_shadow_pairs_and_arrow_kinds(spec):
    for mult in iter_multiplets(spec, 2):
        for n in mult.nodes:
            assert n.d == n.c + Fraction(spec.N - 2, 2)
        for a in mult.arrows:
            assert a.kind in (DIFFERENTIAL, KNAPP_STEIN)
            if a.kind == KNAPP_STEIN:
                assert mult.node(a.src).d + mult.node(a.dst).d == spec.N - 2
