from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from sopq.rootsys import AlgebraSpec, InputError
from sopq.signatures import (
    Signature,
    conjugate_labels,
    dynkin_to_n,
    ell_labels,
    fmt_q,
    n_to_dynkin,
    parse_q,
    weight_of_signature,
)

labels = st.lists(st.integers(1, 9), min_size=2, max_size=6)


@given(labels, st.sampled_from(["odd", "even"]))
def test_dynkin_n_roundtrip(m, parity):
    n = dynkin_to_n(m, parity)
    assert n_to_dynkin(n, parity) == tuple(Fraction(x) for x in m)


@given(labels)
def test_conjugation_is_involution(m):
    assert conjugate_labels(conjugate_labels(m)) == tuple(m)


def test_conjugation_odd_rejected():
    try:
        conjugate_labels((1, 2), "odd")
    except InputError:
        pass
    else:
        raise AssertionError


def test_n_forms():
    assert dynkin_to_n((1, 1, 1), "odd") == (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2))
    assert dynkin_to_n((1, 1, 1), "even") == (0, 1, 2)
    assert dynkin_to_n((3, 1), "even") == (1, 2)


def test_ell_labels_start_at_zero():
    spec = AlgebraSpec(5, 2)
    assert ell_labels(spec, (1, 1, 1)) == (0, 0, 0)


def test_signature_text_and_d():
    spec = AlgebraSpec(3, 2)
    sig = Signature(spec, (3,), Fraction(-1, 2))
    assert sig.text() == "[3 ; -1/2]"
    assert sig.d == 1
    assert sig.is_strict
    assert weight_of_signature(sig) == (Fraction(1, 2), Fraction(3, 2))


def test_signature_equality_ignores_eps():
    spec = AlgebraSpec(4, 2)
    a = Signature(spec, (1, 1), 0, "-")
    b = Signature(spec, (1, 1), 0, "+")
    assert a == b


def test_fmt_parse():
    assert fmt_q(Fraction(-3, 2)) == "-3/2" and fmt_q(4) == "4"
    assert parse_q(" 3/2") == Fraction(3, 2)
