"""Signatures of elementary representations: n-labels, Dynkin labels,
conformal weight and the map to the weight Lambda + rho."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .rootsys import AlgebraSpec, InputError, Weight, frac

BRANCHES = ("-", "+", "0")


def fmt_q(x) -> str:
    x = frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_q(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def dynkin_to_n(m, parity: str) -> tuple:
    """Dynkin labels -> n-labels for a B-type (odd) or D-type (even) chain.

    odd:  n_1 = m_1/2,            n_j = n_{j-1} + m_j
    even: n_1 = (m_1 - m_2)/2,    n_2 = (m_1 + m_2)/2,  n_j = n_{j-1} + m_j
    """
    m = [frac(x) for x in m]
    if not m:
        return ()
    if parity == "odd":
        n = [m[0] / 2]
        start = 1
    else:
        if len(m) < 2:
            raise InputError("even parity needs at least two labels")
        n = [(m[0] - m[1]) / 2, (m[0] + m[1]) / 2]
        start = 2
    for x in m[start:]:
        n.append(n[-1] + x)
    return tuple(n)


def n_to_dynkin(n, parity: str) -> tuple:
    n = [frac(x) for x in n]
    if not n:
        return ()
    if parity == "odd":
        m = [2 * n[0]]
    else:
        m = [n[0] + n[1], n[1] - n[0]]
    m.extend(n[j] - n[j - 1] for j in range(len(m), len(n)))
    return tuple(m)


def labels_to_n(spec: AlgebraSpec, m) -> tuple:
    if len(m) != spec.h + 1:
        raise InputError(f"{spec} needs {spec.h + 1} Dynkin labels, got {len(m)}")
    return dynkin_to_n(m, spec.parity)


def n_to_labels(spec: AlgebraSpec, n) -> tuple:
    if len(n) != spec.h + 1:
        raise InputError(f"{spec} needs {spec.h + 1} n-labels, got {len(n)}")
    return n_to_dynkin(n, spec.parity)


def conjugate_labels(m, parity: str = "even") -> tuple:
    """Swap the first two entries (the D-type fork)."""
    if parity != "even":
        raise InputError("label conjugation is defined for p+q even only")
    m = tuple(m)
    if len(m) < 2:
        raise InputError("conjugation needs at least two labels")
    return (m[1], m[0]) + m[2:]


def ell_labels(spec: AlgebraSpec, m) -> tuple:
    """l_k = n_k - k + 1/2 (odd parity)."""
    n = labels_to_n(spec, m)
    return tuple(nk - k + Fraction(1, 2) for k, nk in enumerate(n, start=1))


def conformal_weight(spec: AlgebraSpec, c) -> Fraction:
    return frac(c) + Fraction(spec.N - 2, 2)


@dataclass(frozen=True)
class Signature:
    """[m_1, ..., m_h ; c] with the M labels in Dynkin form.

    For p+q even the labels of the + branch are stored already conjugated;
    ``eps`` only records the branch and does not take part in equality.
    """

    spec: AlgebraSpec = field(compare=False)
    mlabels: tuple
    c: Fraction
    eps: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "mlabels", tuple(frac(x) for x in self.mlabels))
        object.__setattr__(self, "c", frac(self.c))
        if len(self.mlabels) != self.spec.h:
            raise InputError(
                f"{self.spec}: M carries {self.spec.h} labels, got {len(self.mlabels)}"
            )

    @property
    def n(self) -> tuple:
        return dynkin_to_n(self.mlabels, self.spec.parity)

    @property
    def d(self) -> Fraction:
        return conformal_weight(self.spec, self.c)

    @property
    def is_strict(self) -> bool:
        """True when the main-multiplet constraints on the n-labels hold."""
        n = self.n
        integral = all((2 * x).denominator == 1 and (x - n[0]).denominator == 1 for x in n)
        if self.spec.odd:
            ordered = 0 < n[0] and all(a < b for a, b in zip(n, n[1:]))
        else:
            ordered = abs(n[0]) < n[1] and all(a < b for a, b in zip(n[1:], n[2:]))
        return integral and ordered and (2 * self.c).denominator == 1

    def text(self) -> str:
        return "[" + ",".join(fmt_q(x) for x in self.mlabels) + " ; " + fmt_q(self.c) + "]"

    def __str__(self):
        return self.text()


@dataclass(frozen=True)
class ERNode:
    """One elementary representation placed in a multiplet.

    ``members`` lists the (k, branch) slots that coincide in this node;
    ``position`` is the first of them.
    """

    id: str
    signature: Signature
    members: tuple
    tags: frozenset = frozenset()

    @property
    def position(self) -> tuple:
        return self.members[0]

    @property
    def c(self) -> Fraction:
        return self.signature.c

    @property
    def d(self) -> Fraction:
        return self.signature.d

    @property
    def spec(self) -> AlgebraSpec:
        return self.signature.spec

    def with_tags(self, *tags) -> "ERNode":
        return ERNode(self.id, self.signature, self.members, self.tags | frozenset(tags))


def weight_of_signature(sig: Signature) -> Weight:
    """Lambda + rho = (-c, n_h, ..., n_1) in the epsilon basis."""
    return (-sig.c,) + tuple(reversed(sig.n))


def weight_of_node(node: ERNode) -> Weight:
    return weight_of_signature(node.signature)
