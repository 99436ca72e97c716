"""Distinguished representations for given (p, q) and Dynkin labels:
finite-dimensional content, discrete series and their limits, first
reduction points, unitary points below them, minimal irreps and the
singleton-type points of h = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .multiplets import (
    Multiplet,
    main_multiplet,
    physical_pair,
    special_reduced,
)
from .rootsys import AlgebraSpec, InputError, coroot_pairing, frac, positive_roots, rho
from .signatures import ERNode, labels_to_n


@dataclass
class ReportEntry:
    name: str
    node: ERNode
    multiplet: str
    nu: int | None = None
    holomorphic: bool | None = None
    cutting_ops: tuple = ()  # (root, degree) pairs; degree None for a KS operator
    ks_condition: bool | None = None
    note: str = ""

    @property
    def d(self) -> Fraction:
        return self.node.d


@dataclass
class ClassificationReport:
    spec: AlgebraSpec
    labels: tuple
    finite_dim: ReportEntry
    dimension: int
    discrete_series: list = field(default_factory=list)
    limits: list = field(default_factory=list)
    frp: list = field(default_factory=list)
    below_frp: list = field(default_factory=list)
    minimal: list = field(default_factory=list)
    singletons: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def sections(self):
        yield "finite-dim", [self.finite_dim]
        yield "discrete-series", self.discrete_series
        yield "limit", self.limits
        yield "frp", self.frp
        yield "below-frp", self.below_frp
        yield "minimal", self.minimal
        yield "singleton", self.singletons


def weyl_dimension(spec: AlgebraSpec, m) -> int:
    """Dimension of the so(p+q, C) irrep with highest weight sum (m_i - 1) omega_i."""
    m = [frac(x) for x in m]
    if any(x.denominator != 1 or x < 1 for x in m):
        raise InputError(f"labels {m} must be positive integers")
    shifted = tuple(reversed(labels_to_n(spec, m)))  # lambda + rho
    r = rho(spec)
    num = den = Fraction(1)
    for a in positive_roots(spec):
        num *= coroot_pairing(shifted, a)
        den *= coroot_pairing(r, a)
    dim = num / den
    assert dim.denominator == 1
    return int(dim)


def _minimal_entry(name: str, mult: Multiplet, node: ERNode) -> ReportEntry:
    ops = tuple((a.root, a.degree) for a in mult.outgoing(node.id))
    ks = [a for a in mult.knapp_stein if a.src == node.id]
    live = any(not a.degenerate for a in ks)
    if live:
        ops += (("G^+", None),)
    return ReportEntry(name, node, mult.kind, cutting_ops=ops, ks_condition=live)


def classify(spec: AlgebraSpec, m, nu_range: int = 5) -> ClassificationReport:
    h = spec.h
    if nu_range < 1:
        raise InputError("nu_range must be at least 1")
    labels = tuple(frac(x) for x in m)
    main = main_multiplet(spec, labels)  # validates the main regime
    M = labels[:h]
    fd = ReportEntry("chi^-_1", main.at(1, "-"), main.kind)
    report = ClassificationReport(spec, labels, fd, weyl_dimension(spec, labels))
    if all(x == 1 for x in labels):
        report.notes.append("trivial one-dimensional representation")

    holo = spec.p > spec.q == 2
    if spec.odd or (spec.p * spec.q) % 2 == 0:
        for nu in range(1, nu_range + 1):
            mult = main_multiplet(spec, M + (nu,))
            report.discrete_series.append(
                ReportEntry("chi^+_1", mult.at(1, "+"), mult.kind, nu=nu, holomorphic=holo)
            )
    else:
        report.notes.append("pq odd: chi^+_1 carries no discrete series")
    mult, _, plus = physical_pair(spec, 1, M)
    report.limits.append(ReportEntry("_r chi^+_1", plus, mult.kind, nu=0, holomorphic=holo))

    if spec.odd:
        _odd_points(spec, M, nu_range, report)
    else:
        _even_points(spec, M, report)
    return report


def _odd_points(spec, M, nu_range, report):
    h = spec.h
    rest = M[1:]
    if M[0] >= 3:
        mult = main_multiplet(spec, (M[0] - 2, 1) + rest)
        report.frp.append(ReportEntry(f"chi^+_{h + 1}", mult.at(h + 1, "+"), mult.kind))
    mult, lo, _ = physical_pair(spec, h, (1,) + rest)
    report.frp.append(ReportEntry(f"_r chi^-_{h}", lo, mult.kind, note="m_1 = 1"))
    mult, lo, _ = physical_pair(spec, h + 1, (1,) + rest)
    report.frp.append(ReportEntry(f"_r chi_{h + 1}", lo, mult.kind, note="m_1 = 2"))

    ones = (1,) * h
    for j in range(1, h):
        mult, lo, _ = physical_pair(spec, j, ones)
        report.below_frp.append(ReportEntry(f"_r chi^-_{j}", lo, mult.kind))
    if h >= 2:
        full = (1, Fraction(1, 2), Fraction(2 * M[1] - 1, 2)) + M[2:]
        mult = special_reduced(spec, h, 1, 2 * M[1] - 1, full)
    else:
        mult = special_reduced(spec, 1, 1, None, (1, Fraction(1, 2)))
    report.below_frp.append(ReportEntry(f"_s chi^-_{h}", mult.at(h, "-"), mult.kind))
    for k in range(1, nu_range + 1):
        for first in (2, 1):
            full = (first, Fraction(2 * k - 1, 2)) + rest
            mult = special_reduced(spec, h + 1, 2 * k - 1, None, full)
            report.below_frp.append(
                ReportEntry(f"_s chi^-_{h + 1}", mult.at(h + 1, "-"), mult.kind, nu=k)
            )

    for j in range(1, h + 2):
        mult, lo, _ = physical_pair(spec, j, ones)
        name = f"_r chi_{j}" if j == h + 1 else f"_r chi^-_{j}"
        report.minimal.append(_minimal_entry(name, mult, lo))
    for j in range(1, h + 2):
        if j == 1:
            mult = special_reduced(spec, 1, 1, None, None)
        elif j <= h:
            mult = special_reduced(spec, j, 1, 1, None)
        else:
            mult = special_reduced(spec, h + 1, 1, None, None)
        entry = _minimal_entry(f"_s chi^-_{j}", mult, mult.at(j, "-"))
        report.minimal.append(entry)
        if h == 1:
            report.singletons.append(
                ReportEntry(entry.name, entry.node, mult.kind, cutting_ops=entry.cutting_ops,
                            ks_condition=entry.ks_condition, note="h=1 singleton-type")
            )


def _even_points(spec, M, report):
    h = spec.h
    tail = M[2:]
    if M[0] >= 2 and M[1] >= 2:
        mult = main_multiplet(spec, (M[1] - 1, M[0] - 1, 1) + tail)
        report.frp.append(ReportEntry(f"chi^+_{h}", mult.at(h, "+"), mult.kind))
    if M[0] >= 3:
        mult = main_multiplet(spec, (1, M[0] - 2, 1) + tail)
        report.frp.append(ReportEntry(f"chi^-_{h + 1}", mult.at(h + 1, "-"), mult.kind, note="m_2 = 1"))
    if M[1] >= 3:
        mult = main_multiplet(spec, (M[1] - 2, 1, 1) + tail)
        report.frp.append(ReportEntry(f"chi^+_{h + 1}", mult.at(h + 1, "+"), mult.kind, note="m_1 = 1"))
    for j, note in ((h - 1, "(m_1,m_2) = (1,1)"), (h, "(2,1)"), (h + 1, "(1,2)")):
        mult, lo, _ = physical_pair(spec, j, (1, 1) + tail)
        report.frp.append(ReportEntry(f"_r chi^-_{j}", lo, mult.kind, note=note))

    ones = (1,) * h
    for j in range(1, h - 1):
        mult, lo, _ = physical_pair(spec, j, ones)
        report.below_frp.append(ReportEntry(f"_r chi^-_{j}", lo, mult.kind))
    for j in range(1, h + 2):
        mult, lo, _ = physical_pair(spec, j, ones)
        report.minimal.append(_minimal_entry(f"_r chi^-_{j}", mult, lo))
