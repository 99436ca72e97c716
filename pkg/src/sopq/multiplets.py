"""Multiplet graphs: main, reduced, special reduced and singlets.

Every multiplet is produced by one generator.  From the h+1 labels we
build n_1..n_{h+1}; the node chi^-/+_k has c = -/+ n_{h+2-k} and carries the
remaining h values as M labels (conjugated on the + branch when p+q is
even).  Degenerate labels make some nodes coincide; coinciding nodes are
merged and arrows whose degree drops to zero disappear.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .rootsys import AlgebraSpec, InputError, Root, coroot_pairing, frac, scale, sub
from .signatures import (
    ERNode,
    Signature,
    conjugate_labels,
    dynkin_to_n,
    n_to_dynkin,
    weight_of_node,
)

DIFFERENTIAL = "differential"
KNAPP_STEIN = "knapp-stein"

RELEVANT = "physically-relevant"
IRREDUCIBLE = "compactly-restricted-irreducible"


@dataclass(frozen=True)
class Arrow:
    src: str
    dst: str
    kind: str
    name: str
    root: Root | None = None
    degree: int | None = None
    degenerate: bool = False


@dataclass
class Multiplet:
    spec: AlgebraSpec
    kind: str
    nodes: list
    arrows: list
    note: str = ""

    def node(self, node_id: str) -> ERNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def at(self, k: int, branch: str) -> ERNode:
        for n in self.nodes:
            if (k, branch) in n.members:
                return n
        raise KeyError((k, branch))

    @property
    def differential(self) -> list:
        return [a for a in self.arrows if a.kind == DIFFERENTIAL]

    @property
    def knapp_stein(self) -> list:
        return [a for a in self.arrows if a.kind == KNAPP_STEIN]

    @property
    def relevant_nodes(self) -> list:
        return [n for n in self.nodes if RELEVANT in n.tags]

    def relevant_arrows(self) -> list:
        ids = {n.id for n in self.relevant_nodes}
        return [a for a in self.differential if a.src in ids or a.dst in ids]

    def outgoing(self, node_id: str) -> list:
        return [a for a in self.differential if a.src == node_id]


def _eps_root(spec: AlgebraSpec, sign: int, j: int | None) -> Root:
    v = [Fraction(0)] * spec.rank
    v[0] = Fraction(1)
    if j is not None:
        v[j - 1] += sign
    return Root(tuple(v))


def _check_labels(spec: AlgebraSpec, m, allow_zero_at=()):
    if len(m) != spec.h + 1:
        raise InputError(f"{spec} needs {spec.h + 1} Dynkin labels, got {len(m)}")
    out = []
    for i, x in enumerate(m, start=1):
        x = frac(x)
        if x.denominator != 1:
            raise InputError(f"label m_{i} = {x} must be an integer")
        if x < 1 and not (x == 0 and i in allow_zero_at):
            raise InputError(f"label m_{i} = {x} must be >= 1")
        out.append(x)
    return tuple(out)


def slot_signatures(spec: AlgebraSpec, labels) -> dict:
    """All 2(h+1) signatures chi^-/+_k keyed by (k, branch)."""
    h = spec.h
    n = dynkin_to_n(labels, spec.parity)
    sigs = {}
    for k in range(1, h + 2):
        idx = h + 1 - k  # position of n_{h+2-k}
        rest = n[:idx] + n[idx + 1 :]
        mlab = n_to_dynkin(rest, spec.parity)
        for branch, sign in (("-", -1), ("+", 1)):
            lab = mlab
            if not spec.odd and branch == "+":
                lab = conjugate_labels(mlab)
            eps = None if spec.odd else branch
            sigs[(k, branch)] = Signature(spec, lab, sign * n[idx], eps)
    return sigs


def arrow_plan(spec: AlgebraSpec, labels) -> list:
    """Differential arrows of the main multiplet as (src, dst, name, root, degree).

    Degrees are read off the labels; roots follow the position of the
    swapped n-label.  Neither is derived from the weights, so the BGG check
    in :func:`validate_multiplet` is an independent test.
    """
    h = spec.h
    m = [None] + [frac(x) for x in labels]
    plan = []
    for i in range(1, h + 1):
        plan.append(((i, "-"), (i + 1, "-"), f"d_{i}", _eps_root(spec, -1, i + 1), m[h + 2 - i]))
    for i in range(1, h):
        plan.append(((i + 1, "+"), (i, "+"), f"d'_{i}", _eps_root(spec, 1, i + 1), m[h + 2 - i]))
    if spec.odd:
        plan.append(((h + 1, "+"), (h, "+"), f"d'_{h}", _eps_root(spec, 1, h + 1), m[2]))
        plan.append(((h + 1, "-"), (h + 1, "+"), f"d_{h + 1}", _eps_root(spec, 0, None), m[1]))
    else:
        plan.append(((h + 1, "+"), (h, "+"), f"d_{h}", _eps_root(spec, -1, h + 1), m[2]))
        plan.append(((h, "-"), (h + 1, "+"), f"d'_{h}", _eps_root(spec, 1, h + 1), m[1]))
        plan.append(((h + 1, "-"), (h, "+"), f"d'_{h}", _eps_root(spec, 1, h + 1), m[1]))
    return plan


def _slot_id(key) -> str:
    k, b = key
    return f"chi{b}{k}"


def _assemble(spec, kind, sigs, plan, relevant=(), merge=False, note=""):
    h = spec.h
    order = [(k, b) for k in range(1, h + 2) for b in ("-", "+") if (k, b) in sigs]
    groups: dict = {}
    for key in order:
        tag = sigs[key] if merge else key
        groups.setdefault(tag, []).append(key)
    key_to_id = {}
    nodes = []
    relevant = set(relevant)
    for members in groups.values():
        node_id = "=".join(_slot_id(k) for k in members)
        tags = frozenset({RELEVANT}) if relevant & set(members) else frozenset()
        nodes.append(ERNode(node_id, sigs[members[0]], tuple(members), tags))
        for key in members:
            key_to_id[key] = node_id

    arrows = []
    seen = set()
    for src, dst, name, root, degree in plan:
        if src not in key_to_id or dst not in key_to_id or degree <= 0:
            continue
        a, b = key_to_id[src], key_to_id[dst]
        if a == b or (a, b, DIFFERENTIAL) in seen:
            continue
        seen.add((a, b, DIFFERENTIAL))
        if frac(degree).denominator != 1:
            raise InputError(f"arrow {name} would have non-integer degree {degree}")
        arrows.append(Arrow(a, b, DIFFERENTIAL, name, root, int(degree)))

    for k in range(1, h + 2):
        if (k, "-") not in key_to_id or (k, "+") not in key_to_id:
            continue
        if sigs[(k, "-")].c == 0:
            continue
        for name, src, dst in ((f"G^+_{k}", (k, "-"), (k, "+")), (f"G^-_{k}", (k, "+"), (k, "-"))):
            a, b = key_to_id[src], key_to_id[dst]
            if a == b or (a, b, KNAPP_STEIN) in seen:
                continue
            seen.add((a, b, KNAPP_STEIN))
            arrows.append(Arrow(a, b, KNAPP_STEIN, name, degenerate=(a, b, DIFFERENTIAL) in seen))
    return Multiplet(spec, kind, nodes, arrows, note)


def main_multiplet(spec: AlgebraSpec, m) -> Multiplet:
    labels = _check_labels(spec, m)
    return _assemble(spec, "main", slot_signatures(spec, labels), arrow_plan(spec, labels))


def _with_zero(spec: AlgebraSpec, j: int, m) -> tuple:
    h = spec.h
    if not 1 <= j <= h + 1:
        raise InputError(f"reduction index j={j} outside 1..{h + 1}")
    m = list(m)
    if len(m) == h:
        m.insert(j - 1, 0)
    elif len(m) == h + 1 and frac(m[j - 1]) != 0:
        raise InputError(f"reduced multiplet j={j} needs m_{j} = 0, got {m[j - 1]}")
    zeros = [i for i, x in enumerate(m, start=1) if frac(x) == 0]
    if len(zeros) > 1:
        raise InputError(f"more than one zero label: positions {zeros}")
    return _check_labels(spec, m, allow_zero_at=(j,))


def relevant_slots(spec: AlgebraSpec, j: int) -> tuple:
    """Slots of the physically relevant pair in the reduced multiplet m_j = 0."""
    h = spec.h
    if j >= 2:
        k = h + 2 - j
        return ((k, "-"), (k, "+"))
    if spec.odd:
        return ((h + 1, "-"), (h + 1, "+"))
    return ((h, "-"), (h, "+"))


def reduced_multiplet(spec: AlgebraSpec, j: int, m) -> Multiplet:
    """Reduced multiplet with m_j = 0 (``m`` has h+1 entries or omits m_j)."""
    labels = _with_zero(spec, j, m)
    return _assemble(
        spec,
        f"reduced({j})",
        slot_signatures(spec, labels),
        arrow_plan(spec, labels),
        relevant=relevant_slots(spec, j),
        merge=True,
    )


def special_positions(spec: AlgebraSpec, j: int) -> tuple:
    """1-based label positions replaced by mu/2 (and mu'/2) for _s chi_j."""
    h = spec.h
    if j == 1:
        return (h + 1,)
    if j == h + 1:
        return (2,)
    return (h - j + 2, h - j + 3)


def _odd_positive(x, what) -> int:
    if isinstance(x, bool) or frac(x).denominator != 1 or int(x) < 1 or int(x) % 2 == 0:
        raise InputError(f"{what} = {x} must be an odd positive integer")
    return int(x)


def special_reduced(spec: AlgebraSpec, j: int, mu, mu2=None, m=None) -> Multiplet:
    """Physically relevant pair of a special reduced multiplet (p+q odd).

    ``m`` has h+1 entries; the positions from :func:`special_positions` are
    overwritten with mu/2 (and mu'/2).  With j = h+1 and m_1 = 0 the pair
    collapses to a singlet.
    """
    if not spec.odd:
        raise InputError("special reduced multiplets exist only for p+q odd")
    h = spec.h
    if not 1 <= j <= h + 1:
        raise InputError(f"special index j={j} outside 1..{h + 1}")
    pos = special_positions(spec, j)
    mu = _odd_positive(mu, "mu")
    if len(pos) == 2:
        if mu2 is None:
            raise InputError(f"special j={j} needs both mu and mu'")
        mu2 = _odd_positive(mu2, "mu'")
    elif mu2 is not None:
        raise InputError(f"special j={j} takes a single mu")
    if m is None:
        m = [1] * (h + 1)
    m = [frac(x) for x in m]
    if len(m) != h + 1:
        raise InputError(f"{spec} needs {h + 1} Dynkin labels, got {len(m)}")
    for p, v in zip(pos, (mu, mu2)):
        m[p - 1] = Fraction(v, 2)
    for i, x in enumerate(m, start=1):
        if i in pos:
            continue
        if x.denominator != 1 or x < 0 or (x == 0 and not (i == 1 and j == h + 1)):
            raise InputError(f"label m_{i} = {x} must be a positive integer")

    sigs = slot_signatures(spec, m)
    pair = {key: sigs[key] for key in ((j, "-"), (j, "+"))}
    c = pair[(j, "-")].c
    plan = [((j, "-"), (j, "+"), "D_e1", _eps_root(spec, 0, None), 2 * abs(c))]
    label = f"special({j},{mu})" if mu2 is None else f"special({j},{mu},{mu2})"
    note = ""
    if c == 0:
        label = f"singlet({mu})"
        note = "no differential operators: the compactly restricted ER is irreducible"
    mult = _assemble(spec, label, pair, plan, relevant=pair.keys(), merge=True, note=note)
    if c == 0:
        mult.nodes = [n.with_tags(IRREDUCIBLE) for n in mult.nodes]
    return mult


def singlet(spec: AlgebraSpec, m, mu=None) -> Multiplet:
    """Singlets: p+q even, m_1 = m_2 = 0; p+q odd, the doubly reduced special case.

    ``m`` lists the remaining labels (h-1 of them) or all h+1 with the
    vanishing ones in place.
    """
    h = spec.h
    m = [frac(x) for x in m]
    if spec.odd:
        if mu is None:
            raise InputError("the odd singlet needs mu")
        if len(m) == h - 1:
            m = [Fraction(0), Fraction(1)] + m
        return special_reduced(spec, h + 1, mu, None, m)
    if mu is not None:
        raise InputError("the even singlet takes no mu")
    if len(m) == h - 1:
        m = [Fraction(0), Fraction(0)] + m
    if len(m) != h + 1:
        raise InputError(f"even singlet needs {h - 1} labels m_3..m_{h + 1}, got {len(m)}")
    if m[0] != 0 or m[1] != 0:
        raise InputError("even singlet needs m_1 = m_2 = 0")
    labels = (Fraction(0), Fraction(0)) + _check_labels(spec, [1, 1] + m[2:])[2:]
    mult = _assemble(
        spec,
        "singlet",
        slot_signatures(spec, labels),
        arrow_plan(spec, labels),
        relevant=((h, "-"),),
        merge=True,
    )
    return mult


def physical_pair(spec: AlgebraSpec, j: int, m) -> tuple:
    """The relevant pair _r chi_j for h relabelled labels ``m``.

    Returns (multiplet, minus node, plus node); for the c = 0 singlet the
    two nodes are the same object.
    """
    h = spec.h
    if len(m) != h:
        raise InputError(f"{spec}: the reduced pair takes {h} labels, got {len(m)}")
    if not 1 <= j <= h + 1:
        raise InputError(f"pair index j={j} outside 1..{h + 1}")
    zero = h + 2 - j if j <= h else 1
    mult = reduced_multiplet(spec, zero, m)
    minus_slot, plus_slot = relevant_slots(spec, zero)
    return mult, mult.at(*minus_slot), mult.at(*plus_slot)


@dataclass
class PairSummary:
    j: int
    zero_position: int
    minus: ERNode
    plus: ERNode
    d_plus_min: Fraction
    d_minus_max: Fraction

    @property
    def is_singlet(self) -> bool:
        return self.minus.id == self.plus.id


def reduced_summary(spec: AlgebraSpec, m) -> list:
    """Relevant pairs of all h+1 reduced multiplets with their d bounds.

    The bounds are the values at all-ones labels, where |c| is smallest.
    """
    h = spec.h
    out = []
    for j in range(1, h + 2):
        _, lo, hi = physical_pair(spec, j, m)
        _, lo1, hi1 = physical_pair(spec, j, [1] * h)
        out.append(PairSummary(j, h + 2 - j if j <= h else 1, lo, hi, hi1.d, lo1.d))
    return out


def validate_multiplet(mult: Multiplet) -> list:
    """BGG and shadow-pair checks; returns violations (empty when clean)."""
    out = []
    ids = {n.id: n for n in mult.nodes}
    for a in mult.arrows:
        if a.src not in ids or a.dst not in ids:
            out.append(f"{a.name}: undeclared endpoint {a.src}->{a.dst}")
            continue
        src, dst = ids[a.src], ids[a.dst]
        if a.kind == KNAPP_STEIN:
            if src.c != -dst.c:
                out.append(f"{a.name}: c({a.src}) = {src.c} is not -c({a.dst}) = {-dst.c}")
            continue
        if a.degree is None or a.degree < 1:
            out.append(f"{a.name}: degree {a.degree} < 1")
            continue
        if a.root is None or a.root.is_compact or not a.root.is_positive:
            out.append(f"{a.name}: root {a.root} is not a noncompact positive root")
            continue
        w = weight_of_node(src)
        pairing = coroot_pairing(w, a.root)
        if pairing != a.degree:
            out.append(f"{a.name}: (Lambda+rho, {a.root}^vee) = {pairing} != degree {a.degree}")
            continue
        if sub(w, scale(a.degree, a.root.coords)) != weight_of_node(dst):
            out.append(f"{a.name}: target weight is not Lambda - {a.degree}({a.root})")
    return out


def iter_multiplets(spec: AlgebraSpec, max_label: int):
    """Every main, reduced and special multiplet with labels in 1..max_label.

    Special multiplets take mu, mu' over the odd numbers below 2*max_label.
    """
    h = spec.h
    rng = range(1, max_label + 1)
    for m in itertools.product(rng, repeat=h + 1):
        yield main_multiplet(spec, m)
    for j in range(1, h + 2):
        for m in itertools.product(rng, repeat=h):
            yield reduced_multiplet(spec, j, m)
    if not spec.odd:
        for m in itertools.product(rng, repeat=h - 1):
            yield singlet(spec, m)
        return
    mus = range(1, 2 * max_label, 2)
    for j in range(1, h + 2):
        pos = special_positions(spec, j)
        for mu in itertools.product(mus, repeat=len(pos)):
            for rest in itertools.product(rng, repeat=h + 1 - len(pos)):
                m = list(rest)
                for p in pos:
                    m.insert(p - 1, 0)
                yield special_reduced(spec, j, mu[0], mu[1] if len(mu) == 2 else None, m)
    for mu in mus:
        for rest in itertools.product(rng, repeat=h - 1):
            yield singlet(spec, rest, mu)
