"""Exact root data for so(p+q, C) and the compact/noncompact split of the
maximal parabolic with M = so(p-1, q-1).

Weights are plain tuples of ``Fraction`` in the epsilon basis.  Roots are
:class:`Root` values so they can carry the compact/short flags.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

Weight = tuple  # tuple[Fraction, ...] in the epsilon basis


class InputError(ValueError):
    """Rejected input: names the violated constraint."""


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def as_weight(coords) -> Weight:
    return tuple(frac(c) for c in coords)


@dataclass(frozen=True)
class AlgebraSpec:
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise InputError("p and q must be integers")
        if self.q < 1 or self.p < self.q:
            raise InputError(f"so({self.p},{self.q}): need p >= q >= 1")
        if self.p + self.q <= 4:
            raise InputError(f"so({self.p},{self.q}): need p + q > 4")

    @property
    def N(self) -> int:
        return self.p + self.q

    @property
    def parity(self) -> str:
        return "odd" if self.N % 2 else "even"

    @property
    def odd(self) -> bool:
        return self.N % 2 == 1

    @property
    def h(self) -> int:
        return (self.N - 3) // 2 if self.odd else (self.N - 2) // 2

    @property
    def rank(self) -> int:
        return self.h + 1

    @property
    def dimN(self) -> int:
        return self.N - 2

    @property
    def cartan_type(self) -> str:
        return "B" if self.odd else "D"

    def __str__(self):
        return f"so({self.p},{self.q})"


def build_algebra(p: int, q: int) -> AlgebraSpec:
    return AlgebraSpec(p, q)


@dataclass(frozen=True)
class Root:
    coords: tuple

    @cached_property
    def norm2(self) -> Fraction:
        return sum((c * c for c in self.coords), Fraction(0))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_compact(self) -> bool:
        return self.coords[0] == 0

    @property
    def is_short(self) -> bool:
        return self.norm2 == 1

    @property
    def is_positive(self) -> bool:
        for c in self.coords:
            if c:
                return c > 0
        return False

    def coroot(self) -> Weight:
        return tuple(2 * c / self.norm2 for c in self.coords)

    def __neg__(self):
        return Root(tuple(-c for c in self.coords))

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}e{i}")
        return "".join(parts) or "0"


_TERM = re.compile(r"([+-]?)(\d*)e(\d+)")


def parse_root(text: str, rank: int) -> Root:
    """Parse ``e1-e3``, ``e1``, ``e1+e2`` style root text."""
    s = text.replace(" ", "")
    coords = [Fraction(0)] * rank
    pos = 0
    for mt in _TERM.finditer(s):
        if mt.start() != pos:
            break
        i = int(mt.group(3))
        if not 1 <= i <= rank:
            raise InputError(f"root {text!r}: index e{i} outside rank {rank}")
        mag = int(mt.group(2)) if mt.group(2) else 1
        coords[i - 1] += -mag if mt.group(1) == "-" else mag
        pos = mt.end()
    if pos != len(s) or not s:
        raise InputError(f"cannot parse root {text!r}")
    return Root(tuple(coords))


def _unit(rank, i, sign=1):
    v = [Fraction(0)] * rank
    v[i] = Fraction(sign)
    return v


def all_roots(spec: AlgebraSpec) -> list[Root]:
    l = spec.rank
    out = []
    for i, j in itertools.combinations(range(l), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = _unit(l, i, si)
            v[j] = Fraction(sj)
            out.append(Root(tuple(v)))
    if spec.odd:
        for i in range(l):
            for s in (1, -1):
                out.append(Root(tuple(_unit(l, i, s))))
    return out


def simple_roots(spec: AlgebraSpec) -> list[Root]:
    # alpha_i = e_i - e_{i+1}; alpha_l = e_l (B) or e_{l-1} + e_l (D)
    l = spec.rank
    out = []
    for i in range(l - 1):
        v = _unit(l, i)
        v[i + 1] = Fraction(-1)
        out.append(Root(tuple(v)))
    if spec.odd:
        out.append(Root(tuple(_unit(l, l - 1))))
    else:
        v = _unit(l, l - 2)
        v[l - 1] = Fraction(1)
        out.append(Root(tuple(v)))
    return out


def simple_coords(spec: AlgebraSpec, w) -> tuple:
    """Coefficients of ``w`` on the simple roots (exact, may be fractional)."""
    w = as_weight(w.coords if isinstance(w, Root) else w)
    l = spec.rank
    partial = list(itertools.accumulate(w))
    if spec.odd:
        return tuple(partial)
    c = partial[: l - 2]
    s = partial[l - 2]
    c.append((s - w[l - 1]) / 2)
    c.append((s + w[l - 1]) / 2)
    return tuple(c)


def height(spec: AlgebraSpec, root: Root) -> Fraction:
    return sum(simple_coords(spec, root), Fraction(0))


def positive_roots(spec: AlgebraSpec) -> list[Root]:
    """Positive roots ordered by height, ties broken on epsilon coordinates."""
    pos = [r for r in all_roots(spec) if r.is_positive]
    return sorted(pos, key=lambda r: (height(spec, r), r.coords))


def noncompact_positive_roots(spec: AlgebraSpec) -> list[Root]:
    return [r for r in positive_roots(spec) if not r.is_compact]


def compact_positive_roots(spec: AlgebraSpec) -> list[Root]:
    return [r for r in positive_roots(spec) if r.is_compact]


def rho(spec: AlgebraSpec) -> Weight:
    total = [Fraction(0)] * spec.rank
    for r in positive_roots(spec):
        for i, c in enumerate(r.coords):
            total[i] += c
    return tuple(t / 2 for t in total)


def inner(u, v) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"rank mismatch: {len(u)} vs {len(v)}")
    return sum((frac(a) * frac(b) for a, b in zip(u, v)), Fraction(0))


def coroot_pairing(w, beta: Root) -> Fraction:
    """(w, beta^vee) with beta^vee = 2 beta / (beta, beta)."""
    return inner(w, beta.coroot())


def add(u, v) -> Weight:
    return tuple(frac(a) + frac(b) for a, b in zip(u, v))


def sub(u, v) -> Weight:
    return tuple(frac(a) - frac(b) for a, b in zip(u, v))


def scale(k, v) -> Weight:
    return tuple(frac(k) * frac(a) for a in v)
