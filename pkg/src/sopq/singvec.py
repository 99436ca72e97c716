"""Closed-form singular vectors along simple-root chains, and their
verification against the brute-force Verma engine."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .rootsys import (
    AlgebraSpec,
    InputError,
    Root,
    add,
    as_weight,
    coroot_pairing,
    rho,
    simple_roots,
)
from .signatures import fmt_q, parse_q
from .verma import PBWElement, StructureConstants, VermaModule, structure_constants

A_CHAIN = "A-chain"
DOUBLED_END = "doubled-end"


class FormulaInapplicable(ValueError):
    """A coefficient denominator (lambda+rho)(H) - k vanishes."""


class NCPolynomial:
    """Sum of coefficient * word in the simple lowering generators.

    A word is a tuple of 1-based simple-root indices, read left to right as
    f_{w0} f_{w1} ... acting on v_0.
    """

    def __init__(self, terms=None):
        acc: dict = {}
        for word, c in (terms.items() if isinstance(terms, dict) else terms or ()):
            word = tuple(word)
            acc[word] = acc.get(word, 0) + Fraction(c)
        self.terms = {w: c for w, c in acc.items() if c}
        if any(not w for w in self.terms):
            raise InputError("nonzero terms need a nonempty word")

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCPolynomial) and self.terms == other.terms

    def coefficient(self, word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def content(self) -> tuple:
        """Number of each simple generator in every word (homogeneity check)."""
        counts = {tuple(sorted(w)) for w in self.terms}
        if len(counts) > 1:
            raise InputError("polynomial is not weight-homogeneous")
        return counts.pop() if counts else ()

    def text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{fmt_q(c)} * {_word_text(w)}" for w, c in self.terms.items())

    __str__ = text

    @classmethod
    def parse(cls, text: str) -> "NCPolynomial":
        terms = []
        for chunk in re.split(r"\s+\+\s+", text.strip()):
            try:
                c, word = chunk.split("*")
            except ValueError:
                raise InputError(f"term {chunk!r} is not of the form 'c * f1.f2'") from None
            letters = []
            for piece in word.strip().split("."):
                mt = re.fullmatch(r"f(\d+)(?:\^(\d+))?", piece)
                if not mt:
                    raise InputError(f"bad generator {piece!r}")
                letters += [int(mt.group(1))] * int(mt.group(2) or 1)
            terms.append((tuple(letters), parse_q(c)))
        return cls(terms)


def _word_text(word) -> str:
    parts = []
    for i, grp in itertools.groupby(word):
        k = len(list(grp))
        parts.append(f"f{i}" + (f"^{k}" if k > 1 else ""))
    return ".".join(parts)


@dataclass(frozen=True)
class ChainDecomposition:
    root: Root
    kind: str
    indices: tuple  # 1-based; for doubled-end the last index carries weight 2

    def expansion(self, spec: AlgebraSpec) -> tuple:
        simple = simple_roots(spec)
        total = [Fraction(0)] * spec.rank
        for pos, i in enumerate(self.indices):
            mult = 2 if self.kind == DOUBLED_END and pos == len(self.indices) - 1 else 1
            for k, c in enumerate(simple[i - 1].coords):
                total[k] += mult * c
        return tuple(total)

    def text(self) -> str:
        idx = [f"a{i}" for i in self.indices]
        if self.kind == DOUBLED_END:
            idx[-1] += "^2"
        return f"{self.root}: {self.kind} [{', '.join(idx)}]"


def chain_decomposition(spec: AlgebraSpec, beta: Root) -> ChainDecomposition:
    l = spec.rank
    c = tuple(beta.coords)
    if len(c) != l:
        raise InputError(f"root {beta} has rank {len(c)}, algebra has rank {l}")
    if not beta.is_positive or beta.is_compact:
        raise InputError(f"{beta} is not a noncompact positive root")
    rest = c[1:]
    nonzero = [(k + 1, x) for k, x in enumerate(rest) if x]
    if c[0] != 1 or len(nonzero) > 1:
        raise InputError(f"{beta} is not a root")
    if not nonzero:
        if not spec.odd:
            raise InputError(f"{beta} is not a root of D{l}")
        chain = ChainDecomposition(beta, A_CHAIN, tuple(range(1, l + 1)))
    else:
        j, sign = nonzero[0]
        j += 1
        if sign < 0:
            chain = ChainDecomposition(beta, A_CHAIN, tuple(range(1, j)))
        elif j == l and spec.odd:
            chain = ChainDecomposition(beta, DOUBLED_END, tuple(range(1, l + 1)))
        elif j == l:
            chain = ChainDecomposition(beta, A_CHAIN, tuple(range(1, l - 1)) + (l,))
        else:
            raise InputError(f"{beta} has no simple-root chain decomposition")
    assert chain.expansion(spec) == c
    return chain


def _cartan_values(spec: AlgebraSpec, lam) -> list:
    """(lambda+rho)(H_i) for the simple coroots."""
    shifted = add(as_weight(lam), rho(spec))
    return [coroot_pairing(shifted, a) for a in simple_roots(spec)]


def _ratio(x, k):
    if x - k == 0:
        raise FormulaInapplicable(
            f"denominator (lambda+rho)(H) - {k} vanishes; use the Verma oracle instead"
        )
    return Fraction(x) / (x - k)


def singular_vector_closed_form(spec: AlgebraSpec, chain: ChainDecomposition, m: int, lam) -> NCPolynomial:
    """Closed-form singular vector of weight lam - m*root, normalised so the
    coefficient with all k = 0 is 1."""
    if m < 1:
        raise InputError("degree m must be a positive integer")
    lam = as_weight(lam)
    pairing = coroot_pairing(add(lam, rho(spec)), chain.root)
    if pairing != m:
        raise InputError(
            f"BGG condition fails for {chain.root}: (Lambda+rho, beta^vee) = {fmt_q(pairing)}, not {m}"
        )
    hv = _cartan_values(spec, lam)
    idx = chain.indices
    terms = []
    if chain.kind == A_CHAIN:
        n = len(idx)
        hs = list(itertools.accumulate(hv[i - 1] for i in idx))
        for ks in itertools.product(range(m + 1), repeat=n - 1):
            coef = Fraction((-1) ** sum(ks))
            for s, k in enumerate(ks):
                coef *= comb(m, k) * _ratio(hs[s], k)
            word = []
            for i, k in zip(idx, ks):
                word += [i] * (m - k)
            word += [idx[-1]] * m
            for i, k in reversed(list(zip(idx, ks))):
                word += [i] * k
            terms.append((word, coef))
    else:
        n = len(idx)
        head = idx[: n - 2]
        hs = list(itertools.accumulate(hv[i - 1] for i in head))
        last = hv[idx[-1] - 1]
        ranges = [range(m + 1)] * len(head) + [range(2 * m + 1)]
        for ks in itertools.product(*ranges):
            coef = Fraction((-1) ** sum(ks))
            for s, k in enumerate(ks[:-1]):
                coef *= comb(m, k) * _ratio(hs[s], k)
            k = ks[-1]
            coef *= comb(2 * m, k) * _ratio(last, k)
            word = []
            for i, kk in zip(head, ks):
                word += [i] * (m - kk)
            word += [idx[-1]] * (2 * m - k) + [idx[-2]] * m + [idx[-1]] * k
            for i, kk in reversed(list(zip(head, ks))):
                word += [i] * kk
            terms.append((word, coef))
    return NCPolynomial(terms)


@dataclass
class Verification:
    verified: bool
    vector: PBWElement
    residuals: dict = field(default_factory=dict)  # simple index -> e_i . v

    @property
    def residual(self) -> PBWElement | None:
        return next(iter(self.residuals.values()), None)


def to_pbw(poly: NCPolynomial, lam, alg: StructureConstants, module: VermaModule | None = None) -> PBWElement:
    module = module or VermaModule(alg, lam)
    acc: dict = {}
    for word, c in poly.terms.items():
        for mono, v in module.apply_word([f"f{i}" for i in word]).items():
            s = acc.get(mono, 0) + c * v
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
    return PBWElement(alg, acc)


def verify_singular(poly: NCPolynomial, lam, alg: StructureConstants | None = None, N: int | None = None) -> Verification:
    """Straighten ``poly`` v_0 and apply every simple raising generator."""
    if alg is None:
        if N is None:
            raise InputError("verify_singular needs the algebra or N")
        alg = structure_constants(N)
    module = VermaModule(alg, lam)
    vec = to_pbw(poly, lam, alg, module)
    residuals = {}
    for i in range(1, alg.l + 1):
        image = module.act_vec(alg.e_index(i), vec.terms)
        if image:
            residuals[i] = PBWElement(alg, image)
    return Verification(not residuals, vec, residuals)


def weight_drop(poly: NCPolynomial, spec: AlgebraSpec) -> tuple:
    """Sum of the simple roots in each word (must equal m * root)."""
    simple = simple_roots(spec)
    total = [Fraction(0)] * spec.rank
    for i in poly.content():
        for k, c in enumerate(simple[i - 1].coords):
            total[k] += c
    return tuple(total)

