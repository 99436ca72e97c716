"""Brute-force Verma modules over so(N, C).

Structure constants come from the defining N x N matrices, antisymmetric
with respect to the antidiagonal form.  Vectors of a Verma module are
stored in the PBW basis of U(n^-): a monomial is a non-decreasing tuple of
indices into the positive roots (ordered by height, then epsilon
coordinates), read as F_{b1} F_{b2} ... v_0.
"""
from __future__ import annotations

import functools
from fractions import Fraction

from .linalg import nullspace, rref
from .rootsys import (
    AlgebraSpec,
    InputError,
    Root,
    as_weight,
    coroot_pairing,
    add,
    inner,
    positive_roots,
    rho,
    simple_coords,
    simple_roots,
)
from .signatures import fmt_q

ONE = Fraction(1)


def _axpy(acc: dict, c, vec: dict):
    for k, v in vec.items():
        s = acc.get(k, 0) + c * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def _commutator(x: dict, y: dict) -> dict:
    out: dict = {}
    for (i, j), a in x.items():
        for (k, l), b in y.items():
            if j == k:
                _axpy(out, a * b, {(i, l): 1})
            if l == i:
                _axpy(out, -a * b, {(k, j): 1})
    return out


class StructureConstants:
    """so(N, C) in a Chevalley-style basis F_beta, H_i, E_beta.

    Basis indices: 0..n-1 are F over the positive roots, then the l simple
    coroots H_i, then E over the positive roots (same order as F).
    ``order`` optionally permutes the positive roots, which changes the PBW
    ordering of monomials.
    """

    def __init__(self, N: int, order=None):
        if N < 5:
            raise InputError(f"so({N},C): need N >= 5")
        self.N = N
        self.spec = AlgebraSpec(N - 2, 2)  # root data depends only on N
        self.l = l = self.spec.rank
        self.roots = positive_roots(self.spec)
        if order is not None:
            # any permutation gives a PBW basis; the default is height order
            if sorted(order) != list(range(len(self.roots))):
                raise InputError("order must be a permutation of the positive roots")
            self.roots = [self.roots[i] for i in order]
        self.n = n = len(self.roots)
        self.simple = simple_roots(self.spec)
        self.simple_index = [self.roots.index(a) for a in self.simple]
        self.root_simple = [tuple(int(c) for c in simple_coords(self.spec, r)) for r in self.roots]

        mats = [None] * (2 * n + l)
        self._pivot = {}
        for r, beta in enumerate(self.roots):
            e = self._raw(beta.coords)
            f = self._raw(tuple(-c for c in beta.coords))
            hc = _commutator(e, f)
            val = sum(beta.coords[k] * hc.get((k, k), 0) for k in range(l))
            f = {k: v * 2 / val for k, v in f.items()}
            mats[n + l + r] = e
            mats[r] = f
        for i, r in enumerate(self.simple_index):
            mats[n + i] = _commutator(mats[n + l + r], mats[r])
        self.matrices = mats
        self.dim = len(mats)
        self.h_vectors = [tuple(mats[n + i].get((k, k), Fraction(0)) for k in range(l)) for i in range(l)]
        for idx in list(range(n)) + list(range(n + l, 2 * n + l)):
            pos, val = next(iter(sorted(mats[idx].items())))
            self._pivot[idx] = (pos, val)
        self.root_h = [
            tuple(inner(beta.coords, self.h_vectors[i]) for i in range(l)) for beta in self.roots
        ]
        self._table = {}

    def _wt(self, a: int) -> tuple:
        l, N = self.l, self.N
        v = [0] * l
        if a < l:
            v[a] = 1
        elif N - 1 - a < l:
            v[N - 1 - a] = -1
        return tuple(v)

    def _raw(self, coords) -> dict:
        N = self.N
        target = tuple(int(c) for c in coords)
        for a in range(N):
            for b in range(N):
                if a == b or a == N - 1 - b:
                    continue
                if tuple(x - y for x, y in zip(self._wt(a), self._wt(b))) == target:
                    bp, ap = N - 1 - b, N - 1 - a
                    return {(a, b): ONE, (bp, ap): -ONE}
        raise ValueError(f"no matrix for root {coords}")

    def decompose(self, mat: dict) -> dict:
        """Coordinates of an so(N) matrix in the basis."""
        out = {}
        for idx, ((a, b), val) in self._pivot.items():
            x = mat.get((a, b), 0)
            if x:
                out[idx] = Fraction(x) / val
        t = [Fraction(mat.get((k, k), 0)) for k in range(self.l)]
        if any(t):
            # the h_vectors are independent: solve sum c_i h_i = t
            rows = [list(col) + [tk] for col, tk in zip(zip(*self.h_vectors), t)]
            sol, piv = rref(rows, self.l)
            for row, p in zip(sol, piv):
                if row[-1]:
                    out[self.n + p] = row[-1]
        return out

    def bracket(self, x: int, y: int) -> dict:
        key = (x, y)
        hit = self._table.get(key)
        if hit is None:
            hit = self.decompose(_commutator(self.matrices[x], self.matrices[y]))
            self._table[key] = hit
        return hit

    def bracket_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                _axpy(out, a * b, self.bracket(i, j))
        return out

    def name(self, idx: int) -> str:
        n, l = self.n, self.l
        if idx < n:
            if idx in self.simple_index:
                return f"f{self.simple_index.index(idx) + 1}"
            return f"F[{self.roots[idx]}]"
        if idx < n + l:
            return f"h{idx - n + 1}"
        r = idx - n - l
        if r in self.simple_index:
            return f"e{self.simple_index.index(r) + 1}"
        return f"E[{self.roots[r]}]"

    def index(self, name) -> int:
        if isinstance(name, int):
            return name
        kind, i = name[0], int(name[1:])
        if not 1 <= i <= self.l:
            raise InputError(f"generator {name!r} outside rank {self.l}")
        if kind == "f":
            return self.simple_index[i - 1]
        if kind == "h":
            return self.n + i - 1
        if kind == "e":
            return self.n + self.l + self.simple_index[i - 1]
        raise InputError(f"unknown generator {name!r}")

    def f_index(self, i: int) -> int:
        return self.simple_index[i - 1]

    def e_index(self, i: int) -> int:
        return self.n + self.l + self.simple_index[i - 1]

    def slice_basis(self, nu) -> list:
        return list(_slice_basis(self, tuple(int(x) for x in nu)))

    def rho(self):
        return rho(self.spec)


@functools.lru_cache(maxsize=None)
def structure_constants(N: int) -> StructureConstants:
    return StructureConstants(N)


@functools.lru_cache(maxsize=None)
def _slice_basis(alg: StructureConstants, nu: tuple) -> tuple:
    if any(x < 0 for x in nu):
        return ()
    out = []
    roots = alg.root_simple

    def rec(r, remaining, acc):
        if not any(remaining):
            out.append(tuple(acc))
            return
        if r == len(roots):
            return
        k = 0
        rem = remaining
        while True:
            rec(r + 1, rem, acc + [r] * k)
            rem = tuple(a - b for a, b in zip(rem, roots[r]))
            if any(x < 0 for x in rem):
                break
            k += 1

    rec(0, nu, [])
    return tuple(sorted(out))


class PBWElement:
    """Finite sum of PBW monomials applied to v_0."""

    def __init__(self, alg: StructureConstants, terms: dict | None = None):
        self.alg = alg
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, PBWElement) and self.terms == other.terms

    def exponents(self, mono) -> tuple:
        e = [0] * self.alg.n
        for r in mono:
            e[r] += 1
        return tuple(e)

    def vector(self, basis) -> list:
        return [self.terms.get(b, Fraction(0)) for b in basis]

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            word = []
            for r in sorted(set(mono), key=mono.index):
                k = mono.count(r)
                word.append(self.alg.name(r) + (f"^{k}" if k > 1 else ""))
            parts.append(f"{fmt_q(c)} * {'.'.join(word) or '1'}")
        return " + ".join(parts)

    __str__ = text


class VermaModule:
    """V^Lambda with highest weight ``lam`` (epsilon coordinates)."""

    def __init__(self, alg: StructureConstants, lam):
        self.alg = alg
        self.lam = as_weight(lam)
        if len(self.lam) != alg.l:
            raise InputError(f"weight has {len(self.lam)} coordinates, rank is {alg.l}")
        self.lam_h = [inner(self.lam, hv) for hv in alg.h_vectors]
        self._memo = {}

    def act(self, x: int, mono: tuple) -> dict:
        key = (x, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        n, l = alg.n, alg.l
        res: dict = {}
        if x < n:
            if not mono or x <= mono[0]:
                res = {(x,) + mono: ONE}
            else:
                b, rest = mono[0], mono[1:]
                for m2, c in self.act(x, rest).items():
                    _axpy(res, c, self.act(b, m2))
                for k, c in alg.bracket(x, b).items():
                    _axpy(res, c, self.act(k, rest))
        elif x < n + l:
            i = x - n
            val = self.lam_h[i] - sum((alg.root_h[r][i] for r in mono), Fraction(0))
            if val:
                res = {mono: val}
        elif mono:
            b, rest = mono[0], mono[1:]
            for k, c in alg.bracket(x, b).items():
                _axpy(res, c, self.act(k, rest))
            for m2, c in self.act(x, rest).items():
                _axpy(res, c, self.act(b, m2))
        self._memo[key] = res
        return res

    def act_vec(self, x: int, vec: dict) -> dict:
        out: dict = {}
        for mono, c in vec.items():
            _axpy(out, c, self.act(x, mono))
        return out

    def apply_word(self, word, vec: dict | None = None) -> dict:
        """Apply word[0] word[1] ... word[-1] to ``vec`` (default v_0)."""
        vec = {(): ONE} if vec is None else vec
        for letter in reversed(list(word)):
            vec = self.act_vec(self.alg.index(letter), vec)
        return vec

    def raising_matrix(self, i: int, nu) -> list:
        """Matrix of e_i from slice(nu) to slice(nu - alpha_i); rows index the target."""
        alg = self.alg
        src = alg.slice_basis(nu)
        tgt_nu = tuple(int(a) - (1 if k == i - 1 else 0) for k, a in enumerate(nu))
        tgt = alg.slice_basis(tgt_nu)
        row_of = {m: r for r, m in enumerate(tgt)}
        mat = [[Fraction(0)] * len(src) for _ in tgt]
        x = alg.e_index(i)
        for col, mono in enumerate(src):
            for m2, c in self.act(x, mono).items():
                mat[row_of[m2]][col] += c
        return mat

    def lowering_matrix(self, i: int, nu) -> list:
        alg = self.alg
        src = alg.slice_basis(nu)
        tgt_nu = tuple(int(a) + (1 if k == i - 1 else 0) for k, a in enumerate(nu))
        tgt = alg.slice_basis(tgt_nu)
        row_of = {m: r for r, m in enumerate(tgt)}
        mat = [[Fraction(0)] * len(src) for _ in tgt]
        x = alg.f_index(i)
        for col, mono in enumerate(src):
            for m2, c in self.act(x, mono).items():
                mat[row_of[m2]][col] += c
        return mat

    def singular_vectors(self, nu) -> list:
        basis = self.alg.slice_basis(nu)
        rows = []
        for i in range(1, self.alg.l + 1):
            rows.extend(self.raising_matrix(i, nu))
        return [
            PBWElement(self.alg, dict(zip(basis, v))) for v in nullspace(rows, len(basis))
        ]


def format_matrix(mat) -> str:
    """Plain-text dump, one row per line."""
    return "\n".join(" ".join(fmt_q(x) for x in row) for row in mat)


def straighten(word, lam, alg: StructureConstants) -> PBWElement:
    """Canonical PBW form of ``word`` applied to the highest-weight vector."""
    return PBWElement(alg, VermaModule(alg, lam).apply_word(word))


def solve_singular(lam, beta: Root, m: int, alg: StructureConstants) -> list:
    """Basis of singular vectors of weight lam - m beta in V^lam."""
    lam = as_weight(lam)
    pairing = coroot_pairing(add(lam, alg.rho()), beta)
    if pairing != m:
        raise InputError(
            f"BGG condition fails: (Lambda+rho, {beta}^vee) = {fmt_q(pairing)}, expected {m}"
        )
    nu = tuple(m * c for c in simple_coords(alg.spec, beta))
    if any(Fraction(c).denominator != 1 or c < 0 for c in nu):
        raise InputError(f"{m}*({beta}) is not in the positive root lattice")
    return VermaModule(alg, lam).singular_vectors(nu)
