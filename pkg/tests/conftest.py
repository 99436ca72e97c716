import itertools
from fractions import Fraction

import pytest


def kostant_count(roots, target):
    """Number of ways to write ``target`` as a multiset of ``roots``.

    Generating-function DP: multiply in 1/(1 - x^r) one root at a time.
    """
    target = tuple(target)
    boxes = list(itertools.product(*(range(t + 1) for t in target)))
    boxes.sort(key=sum)
    dp = {b: 0 for b in boxes}
    dp[tuple(0 for _ in target)] = 1
    for r in roots:
        for b in boxes:
            prev = tuple(x - y for x, y in zip(b, r))
            if prev in dp:
                dp[b] += dp[prev]
    return dp[target]


def reference_main_list(spec, m):
    """Main-multiplet signatures transcribed term by term from the
    Dynkin-label parametrisation; returns {(k, branch): (labels, c)}."""
    h = spec.h
    m = [None] + [Fraction(x) for x in m]

    def s(r, t):
        return sum(m[r : t + 1], Fraction(0))

    out = {}
    for k in range(1, h + 2):
        if spec.odd:
            if k == 1:
                lab, c = m[1 : h + 1], (m[1] + 2 * s(2, h + 1)) / 2
            elif k <= h:
                lab = m[1 : h - k + 2] + [s(h - k + 2, h - k + 3)] + m[h + 4 - k : h + 2]
                c = (m[1] + 2 * s(2, h + 2 - k)) / 2
            else:
                lab, c = [m[1] + 2 * m[2]] + m[3 : h + 2], m[1] / 2
            lab_plus = lab
        else:
            if k == 1:
                lab, c = m[1 : h + 1], s(1, 2) / 2 + s(3, h + 1)
            elif k <= h - 1:
                lab = m[1 : h - k + 2] + [s(h - k + 2, h - k + 3)] + m[h + 4 - k : h + 2]
                c = s(1, 2) / 2 + s(3, h + 2 - k)
            elif k == h:
                lab, c = [m[1] + m[3], s(2, 3)] + m[4 : h + 2], s(1, 2) / 2
            else:
                lab, c = [s(1, 3), m[3]] + m[4 : h + 2], (m[1] - m[2]) / 2
            lab_plus = [lab[1], lab[0]] + lab[2:]
        out[(k, "-")] = (tuple(lab), -c)
        out[(k, "+")] = (tuple(lab_plus), c)
    return out


@pytest.fixture
def kostant():
    return kostant_count


def irreducible_dimension(alg, lam, box):
    """Dimension of L(lam) from ranks of the raising-word pairing on each
    slice of the Verma module (slices of depth inside ``box``)."""
    from sopq.linalg import rank
    from sopq.verma import VermaModule

    module = VermaModule(alg, lam)
    e_of = lambda r: alg.n + alg.l + r
    total = 0
    for nu in itertools.product(*(range(b + 1) for b in box)):
        basis = alg.slice_basis(nu)
        if not basis:
            continue
        rows = []
        for word in basis:
            row = []
            for mono in basis:
                vec = {mono: 1}
                for r in word:
                    vec = module.act_vec(e_of(r), vec)
                row.append(vec.get((), 0))
            rows.append(row)
        total += rank(rows, len(basis))
    return total


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
