"""Command-line interface.

Exit codes: 0 success, 2 rejected input, 1 failed verification.
"""
from __future__ import annotations

import argparse
import itertools
import sys
from concurrent.futures import ProcessPoolExecutor

from . import emit
from .classify import classify
from .linalg import same_span
from .multiplets import (
    iter_multiplets,
    main_multiplet,
    reduced_multiplet,
    singlet,
    special_reduced,
    validate_multiplet,
)
from .rootsys import AlgebraSpec, InputError, parse_root, rho, simple_coords, sub
from .signatures import fmt_q, parse_q, weight_of_node
from .singvec import (
    FormulaInapplicable,
    chain_decomposition,
    singular_vector_closed_form,
    verify_singular,
)
from .verma import solve_singular, structure_constants


class VerificationFailed(Exception):
    pass


def _rationals(text: str, what: str) -> list:
    text = (text or "").strip()
    if not text:
        return []
    try:
        return [parse_q(x) for x in text.split(",")]
    except InputError as exc:
        raise InputError(f"{what}: {exc}") from None


def _spec(args) -> AlgebraSpec:
    if args.p is None or args.q is None:
        raise InputError("--p and --q are required")
    return AlgebraSpec(args.p, args.q)


def _emit_multiplet(mult, fmt: str) -> str:
    if fmt == "json":
        return emit.emit_json(mult)
    if fmt == "dot":
        return emit.emit_dot(mult)
    return emit.emit_text(mult)


def cmd_main(args):
    spec = _spec(args)
    return _emit_multiplet(main_multiplet(spec, _rationals(args.labels, "--labels")), args.format)


def cmd_reduced(args):
    spec = _spec(args)
    return _emit_multiplet(
        reduced_multiplet(spec, args.j, _rationals(args.labels, "--labels")), args.format
    )


def cmd_special(args):
    spec = _spec(args)
    labels = _rationals(args.labels, "--labels") if args.labels else None
    return _emit_multiplet(special_reduced(spec, args.j, args.mu, args.mu2, labels), args.format)


def cmd_singlet(args):
    spec = _spec(args)
    return _emit_multiplet(singlet(spec, _rationals(args.labels, "--labels"), args.mu), args.format)


def cmd_classify(args):
    spec = _spec(args)
    report = classify(spec, _rationals(args.labels, "--labels"), args.nu_range)
    if args.format == "json":
        return emit.dumps(emit.report_to_dict(report))
    if args.format == "dot":
        raise InputError("classify supports --format text or json")
    return emit.report_text(report)


def _singvec_inputs(args):
    spec = _spec(args)
    if not args.beta or args.m is None or args.weight is None:
        raise InputError("--beta, --m and --weight are required")
    beta = parse_root(args.beta, spec.rank)
    lam = _rationals(args.weight, "--weight")
    if len(lam) != spec.rank:
        raise InputError(f"--weight needs {spec.rank} coordinates, got {len(lam)}")
    return spec, beta, lam


def cmd_singvec(args):
    spec, beta, lam = _singvec_inputs(args)
    chain = chain_decomposition(spec, beta)
    alg = structure_constants(spec.N)
    try:
        poly = singular_vector_closed_form(spec, chain, args.m, lam)
        source, text = "closed-form", poly.text()
    except FormulaInapplicable as exc:
        kernel = solve_singular(lam, beta, args.m, alg)
        source, text = f"verma-oracle ({exc})", kernel[0].text() if kernel else "0"
    if args.format == "json":
        return emit.dumps(
            {
                "spec": {"p": spec.p, "q": spec.q},
                "root": str(beta),
                "chain": chain.text(),
                "m": args.m,
                "weight": [fmt_q(x) for x in lam],
                "source": source,
                "vector": text,
            }
        )
    return f"{chain.text()}\nm = {args.m}, Lambda = ({', '.join(fmt_q(x) for x in lam)})\n{source}:\n{text}\n"


def check_arrow(spec, beta, m, lam) -> str:
    """Compare closed form and oracle for one (beta, m, Lambda); returns the outcome."""
    alg = structure_constants(spec.N)
    kernel = solve_singular(lam, beta, m, alg)
    if len(kernel) != 1:
        raise VerificationFailed(f"{beta}, m={m}: oracle kernel has dimension {len(kernel)}")
    try:
        chain = chain_decomposition(spec, beta)
    except InputError:
        return "oracle-only"
    try:
        poly = singular_vector_closed_form(spec, chain, m, lam)
    except FormulaInapplicable:
        return "oracle-only"
    result = verify_singular(poly, lam, alg)
    if not result.verified:
        i, res = next(iter(result.residuals.items()))
        raise VerificationFailed(f"{beta}, m={m}: e{i} leaves residual {res.text()}")
    nu = tuple(m * c for c in simple_coords(spec, beta))
    basis = alg.slice_basis(nu)
    if not same_span([result.vector.vector(basis)], [kernel[0].vector(basis)], len(basis)):
        raise VerificationFailed(f"{beta}, m={m}: closed form is not on the oracle line")
    return "verified"


def cmd_verify(args):
    spec = _spec(args)
    if args.sweep_labels is None:
        spec, beta, lam = _singvec_inputs(args)
        outcome = check_arrow(spec, beta, args.m, lam)
        return f"{beta}, m={args.m}: {outcome}\n"
    r = rho(spec)
    counts = {"verified": 0, "oracle-only": 0}
    multiplets = 0
    for labels in itertools.product(range(1, args.sweep_labels + 1), repeat=spec.h + 1):
        mult = main_multiplet(spec, labels)
        multiplets += 1
        bad = validate_multiplet(mult)
        if bad:
            raise VerificationFailed(f"labels {labels}: {bad[0]}")
        for a in mult.differential:
            if a.degree > args.max_degree:
                continue
            lam = sub(weight_of_node(mult.node(a.src)), r)
            counts[check_arrow(spec, a.root, a.degree, lam)] += 1
    return (
        f"{spec}: {multiplets} main multiplets, labels <= {args.sweep_labels}, degree <= {args.max_degree}\n"
        f"closed form verified: {counts['verified']}\n"
        f"oracle only: {counts['oracle-only']}\n"
    )


def sweep_one(N: int, max_label: int) -> tuple:
    spec = AlgebraSpec(N - 2, 2)
    mults = arrows = 0
    problems = []
    for mult in iter_multiplets(spec, max_label):
        mults += 1
        arrows += len(mult.differential)
        problems.extend(f"{mult.kind}: {v}" for v in validate_multiplet(mult))
    return N, mults, arrows, problems


def cmd_sweep(args):
    if args.p is not None or args.q is not None:
        Ns = [_spec(args).N]
    else:
        Ns = [N for N in range(5, 2 * args.max_rank + 2) if N // 2 <= args.max_rank]
    jobs = [(N, args.sweep_labels) for N in Ns]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(sweep_one, *zip(*jobs)))
    else:
        results = [sweep_one(*j) for j in jobs]
    rows = [[f"so({N},C)", m, a, len(p)] for N, m, a, p in sorted(results)]
    out = emit.table(["algebra", "multiplets", "arrows", "violations"], rows)
    problems = [f"so({N},C) {x}" for N, _, _, p in sorted(results) for x in p]
    if problems:
        raise VerificationFailed(out + "\n".join(problems))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sopq", description="Reducible elementary representations of so(p,q)."
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text, formats=("text", "json", "dot")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", help="write here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = verb("main", cmd_main, "main multiplet")
    p.add_argument("--labels", required=True, help="m_1,...,m_{h+1}")
    p = verb("reduced", cmd_reduced, "reduced multiplet with m_j = 0")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--labels", required=True, help="h labels, or h+1 with m_j = 0")
    p = verb("special", cmd_special, "special reduced pair (p+q odd)")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--mu2", type=int)
    p.add_argument("--labels", help="h+1 labels (default all ones)")
    p = verb("singlet", cmd_singlet, "singlet multiplet")
    p.add_argument("--labels", default="", help="m_3,...,m_{h+1}")
    p.add_argument("--mu", type=int)
    p = verb("classify", cmd_classify, "distinguished representations", ("text", "json"))
    p.add_argument("--labels", required=True)
    p.add_argument("--nu-range", type=int, default=5)
    p = verb("singvec", cmd_singvec, "closed-form singular vector", ("text", "json"))
    p.add_argument("--beta", required=True, help="root, e.g. e1-e2")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--weight", required=True, help="highest weight in epsilon coordinates")
    p = verb("verify", cmd_verify, "check closed forms against the Verma oracle", ("text",))
    p.add_argument("--beta")
    p.add_argument("--m", type=int)
    p.add_argument("--weight")
    p.add_argument("--sweep-labels", type=int)
    p.add_argument("--max-degree", type=int, default=2)
    p = verb("sweep", cmd_sweep, "BGG consistency sweep over generated multiplets", ("text",))
    p.add_argument("--sweep-labels", type=int, default=2)
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
