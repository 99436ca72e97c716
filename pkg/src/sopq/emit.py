"""Serialisation of multiplets and reports: JSON (with a parser for round
trips), Graphviz DOT and aligned text tables.  All output is deterministic."""
from __future__ import annotations

import json

from .multiplets import DIFFERENTIAL, KNAPP_STEIN, Arrow, Multiplet
from .rootsys import AlgebraSpec, InputError, parse_root
from .signatures import ERNode, Signature, fmt_q, parse_q


def multiplet_to_dict(mult: Multiplet) -> dict:
    nodes = [
        {
            "id": n.id,
            "mlabels": [fmt_q(x) for x in n.signature.mlabels],
            "c": fmt_q(n.c),
            "d": fmt_q(n.d),
            "eps": n.signature.eps,
            "members": [[k, b] for k, b in n.members],
            "tags": sorted(n.tags),
        }
        for n in mult.nodes
    ]
    arrows = [
        {
            "src": a.src,
            "dst": a.dst,
            "kind": a.kind,
            "name": a.name,
            "root": None if a.root is None else str(a.root),
            "degree": a.degree,
            "degenerate": a.degenerate,
        }
        for a in mult.arrows
    ]
    return {
        "spec": {"p": mult.spec.p, "q": mult.spec.q},
        "kind": mult.kind,
        "note": mult.note,
        "nodes": nodes,
        "arrows": arrows,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def emit_json(mult: Multiplet) -> str:
    return dumps(multiplet_to_dict(mult))


def parse_json(text: str) -> Multiplet:
    try:
        data = json.loads(text)
        spec = AlgebraSpec(int(data["spec"]["p"]), int(data["spec"]["q"]))
        nodes = []
        for nd in data["nodes"]:
            sig = Signature(spec, [parse_q(x) for x in nd["mlabels"]], parse_q(nd["c"]), nd["eps"])
            if sig.d != parse_q(nd["d"]):
                raise InputError(f"node {nd['id']}: d does not match c")
            members = tuple((int(k), b) for k, b in nd["members"])
            nodes.append(ERNode(nd["id"], sig, members, frozenset(nd["tags"])))
        arrows = [
            Arrow(
                a["src"],
                a["dst"],
                a["kind"],
                a["name"],
                None if a["root"] is None else parse_root(a["root"], spec.rank),
                a["degree"],
                a["degenerate"],
            )
            for a in data["arrows"]
        ]
        return Multiplet(spec, data["kind"], nodes, arrows, data.get("note", ""))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed multiplet JSON: {exc}") from None


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(mult: Multiplet) -> str:
    """Digraph with one column per value of c; shadow partners sit at
    mirrored columns around a center marker."""
    lines = [f"digraph {_q(mult.kind)} {{", "  rankdir=LR;", "  node [shape=box];"]
    lines.append('  center [shape=point, label=""];')
    for n in mult.nodes:
        lines.append(f"  {_q(n.id)} [label={_q(n.signature.text())}];")
    columns: dict = {}
    for n in mult.nodes:
        columns.setdefault(n.c, []).append(n.id)
    columns.setdefault(0, []).insert(0, "center")
    order = sorted(columns)
    for c in order:
        ids = " ".join(_q(i) if i != "center" else "center" for i in columns[c])
        lines.append(f"  {{rank=same; {ids};}}")
    for left, right in zip(order, order[1:]):
        a, b = columns[left][0], columns[right][0]
        a = a if a == "center" else _q(a)
        b = b if b == "center" else _q(b)
        lines.append(f"  {a} -> {b} [style=invis];")
    for a in mult.arrows:
        if a.kind == DIFFERENTIAL:
            lines.append(f"  {_q(a.src)} -> {_q(a.dst)} [label={_q(f'{a.root},{a.degree}')}];")
    done = set()
    for a in mult.arrows:
        if a.kind != KNAPP_STEIN:
            continue
        pair = frozenset((a.src, a.dst))
        if pair in done:
            continue
        done.add(pair)
        src, dst = sorted(pair, key=lambda i: mult.node(i).c)
        k = a.name.rsplit("_", 1)[-1]
        label = f"G_{k}" + (" (differential)" if a.degenerate else "")
        lines.append(f"  {_q(src)} -> {_q(dst)} [style=dotted, dir=both, label={_q(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def table(header, rows) -> str:
    rows = [[str(x) for x in r] for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(str(h)) for i, h in enumerate(header)]
    out = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    out.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)
    return "\n".join(out) + "\n"


def emit_text(mult: Multiplet) -> str:
    head = f"{mult.spec} {mult.kind}\n"
    if mult.note:
        head += mult.note + "\n"
    nodes = table(
        ["node", "signature", "c", "d", "tags"],
        [[n.id, n.signature.text(), fmt_q(n.c), fmt_q(n.d), ",".join(sorted(n.tags))] for n in mult.nodes],
    )
    arrows = table(
        ["arrow", "kind", "from", "to", "root", "degree"],
        [
            [a.name, a.kind + (" (degenerate)" if a.degenerate else ""), a.src, a.dst,
             "" if a.root is None else str(a.root), "" if a.degree is None else a.degree]
            for a in mult.arrows
        ],
    )
    return head + "\n" + nodes + "\n" + arrows


def _ops_text(ops) -> str:
    out = []
    for root, degree in ops:
        out.append(str(root) if degree is None else f"D^{degree}[{root}]")
    return ", ".join(out)


def report_to_dict(report) -> dict:
    entries = []
    for cls, items in report.sections():
        for e in items:
            entries.append(
                {
                    "class": cls,
                    "name": e.name,
                    "multiplet": e.multiplet,
                    "mlabels": [fmt_q(x) for x in e.node.signature.mlabels],
                    "c": fmt_q(e.node.c),
                    "d": fmt_q(e.node.d),
                    "nu": e.nu,
                    "holomorphic": e.holomorphic,
                    "cutting_ops": [
                        {"root": str(r), "degree": d} for r, d in e.cutting_ops
                    ],
                    "ks_condition": e.ks_condition,
                    "note": e.note,
                }
            )
    return {
        "spec": {"p": report.spec.p, "q": report.spec.q},
        "labels": [fmt_q(x) for x in report.labels],
        "dimension": report.dimension,
        "entries": entries,
        "notes": list(report.notes),
    }


def report_text(report) -> str:
    rows = []
    for cls, items in report.sections():
        for e in items:
            extra = []
            if e.nu is not None:
                extra.append(f"nu={e.nu}")
            if e.note:
                extra.append(e.note)
            rows.append([cls, e.name, e.node.signature.text(), fmt_q(e.node.c), fmt_q(e.node.d),
                         _ops_text(e.cutting_ops), "; ".join(extra)])
    head = f"{report.spec} labels ({','.join(fmt_q(x) for x in report.labels)}): " \
           f"finite-dimensional irrep of dimension {report.dimension}\n"
    body = table(["class", "name", "signature", "c", "d", "cutting operators", "notes"], rows)
    tail = "".join(f"note: {n}\n" for n in report.notes)
    return head + body + tail
