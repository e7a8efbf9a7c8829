"""Graphviz DOT text for knitted components, quasi-wings, chains and oracle quivers."""

from __future__ import annotations

from .chains import Chain
from .knitting import KnittedComponent
from .oracle import OracleARQuiver
from .wings import Fragment


def _quote(s: str) -> str:
    # labels may carry the DOT line break escape ``\n``, so backslashes pass through
    return '"' + str(s).replace('"', '\\"') + '"'


def _digraph(name: str, nodes: list[tuple[str, str, str]], edges: list[tuple[str, str]]) -> str:
    """``nodes`` are ``(id, label, extra attributes)``."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [shape=box];"]
    for nid, label, extra in nodes:
        attrs = f"label={_quote(label)}" + (f", {extra}" if extra else "")
        lines.append(f"  {_quote(nid)} [{attrs}];")
    for s, t in edges:
        lines.append(f"  {_quote(s)} -> {_quote(t)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dims_label(dims) -> str:
    return "".join(str(d) for d in dims) if all(d < 10 for d in dims) else ",".join(map(str, dims))


def knitted_to_dot(comp: KnittedComponent) -> str:
    def nid(key):
        return f"{key[0]}:{key[1]}"

    nodes = []
    for key, kv in comp.vertices.items():
        if kv.resolved:
            label = f"({kv.slice},{kv.vertex})\\n{_dims_label(kv.dims)}"
            if any(kv.tags):
                label += " +" + ",".join(map(str, kv.tags))
            nodes.append((nid(key), label, ""))
        else:
            nodes.append((nid(key), f"({kv.slice},{kv.vertex})\\nUNRESOLVED", 'style=dashed, color="gray"'))
    edges = [(nid(s), nid(t)) for s, t in comp.arrows]
    name = "preprojective" if comp.sign > 0 else "preinjective"
    return _digraph(name, nodes, edges)


def fragment_to_dot(frag: Fragment, name: str = "quasi_wing") -> str:
    def nid(v):
        return f"({v[0]},{v[1]})"

    nodes = [(nid(v), nid(v), "shape=ellipse" if v[1] == 1 else "") for v in frag.vertices]
    return _digraph(name, nodes, [(nid(u), nid(w)) for u, w in frag.arrows])


def chain_to_dot(chain: Chain, name: str = "chain") -> str:
    nodes = [(str(i), label, "") for i, label in enumerate(chain.labels)]
    edges = [(str(i), str(i + 1)) for i in range(len(chain.links))]
    return _digraph(name, nodes, edges)


def oracle_to_dot(ar: OracleARQuiver, name: str = "ar_quiver") -> str:
    cat = ar.catalog
    nodes = [(str(i), f"{cat.name(i)}\\n{_dims_label(cat.dim_vector(i))}", "") for i in range(len(cat))]
    edges = []
    for i, j, m in ar.filtration.arrow_list():
        edges.extend([(str(i), str(j))] * m)
    return _digraph(name, nodes, sorted(edges, key=lambda e: (int(e[0]), int(e[1]))))


def export_dot(obj, name: str | None = None) -> str:
    """Deterministic DOT text for any of the combinatorial objects this package produces."""
    if isinstance(obj, KnittedComponent):
        return knitted_to_dot(obj)
    if isinstance(obj, Fragment):
        return fragment_to_dot(obj, name or "quasi_wing")
    if isinstance(obj, Chain):
        return chain_to_dot(obj, name or "chain")
    if isinstance(obj, OracleARQuiver):
        return oracle_to_dot(obj, name or "ar_quiver")
    raise TypeError(f"no DOT export for {type(obj).__name__}")


def count_dot(text: str) -> tuple[int, int]:
    """``(nodes, edges)`` in DOT text written by this module."""
    edges = sum(1 for line in text.splitlines() if " -> " in line)
    nodes = sum(1 for line in text.splitlines() if "[label=" in line)
    return nodes, edges
