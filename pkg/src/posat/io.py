"""Plain-text formats (1-based, round-trip exact) and DOT export."""

from __future__ import annotations

import re

from .digraph import Digraph
from .errors import ParseError
from .family import SetFamily, elems_of, mask_of
from .poset import Poset, catalog, from_cover_relations


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


# -- poset -------------------------------------------------------------------

def parse_poset(text: str) -> Poset:
    """Format: `elements=<p>` then one `a < b` cover per line (1-based),
    or a single `name=<catalog>[:<param>]` line."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty poset file")
    name_lines = [l for l in lines if l.startswith("name=")]
    if name_lines:
        if len(lines) != len(name_lines) or len(name_lines) != 1:
            raise ParseError("a name= line must be the only content")
        return parse_poset_spec(name_lines[0][len("name="):])
    m = re.fullmatch(r"elements=(\d+)", lines[0])
    if not m:
        raise ParseError(f"expected elements=<p>, got {lines[0]!r}")
    p = int(m.group(1))
    covers = []
    for line in lines[1:]:
        cm = re.fullmatch(r"(\d+)\s*<\s*(\d+)", line)
        if not cm:
            raise ParseError(f"expected `a < b`, got {line!r}")
        covers.append((int(cm.group(1)) - 1, int(cm.group(2)) - 1))
    return from_cover_relations(p, covers)


def parse_poset_spec(spec: str) -> Poset:
    """`<catalog>` or `<catalog>:<param>`."""
    if ":" in spec:
        name, param = spec.split(":", 1)
        try:
            return catalog(name, int(param))
        except ValueError:
            raise ParseError(f"bad catalog parameter {param!r}")
    return catalog(spec)


def format_poset(P: Poset) -> str:
    lines = [f"elements={P.size}"]
    for a, b in sorted(P.cover_pairs()):
        lines.append(f"{a + 1} < {b + 1}")
    return "\n".join(lines) + "\n"


def poset_dot(P: Poset) -> str:
    """DOT of the Hasse diagram, edges drawn from lower to higher element."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for a in range(P.size):
        lines.append(f'  v{a + 1} [label="{a + 1}"];')
    for a, b in sorted(P.cover_pairs()):
        lines.append(f"  v{a + 1} -> v{b + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- family ------------------------------------------------------------------

def parse_family(text: str) -> SetFamily:
    """Format: `n=<int>` then one member per line as `{}` or `{1,3,4}`."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty family file")
    m = re.fullmatch(r"n=(\d+)", lines[0])
    if not m:
        raise ParseError(f"expected n=<int>, got {lines[0]!r}")
    n = int(m.group(1))
    members = []
    for line in lines[1:]:
        sm = re.fullmatch(r"\{([\d,\s]*)\}", line)
        if not sm:
            raise ParseError(f"expected a set like {{1,3}}, got {line!r}")
        body = sm.group(1).strip()
        elems = [int(x) for x in body.split(",")] if body else []
        if any(not 1 <= e <= n for e in elems):
            raise ParseError(f"element out of range in {line!r}")
        members.append(mask_of(elems))
    return SetFamily.of(n, members)


def format_member(mask: int) -> str:
    return "{" + ",".join(map(str, elems_of(mask))) + "}"


def format_family(F: SetFamily) -> str:
    lines = [f"n={F.n}"]
    lines.extend(format_member(m) for m in F.members)
    return "\n".join(lines) + "\n"


def family_dot(F: SetFamily) -> str:
    """DOT of the family's inclusion order (cover edges only)."""
    from .family import inclusion_poset

    P, members = inclusion_poset(F)
    lines = ["digraph family {", "  rankdir=BT;"]
    for j, m in enumerate(members):
        lines.append(f'  v{j} [label="{format_member(m)}"];')
    for a, b in sorted(P.cover_pairs()):
        lines.append(f"  v{a} -> v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- digraph -----------------------------------------------------------------

def parse_digraph(text: str) -> Digraph:
    """Format: `vertices=<n>` then one `u -> v` per line (1-based)."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty digraph file")
    m = re.fullmatch(r"vertices=(\d+)", lines[0])
    if not m:
        raise ParseError(f"expected vertices=<n>, got {lines[0]!r}")
    n = int(m.group(1))
    edges = []
    for line in lines[1:]:
        em = re.fullmatch(r"(\d+)\s*->\s*(\d+)", line)
        if not em:
            raise ParseError(f"expected `u -> v`, got {line!r}")
        edges.append((int(em.group(1)) - 1, int(em.group(2)) - 1))
    return Digraph.of(n, edges)


def format_digraph(D: Digraph) -> str:
    lines = [f"vertices={D.vertex_count}"]
    for u, v in D.sorted_edges():
        lines.append(f"{u + 1} -> {v + 1}")
    return "\n".join(lines) + "\n"


def digraph_dot(D: Digraph) -> str:
    lines = ["digraph d {"]
    for v in range(D.vertex_count):
        label = D.labels[v] if D.labels else str(v + 1)
        lines.append(f'  v{v + 1} [label="{label}"];')
    for u, v in D.sorted_edges():
        lines.append(f"  v{u + 1} -> v{v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- results -----------------------------------------------------------------

def format_result(result) -> str:
    """Certificate block plus the witness family inline."""
    lines = [
        f"lower={result.lower_bound} kind={result.lower_kind}",
        f"upper={result.upper_bound}",
        f"exact={str(result.exact).lower()}",
    ]
    if result.witness is not None:
        lines.append("witness:")
        lines.append(format_family(result.witness).rstrip("\n"))
    return "\n".join(lines) + "\n"
