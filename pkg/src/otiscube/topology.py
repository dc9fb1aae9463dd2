"""Node addressing and adjacency for OTIS-cube and enhanced OTIS-cube networks.

An n-dimensional OTIS-cube has 2^n groups of 2^n processors; a node is the
pair (group, proc) of n-bit words.  Inside a group the processors form a
binary hypercube wired with electrical links; node (g, x) additionally has
an optical link to its transpose (x, g) whenever g != x.  The enhanced
variant adds one "E-link" per diagonal pair, joining (g, g) to its bitwise
complement (~g, ~g), which makes the graph regular of degree n+1.

Link kinds are represented by their wire tokens: ``e<i>`` for the
electrical link flipping proc bit i, ``opt`` for optical, ``elink`` for the
enhanced diagonal link.
"""
from __future__ import annotations

import enum
from typing import Iterator, NamedTuple

# Closed-form analytics stay exact well past this, but 20 matches the range
# the numeric tables are published for.
MAX_FORMULA_N = 20
# Full graph enumeration: 2^16 nodes / ~0.3M edges at n=8 is desk scale.
MAX_ENUM_N = 8

OPTICAL = "opt"
ELINK = "elink"


class NetKind(enum.Enum):
    """Which edge set to use: plain OTIS or the enhanced variant."""

    OTIS = "otis"
    EOTIS = "eotis"

    @property
    def has_elinks(self) -> bool:
        return self is NetKind.EOTIS


class Node(NamedTuple):
    """A network node addressed by (group word, processor word)."""

    group: int
    proc: int

    @property
    def is_diagonal(self) -> bool:
        return self.group == self.proc


def electrical(bit: int) -> str:
    """Wire token for the electrical link flipping proc bit `bit`."""
    return f"e{bit}"


def link_bit(kind: str) -> int | None:
    """Bit index of an electrical link token, or None for opt/elink."""
    if kind.startswith("e") and kind not in (ELINK,):
        return int(kind[1:])
    return None


def check_dimension(n: int, limit: int = MAX_FORMULA_N) -> None:
    if not 1 <= n <= limit:
        raise ValueError(f"dimension n={n} out of supported range 1..{limit}")


def check_word(n: int, value: int, name: str = "word") -> None:
    if not 0 <= value < (1 << n):
        raise ValueError(f"{name}={value} is not an n-bit word for n={n}")


def check_node(n: int, node: Node) -> None:
    check_word(n, node.group, "group")
    check_word(n, node.proc, "proc")


def complement(n: int, word: int) -> int:
    """Bitwise complement within n bits."""
    return word ^ ((1 << n) - 1)


def node_count(n: int) -> int:
    """Number of nodes, 2^(2n): 2^n groups of 2^n processors each."""
    check_dimension(n)
    return 1 << (2 * n)


def node_index(n: int, node: Node) -> int:
    """Dense id group*2^n + proc, used for flat arrays and orderings."""
    return (node.group << n) | node.proc


def node_from_index(n: int, index: int) -> Node:
    return Node(index >> n, index & ((1 << n) - 1))


def format_node(n: int, node: Node) -> str:
    """Render as ``GGG:PPP`` fixed-width binary, most-significant bit first."""
    return f"{node.group:0{n}b}:{node.proc:0{n}b}"


def parse_node(n: int, text: str) -> Node:
    """Parse the ``GGG:PPP`` syntax produced by :func:`format_node`."""
    group_part, sep, proc_part = text.partition(":")
    if not sep:
        raise ValueError(f"node {text!r}: expected GROUP:PROC")
    words = []
    for part, name in ((group_part, "group"), (proc_part, "proc")):
        if len(part) != n or any(c not in "01" for c in part):
            raise ValueError(
                f"node {text!r}: {name} must be exactly {n} binary digits"
            )
        words.append(int(part, 2))
    return Node(words[0], words[1])


def neighbors(kind: NetKind, n: int, node: Node) -> list[tuple[Node, str]]:
    """All adjacent nodes with link kinds, in canonical order.

    Order is electrical by ascending bit index, then the optical neighbor
    (absent for diagonal nodes), then the E-link neighbor (enhanced kind,
    diagonal nodes only).  Degree is n+1 everywhere except plain-OTIS
    diagonal nodes, which have degree n.
    """
    check_node(n, node)
    g, x = node
    out = [(Node(g, x ^ (1 << i)), electrical(i)) for i in range(n)]
    if g != x:
        out.append((Node(x, g), OPTICAL))
    elif kind.has_elinks:
        cg = complement(n, g)
        out.append((Node(cg, cg), ELINK))
    return out


def is_adjacent(kind: NetKind, n: int, u: Node, v: Node) -> str | None:
    """Link kind joining u and v, or None if they are not adjacent."""
    check_node(n, u)
    check_node(n, v)
    if u == v:
        return None
    if u.group == v.group:
        diff = u.proc ^ v.proc
        if diff & (diff - 1) == 0:
            return electrical(diff.bit_length() - 1)
        return None
    if v == Node(u.proc, u.group) and u.group != u.proc:
        return OPTICAL
    if (
        kind.has_elinks
        and u.is_diagonal
        and v.is_diagonal
        and v.group == complement(n, u.group)
    ):
        return ELINK
    return None


def degree(kind: NetKind, n: int, node: Node) -> int:
    return len(neighbors(kind, n, node))


def edge_count(kind: NetKind, n: int) -> int:
    """Closed-form number of undirected edges."""
    check_dimension(n)
    electrical_edges = n << (2 * n - 1)
    optical_edges = ((1 << (2 * n)) - (1 << n)) // 2
    elink_edges = (1 << (n - 1)) if kind.has_elinks else 0
    return electrical_edges + optical_edges + elink_edges


def iter_edges(kind: NetKind, n: int) -> Iterator[tuple[Node, Node, str]]:
    """Each undirected edge exactly once, ordered by its smaller endpoint.

    The smaller endpoint comes first in every triple; ties within one
    endpoint follow the canonical neighbor order.
    """
    check_dimension(n, MAX_ENUM_N)
    for index in range(node_count(n)):
        u = node_from_index(n, index)
        for v, link in neighbors(kind, n, u):
            if node_index(n, v) > index:
                yield u, v, link


def export_graph(kind: NetKind, n: int, fmt: str = "edgelist") -> Iterator[str]:
    """Emit the graph as ``edgelist`` (``<u> <v> <kind>`` lines) or ``dot``."""
    if fmt == "edgelist":
        for u, v, link in iter_edges(kind, n):
            yield f"{format_node(n, u)} {format_node(n, v)} {link}"
    elif fmt == "dot":
        yield f"graph {kind.value}_q{n} {{"
        for u, v, link in iter_edges(kind, n):
            yield (
                f'  "{format_node(n, u)}" -- "{format_node(n, v)}"'
                f' [label="{link}"];'
            )
        yield "}"
    else:
        raise ValueError(f"unknown export format {fmt!r}")


def parse_edgelist(n: int, lines) -> list[tuple[Node, Node, str]]:
    """Inverse of the edgelist export; used for round-trip checks."""
    edges = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        u_text, v_text, link = line.split()
        edges.append((parse_node(n, u_text), parse_node(n, v_text), link))
    return edges
