"""Shortest-path distances and explicit routes for both network kinds.

Cross-group traffic in the plain network has two candidate shapes: a
one-optical-hop route (transpose at the destination group's column) and a
two-optical-hop route (transpose out of the source column first).  The
closed-form distance is the cheaper of the two, or the plain Hamming
distance inside one group.

The enhanced network adds a third candidate that crosses exactly one
E-link.  ``rte`` picks the best diagonal anchor for that crossing with
three word-level bit operations and returns the exact best E-link route
length; ``eroute`` takes the minimum of both worlds and emits the full
hop-by-hop path.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .topology import (
    ELINK,
    OPTICAL,
    NetKind,
    Node,
    check_node,
    complement,
    electrical,
    format_node,
    is_adjacent,
)


def hamming(u: int, v: int) -> int:
    """Number of bit positions where u and v differ."""
    return (u ^ v).bit_count()


def otis_distance(n: int, src: Node, dst: Node) -> int:
    """Shortest-path hop count in the plain network."""
    check_node(n, src)
    check_node(n, dst)
    g, x = src
    h, y = dst
    if g == h:
        return hamming(x, y)
    return min(hamming(x, h) + hamming(g, y) + 1, hamming(g, h) + hamming(x, y) + 2)


def rte(n: int, src: Node, dst: Node) -> tuple[int, int]:
    """Length of the best route crossing one E-link, and its anchor word.

    The anchor b names the E-link (b, b) -- (~b, ~b) the route crosses.
    Candidate bits where flipping b away from the source group pays off
    are ``t``; where the complement side prefers alignment instead, ``u``.
    Choosing b = g when t is zero, b = g^t when the far side still has
    slack, and b = ~h otherwise is optimal over all 2^n anchors.
    """
    check_node(n, src)
    check_node(n, dst)
    g, x = src
    h, y = dst
    mask = (1 << n) - 1
    t = (g ^ x) & ~(g ^ h) & ~(h ^ y) & mask
    u = (h ^ y) & ~(g ^ h) & ~(g ^ x) & mask
    if t == 0:
        b = g
    elif u != 0:
        b = g ^ t
    else:
        b = complement(n, h)
    cb = complement(n, b)
    length = (
        otis_distance(n, src, Node(b, b))
        + 1
        + otis_distance(n, Node(cb, cb), dst)
    )
    return length, b


def eotis_distance(n: int, src: Node, dst: Node) -> int:
    """Shortest-path hop count in the enhanced network."""
    return min(otis_distance(n, src, dst), rte(n, src, dst)[0])


def distance(kind: NetKind, n: int, src: Node, dst: Node) -> int:
    if kind.has_elinks:
        return eotis_distance(n, src, dst)
    return otis_distance(n, src, dst)


@dataclass(frozen=True)
class DistanceBreakdown:
    """The candidate route lengths behind one distance query.

    ``via_one_optical`` and ``via_two_optical`` are the two cross-group
    candidates (formula values; only meaningful when ``same_group`` is
    false).  ``via_elink`` and ``anchor`` are present for the enhanced
    kind only.
    """

    kind: NetKind
    n: int
    src: Node
    dst: Node
    same_group: bool
    via_one_optical: int
    via_two_optical: int
    distance: int
    via_elink: int | None = None
    anchor: int | None = None

    def to_dict(self) -> dict:
        doc = {
            "kind": self.kind.value,
            "n": self.n,
            "src": format_node(self.n, self.src),
            "dst": format_node(self.n, self.dst),
            "same_group": self.same_group,
            "via_one_optical": self.via_one_optical,
            "via_two_optical": self.via_two_optical,
            "via_elink": self.via_elink,
            "anchor": (
                None if self.anchor is None else f"{self.anchor:0{self.n}b}"
            ),
            "distance": self.distance,
        }
        return doc


def distance_breakdown(
    kind: NetKind, n: int, src: Node, dst: Node
) -> DistanceBreakdown:
    """Distance plus all candidate lengths that competed for it."""
    check_node(n, src)
    check_node(n, dst)
    g, x = src
    h, y = dst
    l1 = hamming(x, h) + hamming(g, y) + 1
    l2 = hamming(g, h) + hamming(x, y) + 2
    same_group = g == h
    base = hamming(x, y) if same_group else min(l1, l2)
    if not kind.has_elinks:
        return DistanceBreakdown(kind, n, src, dst, same_group, l1, l2, base)
    l3, anchor = rte(n, src, dst)
    return DistanceBreakdown(
        kind, n, src, dst, same_group, l1, l2, min(base, l3), l3, anchor
    )


@dataclass
class Path:
    """A concrete route: node sequence plus one link token per hop."""

    kind: NetKind
    n: int
    nodes: list[Node]
    hops: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.hops)

    def optical_hops(self) -> int:
        return sum(1 for h in self.hops if h in (OPTICAL, ELINK))

    def elink_hops(self) -> int:
        return sum(1 for h in self.hops if h == ELINK)

    def render(self) -> str:
        """Arrow-separated form, e.g. ``00:01 -opt-> 01:00 -e1-> 01:10``."""
        parts = [format_node(self.n, self.nodes[0])]
        for hop, node in zip(self.hops, self.nodes[1:]):
            parts.append(f"-{hop}-> {format_node(self.n, node)}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "length": len(self),
            "hops": [
                {
                    "from": format_node(self.n, u),
                    "to": format_node(self.n, v),
                    "link": link,
                }
                for u, v, link in zip(self.nodes, self.nodes[1:], self.hops)
            ],
        }


@dataclass(frozen=True)
class PathViolation:
    hop: int
    reason: str


def _extend_electrical(path: Path, target_proc: int) -> None:
    # Flip differing proc bits in ascending order; keeps output deterministic.
    node = path.nodes[-1]
    diff = node.proc ^ target_proc
    bit = 0
    while diff:
        if diff & 1:
            node = Node(node.group, node.proc ^ (1 << bit))
            path.nodes.append(node)
            path.hops.append(electrical(bit))
        diff >>= 1
        bit += 1


def _extend_optical(path: Path) -> None:
    node = path.nodes[-1]
    path.nodes.append(Node(node.proc, node.group))
    path.hops.append(OPTICAL)


def route_otis(n: int, src: Node, dst: Node, kind: NetKind = NetKind.OTIS) -> Path:
    """Shortest route using electrical and optical links only.

    Cross-group ties between the two candidates go to the one-optical
    route, which needs no precondition; the two-optical route is only
    taken when strictly shorter, which guarantees the transposes it uses
    exist.
    """
    check_node(n, src)
    check_node(n, dst)
    g, x = src
    h, y = dst
    path = Path(kind, n, [src])
    if g == h:
        _extend_electrical(path, y)
        return path
    l1 = hamming(x, h) + hamming(g, y) + 1
    l2 = hamming(g, h) + hamming(x, y) + 2
    if l2 < l1:
        # src -> (x,g) -> (x,h) -> (h,x) -> (h,y); l2 < l1 implies g != x
        # and h != x, so both transposes exist.
        _extend_optical(path)
        _extend_electrical(path, h)
        _extend_optical(path)
        _extend_electrical(path, y)
    else:
        # src -> (g,h) -> (h,g) -> (h,y); valid for any cross-group pair.
        _extend_electrical(path, h)
        _extend_optical(path)
        _extend_electrical(path, y)
    return path


def eroute(n: int, src: Node, dst: Node) -> tuple[DistanceBreakdown, Path]:
    """Shortest route in the enhanced network, with its breakdown.

    Uses the plain route unless the best one-E-link route is strictly
    shorter; in that case the route runs to the anchor diagonal, crosses
    the E-link, and continues from the complement diagonal.
    """
    breakdown = distance_breakdown(NetKind.EOTIS, n, src, dst)
    base = otis_distance(n, src, dst)
    if base <= breakdown.via_elink:
        path = route_otis(n, src, dst, kind=NetKind.EOTIS)
        return breakdown, path
    b = breakdown.anchor
    cb = complement(n, b)
    path = route_otis(n, src, Node(b, b), kind=NetKind.EOTIS)
    path.nodes.append(Node(cb, cb))
    path.hops.append(ELINK)
    tail = route_otis(n, Node(cb, cb), dst, kind=NetKind.EOTIS)
    path.nodes.extend(tail.nodes[1:])
    path.hops.extend(tail.hops)
    return breakdown, path


def route(kind: NetKind, n: int, src: Node, dst: Node) -> tuple[DistanceBreakdown, Path]:
    """Breakdown and path for either network kind."""
    if kind.has_elinks:
        return eroute(n, src, dst)
    return distance_breakdown(kind, n, src, dst), route_otis(n, src, dst)


def validate_path(kind: NetKind, n: int, path: Path) -> PathViolation | None:
    """First violated path invariant, or None if the path is well formed.

    Checks node validity, hop/node count agreement, per-hop adjacency with
    the stated link kind, and that at most one hop is an E-link.
    """
    if not path.nodes:
        return PathViolation(0, "path has no nodes")
    if len(path.hops) != len(path.nodes) - 1:
        return PathViolation(0, "hop count does not match node count")
    try:
        for node in path.nodes:
            check_node(n, node)
    except ValueError as exc:
        return PathViolation(0, str(exc))
    elinks_seen = 0
    for i, (u, v, link) in enumerate(zip(path.nodes, path.nodes[1:], path.hops)):
        actual = is_adjacent(kind, n, u, v)
        if actual is None:
            return PathViolation(i, "consecutive nodes are not adjacent")
        if actual != link:
            return PathViolation(i, f"hop labeled {link} but link is {actual}")
        if link == ELINK:
            elinks_seen += 1
            if elinks_seen > 1:
                return PathViolation(i, "more than one E-link hop")
    return None
