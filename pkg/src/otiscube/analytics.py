"""Closed-form path-length and eccentricity analytics.

For a source/destination pair, every bit position falls into one of eight
classes according to how the four words relate at that position; the class
determines how many times the electrical link for that bit appears on each
of the three candidate routes (one-optical, two-optical, one-E-link).
Summing those per-bit costs gives exact lengths for the first two routes
and tight bounds for the E-link route.

Eccentricity depends only on the Hamming weight class k = H(group, proc)
of a node: 2n+1-k in the plain network; in the enhanced network
n + floor((k+3)/2) up to k = floor(2n/3) and 2n+1-k beyond.  Radius,
diameter, and average eccentricity follow from the class profile.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .topology import MAX_FORMULA_N, NetKind, Node, check_dimension, check_node

# Per-class link-usage cost of one bit position on the one-optical,
# two-optical, and one-E-link routes, indexed by case id 1..8.
CASE_COSTS = {
    1: (1, 1, 1),
    2: (1, 1, 1),
    3: (1, 1, 1),
    4: (1, 1, 1),
    5: (0, 0, 2),
    6: (2, 2, 0),
    7: (2, 0, 2),
    8: (0, 2, 2),
}


def classify_bit(g: int, x: int, h: int, y: int) -> int:
    """Case id 1..8 for one bit position given the four bit values."""
    src_flip = g != x
    dst_flip = h != y
    groups_differ = g != h
    if src_flip and not dst_flip:
        return 2 if groups_differ else 1
    if not src_flip and dst_flip:
        return 4 if groups_differ else 3
    if not src_flip and not dst_flip:
        return 6 if groups_differ else 5
    return 8 if groups_differ else 7


@dataclass(frozen=True)
class BitClassCounts:
    """How many bit positions fall into each of the eight cases."""

    n: int
    counts: tuple[int, int, int, int, int, int, int, int]

    def count(self, case: int) -> int:
        return self.counts[case - 1]

    @property
    def unit_cost_total(self) -> int:
        """Bits costing one hop on every candidate route (cases 1-4)."""
        return sum(self.counts[:4])

    @property
    def src_weight(self) -> int:
        """H(g, x), recovered from the classification."""
        return self.count(1) + self.count(2) + self.count(7) + self.count(8)

    @property
    def dst_weight(self) -> int:
        """H(h, y), recovered from the classification."""
        return self.count(3) + self.count(4) + self.count(7) + self.count(8)


def classify_bits(n: int, src: Node, dst: Node) -> BitClassCounts:
    """Classify all n bit positions of a source/destination pair at once.

    Works on whole words: three masks (source flip, destination flip,
    group disagreement) select each case, so the cost is a handful of
    word operations regardless of n.
    """
    check_node(n, src)
    check_node(n, dst)
    g, x = src
    h, y = dst
    mask = (1 << n) - 1
    a = g ^ x
    b = h ^ y
    c = g ^ h
    counts = (
        (a & ~b & ~c & mask).bit_count(),
        (a & ~b & c).bit_count(),
        (~a & b & ~c & mask).bit_count(),
        (~a & b & c & mask).bit_count(),
        (~a & ~b & ~c & mask).bit_count(),
        (~a & ~b & c & mask).bit_count(),
        (a & b & ~c & mask).bit_count(),
        (a & b & c).bit_count(),
    )
    return BitClassCounts(n, counts)


def anchor_leg_bit_cost(g: int, x: int, b: int) -> int:
    """Uses of one bit's electrical link travelling from (g,x) to (b,b)."""
    if g != x:
        return 1
    return 0 if g == b else 2


def complement_leg_bit_cost(h: int, y: int, cb: int) -> int:
    """Uses of one bit's electrical link travelling from (cb,cb) to (h,y)."""
    if h != y:
        return 1
    return 0 if h == cb else 2


def elink_route_bit_cost(g: int, x: int, h: int, y: int, b: int) -> int:
    """Total uses of one bit's electrical link on the one-E-link route."""
    return anchor_leg_bit_cost(g, x, b) + complement_leg_bit_cost(h, y, 1 - b)


@dataclass(frozen=True)
class PathLengthBounds:
    """Route lengths implied by a bit classification.

    The one- and two-optical lengths are exact.  The E-link route length
    is bracketed; it is pinned exactly when case 1 is empty (the anchor
    can equal the source group, saving its optical hop) while cases 3, 5,
    or 7 are not (the complement diagonal cannot be the destination
    group, so that optical hop stays).
    """

    via_one_optical: int
    via_two_optical: int
    via_elink_low: int
    via_elink_high: int
    via_elink_exact: int | None


def path_length_bounds(bc: BitClassCounts) -> PathLengthBounds:
    if sum(bc.counts) != bc.n or any(c < 0 for c in bc.counts):
        raise ValueError("inconsistent bit-class counts")
    t = bc.unit_cost_total
    l1 = t + 2 * bc.count(6) + 2 * bc.count(7) + 1
    l2 = t + 2 * bc.count(6) + 2 * bc.count(8) + 2
    elink_cost = t + 2 * bc.count(5) + 2 * bc.count(7) + 2 * bc.count(8)
    exact = None
    if bc.count(1) == 0 and bc.count(3) + bc.count(5) + bc.count(7) > 0:
        exact = elink_cost + 2
    return PathLengthBounds(l1, l2, elink_cost + 1, elink_cost + 3, exact)


def eccentricity(kind: NetKind, n: int, k: int) -> int:
    """Eccentricity of every node whose Hamming class H(group, proc) is k."""
    check_dimension(n)
    if not 0 <= k <= n:
        raise ValueError(f"Hamming class k={k} out of range 0..{n}")
    if kind.has_elinks and k <= (2 * n) // 3:
        return n + (k + 3) // 2
    return 2 * n + 1 - k


def eccentricity_profile(kind: NetKind, n: int) -> list[int]:
    """Eccentricity for each Hamming class k = 0..n."""
    return [eccentricity(kind, n, k) for k in range(n + 1)]


def extremes(kind: NetKind, n: int) -> tuple[int, int]:
    """(radius, diameter) of the network."""
    profile = eccentricity_profile(kind, n)
    return min(profile), max(profile)


def average_eccentricity_from_profile(kind: NetKind, n: int) -> Fraction:
    """Average eccentricity summed over the class profile, exactly.

    Classes are weighted by their size: a group holds binomial(n, k)
    nodes of class k, identically across groups, so one group's
    distribution is the whole network's.
    """
    check_dimension(n)
    total = sum(comb(n, k) * eccentricity(kind, n, k) for k in range(n + 1))
    return Fraction(total, 1 << n)


def average_eccentricity(kind: NetKind, n: int) -> Fraction:
    """Exact average eccentricity over all nodes.

    The plain network admits the closed form (3n+2)/2; the enhanced
    profile sum has no simpler expression and is evaluated exactly.
    """
    check_dimension(n)
    if n > MAX_FORMULA_N:
        raise ValueError(f"n={n} beyond supported analytic range")
    if not kind.has_elinks:
        return Fraction(3 * n + 2, 2)
    return average_eccentricity_from_profile(kind, n)


def eccentricity_table(
    n: int, kinds: tuple[NetKind, ...] = (NetKind.OTIS, NetKind.EOTIS)
) -> list[tuple[int, ...]]:
    """Rows (k, eccentricity per kind) for k = 0..n."""
    profiles = [eccentricity_profile(kind, n) for kind in kinds]
    return [(k, *(p[k] for p in profiles)) for k in range(n + 1)]
