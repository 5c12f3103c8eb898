"""Incidence structures and symmetric 2-design checks.

A symmetric (v, k, lambda) design has v points and v blocks of size k such
that every point pair lies on exactly lambda blocks and, dually, every
block pair meets in exactly lambda points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .perm import Permutation, PermutationGroup


class DesignError(ValueError):
    """A structure failed a design check; `code` names the violation."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class DesignParams:
    v: int
    k: int
    lam: int

    def __post_init__(self) -> None:
        if self.k * (self.k - 1) != self.lam * (self.v - 1):
            raise ValueError("k(k-1) != lambda(v-1)")

    @property
    def nontrivial(self) -> bool:
        return 2 < self.k < self.v - 1


class IncidenceStructure:
    """Points 0..v-1 and a list of blocks (deduplicated, stored sorted)."""

    def __init__(self, v: int, blocks):
        if v < 1:
            raise ValueError("v must be positive")
        norm = []
        seen = set()
        for blk in blocks:
            fb = frozenset(blk)
            if not fb:
                raise ValueError("empty block")
            if any(not 0 <= pt < v for pt in fb):
                raise ValueError("block point out of range")
            if fb not in seen:
                seen.add(fb)
                norm.append(fb)
        self.v = v
        self.blocks = norm
        self.block_set = seen

    def blocks_sorted(self) -> list[tuple[int, ...]]:
        """Blocks as sorted tuples, ordered lexicographically."""
        return sorted(tuple(sorted(b)) for b in self.blocks)

    def verify_symmetric(self) -> DesignParams:
        """Check the symmetric 2-design conditions, returning (v, k, λ).

        Raises DesignError with a code identifying the first violation:
        block_count, block_size, pair_count, or dual_pair_count.
        """
        v = self.v
        if len(self.blocks) != v:
            raise DesignError(
                "block_count", f"{len(self.blocks)} blocks for {v} points"
            )
        sizes = {len(b) for b in self.blocks}
        if len(sizes) != 1:
            raise DesignError("block_size", f"block sizes are not uniform: {sorted(sizes)}")
        k = sizes.pop()
        if v == 1:
            return DesignParams(1, k, 0)
        pair_counts: dict[tuple[int, int], int] = {}
        for blk in self.blocks:
            for pair in combinations(sorted(blk), 2):
                pair_counts[pair] = pair_counts.get(pair, 0) + 1
        lam = k * (k - 1) // (v - 1) if k * (k - 1) % (v - 1) == 0 else None
        for pair in combinations(range(v), 2):
            count = pair_counts.get(pair, 0)
            if count != lam:
                raise DesignError(
                    "pair_count",
                    f"point pair {pair[0] + 1},{pair[1] + 1} lies on {count} blocks"
                    + (f", expected {lam}" if lam is not None else ""),
                )
        for b1, b2 in combinations(self.blocks, 2):
            meet = len(b1 & b2)
            if meet != lam:
                raise DesignError(
                    "dual_pair_count",
                    f"blocks {sorted(b1)} and {sorted(b2)} meet in {meet} points,"
                    f" expected {lam}",
                )
        return DesignParams(v, k, lam)

    def complement(self) -> "IncidenceStructure":
        """Complement each block within the point set."""
        self.verify_symmetric()
        full = frozenset(range(self.v))
        return IncidenceStructure(self.v, [full - b for b in self.blocks])

    def is_automorphism(self, g: Permutation) -> bool:
        if g.degree != self.v:
            raise ValueError("degree mismatch")
        return all(
            frozenset(g(pt) for pt in blk) in self.block_set for blk in self.blocks
        )

    def flags(self) -> list[tuple[int, int]]:
        """All incident (point, block-index) pairs."""
        return [
            (pt, i) for i, blk in enumerate(self.blocks) for pt in sorted(blk)
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IncidenceStructure)
            and self.v == other.v
            and self.block_set == other.block_set
        )

    def __hash__(self):  # pragma: no cover - structures used as dict keys rarely
        return hash((self.v, frozenset(self.block_set)))


def is_flag_transitive(G: PermutationGroup, D: IncidenceStructure) -> bool:
    """True iff G acts transitively on the flags of D.

    Computed as the orbit of one flag directly; every generator must be an
    automorphism of D.
    """
    if G.degree != D.v:
        raise ValueError("degree mismatch")
    for g in G.generators:
        if not D.is_automorphism(g):
            raise ValueError(f"generator {g.cycle_string()} is not an automorphism")
    if not D.blocks:
        raise ValueError("no blocks")
    flag_total = sum(len(b) for b in D.blocks)
    start_block = D.blocks[0]
    start = (min(start_block), start_block)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for pt, blk in frontier:
            for g in G.generators:
                img = (g(pt), frozenset(g(x) for x in blk))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return len(seen) == flag_total


def flag_transitive_two_step(G: PermutationGroup, D: IncidenceStructure) -> bool:
    """Cross-check: point-transitive and G_alpha transitive on blocks on alpha."""
    if len(G.orbit(0)) != D.v:
        return False
    stab = G.point_stabilizer(0)
    through = [b for b in D.blocks if 0 in b]
    if not through:
        return False
    seen = {through[0]}
    frontier = [through[0]]
    while frontier:
        nxt = []
        for blk in frontier:
            for g in stab.generators:
                img = frozenset(g(x) for x in blk)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return len(seen) == len(through)


def orbit_design(G: PermutationGroup, base_block) -> IncidenceStructure:
    """Design whose blocks are the G-orbit of the base block."""
    base = frozenset(base_block)
    if not base:
        raise ValueError("base block is empty")
    if any(not 0 <= pt < G.degree for pt in base):
        raise ValueError("base block point out of range")
    seen = {base}
    frontier = [base]
    while frontier:
        nxt = []
        for blk in frontier:
            for g in G.generators:
                img = frozenset(g(pt) for pt in blk)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return IncidenceStructure(G.degree, seen)


def read_design_file(path) -> IncidenceStructure:
    """Read a design file: `v N` header, then one block per line (1-based)."""
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2 or header[0] != "v":
            raise ValueError(f"{path}: expected 'v N' header")
        v = int(header[1])
        blocks = []
        for line in fh:
            line = line.strip()
            if line:
                blocks.append([int(s) - 1 for s in line.split(",")])
        return IncidenceStructure(v, blocks)


def write_design_file(path, D: IncidenceStructure) -> None:
    with open(path, "w") as fh:
        fh.write(f"v {D.v}\n")
        for blk in D.blocks_sorted():
            fh.write(",".join(str(pt + 1) for pt in blk) + "\n")
