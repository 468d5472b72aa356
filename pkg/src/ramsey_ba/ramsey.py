"""Arrow relations with machine-checkable certificates.

The arrow check colors ordered copies (copies and ordered embeddings agree
by rigidity) and is exact: a failed relation ships a bad coloring that a
direct scan re-validates, a held relation means the backtracking search
exhausted every coloring.  The search works on the hypergraph whose
vertices are the ordered copies of A in C and whose edges collect the
copies lying inside each ordered copy of B; a bad coloring is one leaving
every edge non-monochromatic.  Vertices are numbered in enumeration order,
the first vertex is pinned to color 0, branching is first-fail (most
forbidden colors, lowest index breaking ties), so certificates are
deterministic.

The witness builders follow the recursive scheme: split B at its minimal
occupied level, solve the level-free problem by brute-force ascent, solve
the remainder recursively with the color count inflated by the number of
level-free B-copies in the base witness, then reassemble with lift and
star.  Constructions are always re-verified, never trusted.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    ClassKind,
    LabeledAlgebra,
    OUT,
    class_membership,
    enumerate_algebras,
    level_key,
    make_algebra,
    signature_json,
)
from .embed import Embedding, compose, enumerate_embeddings, lift, reduct, star
from .errors import (
    BoundExceeded,
    ChainMismatch,
    NotAnEmbedding,
    NotInClass,
    VerificationFailed,
)


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors to the ordered copies of A in C."""

    entries: tuple[tuple[Embedding, int], ...]

    def as_dict(self) -> dict[Embedding, int]:
        return dict(self.entries)


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    a_copies: int
    b_copies: int


@dataclass(frozen=True)
class ArrowCertificate:
    """Outcome of an arrow check.

    verdict is "holds" or "fails"; a failing certificate carries the bad
    coloring that defeats every ordered B-copy.  vacuous marks the
    degenerate failure where B has no ordered copy in C at all.
    """

    verdict: str
    bad_coloring: Coloring | None
    stats: SearchStats
    vacuous: bool = False


def _search_bad_coloring(
    n_vertices: int, edges: list[tuple[int, ...]], k: int
) -> tuple[list[int] | None, int]:
    """First bad coloring in branch order, or None after exhausting all."""
    edges = sorted(set(edges))
    touching: list[list[int]] = [[] for _ in range(n_vertices)]
    for ei, edge in enumerate(edges):
        for v in edge:
            touching[v].append(ei)

    color = [-1] * n_vertices
    forbid = [0] * n_vertices
    # per edge: count of assigned vertices while still single-colored
    e_count = [0] * len(edges)
    e_color = [-1] * len(edges)
    e_open = [True] * len(edges)
    full = (1 << k) - 1
    nodes = 0

    def assign(v: int, col: int, trail: list) -> bool:
        color[v] = col
        trail.append((0, v, -1))
        for ei in touching[v]:
            if not e_open[ei]:
                continue
            if e_count[ei] == 0 or e_color[ei] == col:
                trail.append((1, ei, e_color[ei]))
                e_color[ei] = col
                e_count[ei] += 1
                size = len(edges[ei])
                if e_count[ei] == size:
                    return False
                if e_count[ei] == size - 1:
                    u = next(x for x in edges[ei] if color[x] < 0)
                    bit = 1 << col
                    if not forbid[u] & bit:
                        forbid[u] |= bit
                        trail.append((2, u, bit))
                        if forbid[u] == full:
                            return False
            else:
                e_open[ei] = False
                trail.append((3, ei, -1))
        return True

    def undo(trail: list) -> None:
        for kind, idx, payload in reversed(trail):
            if kind == 0:
                color[idx] = -1
            elif kind == 1:
                e_color[idx] = payload
                e_count[idx] -= 1
            elif kind == 2:
                forbid[idx] &= ~payload
            else:
                e_open[idx] = True

    def select() -> int:
        best, best_forbidden = -1, -1
        for v in range(n_vertices):
            if color[v] < 0:
                count = bin(forbid[v]).count("1")
                if count > best_forbidden:
                    best, best_forbidden = v, count
        return best

    def dfs() -> bool:
        nonlocal nodes
        v = select()
        if v < 0:
            return True
        first_decision = nodes == 0
        for col in range(k):
            if forbid[v] & (1 << col):
                continue
            nodes += 1
            trail: list = []
            if assign(v, col, trail) and dfs():
                return True
            undo(trail)
            if first_decision:
                break  # color names are symmetric; pin the first vertex
        return False

    if dfs():
        return list(color), nodes
    return None, nodes


def recheck_bad_coloring(
    c: LabeledAlgebra, b: LabeledAlgebra, a: LabeledAlgebra, k: int, coloring: Coloring
) -> bool:
    """Validate a bad coloring by direct scan, independent of the search."""
    copies_a = enumerate_embeddings(a, c, mode="ordered")
    assigned = dict(coloring.entries)
    if len(coloring.entries) != len(copies_a) or set(assigned) != set(copies_a):
        return False
    if any(not 0 <= col < k for col in assigned.values()):
        return False
    inner = enumerate_embeddings(a, b, mode="ordered")
    for outer in enumerate_embeddings(b, c, mode="ordered"):
        seen = {assigned[compose(outer, h)] for h in inner}
        if len(seen) <= 1:
            return False
    return True


@lru_cache(maxsize=None)
def _arrows(
    c: LabeledAlgebra, b: LabeledAlgebra, a: LabeledAlgebra, k: int
) -> ArrowCertificate:
    copies_a = enumerate_embeddings(a, c, mode="ordered")
    copies_b = enumerate_embeddings(b, c, mode="ordered")
    inner = enumerate_embeddings(a, b, mode="ordered")
    if not copies_b:
        bad = Coloring(tuple((e, 0) for e in copies_a))
        return ArrowCertificate(
            "fails", bad, SearchStats(0, len(copies_a), 0), vacuous=True
        )
    if k == 1 or len(inner) <= 1:
        # every edge has at most one vertex, or one color: always monochromatic
        return ArrowCertificate(
            "holds", None, SearchStats(0, len(copies_a), len(copies_b))
        )
    index = {e: i for i, e in enumerate(copies_a)}
    edges = [
        tuple(sorted(index[compose(outer, h)] for h in inner)) for outer in copies_b
    ]
    assignment, nodes = _search_bad_coloring(len(copies_a), edges, k)
    stats = SearchStats(nodes, len(copies_a), len(copies_b))
    if assignment is None:
        return ArrowCertificate("holds", None, stats)
    bad = Coloring(tuple((e, assignment[i]) for i, e in enumerate(copies_a)))
    certificate = ArrowCertificate("fails", bad, stats)
    if not recheck_bad_coloring(c, b, a, k, bad):
        raise VerificationFailed(
            "search returned a coloring the direct scan rejects",
            certificate=certificate,
        )
    return certificate


def arrows(
    c: LabeledAlgebra, b: LabeledAlgebra, a: LabeledAlgebra, k: int
) -> ArrowCertificate:
    """Decide whether every k-coloring of A-copies in C has a monochromatic B-copy."""
    if not (a.chain_length == b.chain_length == c.chain_length):
        raise ChainMismatch("arrow operands must share the chain length")
    if k < 1:
        raise ValueError("at least one color is required")
    return _arrows(c, b, a, k)


def dual_ramsey_oracle(
    ar: LabeledAlgebra, br: LabeledAlgebra, k: int, max_atoms: int
) -> LabeledAlgebra:
    """Smallest level-free algebra C0 with arrows(C0, br, ar, k), by ascent."""
    if ar.chain_length != 0 or br.chain_length != 0:
        raise ChainMismatch("oracle operands must be level-free")
    if ar.n_atoms > br.n_atoms:
        raise NotAnEmbedding("first operand must embed into the second")
    if k < 1:
        raise ValueError("at least one color is required")
    for n in range(br.n_atoms, max_atoms + 1):
        candidate = make_algebra([OUT] * n, 0)
        if arrows(candidate, br, ar, k).verdict == "holds":
            return candidate
    raise BoundExceeded(
        f"no level-free witness for ({ar.n_atoms} -> {br.n_atoms} atoms,"
        f" {k} colors) within {max_atoms} atoms"
    )


def _split_above(algebra: LabeledAlgebra, j: int) -> LabeledAlgebra:
    kept = [lv for lv in algebra.levels if level_key(lv) > (0, j)]
    return make_algebra(kept, algebra.chain_length)


def _assemble_witness(
    a: LabeledAlgebra, b: LabeledAlgebra, k: int, max_atoms: int
) -> LabeledAlgebra:
    occupied = [lv for lv in b.levels if isinstance(lv, int)]
    c0 = dual_ramsey_oracle(reduct(a), reduct(b), k, max_atoms)
    if not occupied:
        return make_algebra([OUT] * c0.n_atoms, b.chain_length)
    j0 = min(occupied)
    inflation = len(enumerate_embeddings(reduct(b), c0, mode="ordered"))
    c1 = _assemble_witness(
        _split_above(a, j0), _split_above(b, j0), k * inflation, max_atoms
    )
    return star(lift(c0, j0, b.chain_length), c1)


def _check_witness_inputs(
    kind: ClassKind, a: LabeledAlgebra, b: LabeledAlgebra, k: int
) -> None:
    for algebra, name in ((a, "A"), (b, "B")):
        if not class_membership(algebra, kind):
            raise NotInClass(
                f"{name} with levels {signature_json(algebra)} is not in {kind.value}"
            )
    if a.chain_length != b.chain_length:
        raise ChainMismatch("witness operands must share the chain length")
    if not enumerate_embeddings(a, b, mode="ordered"):
        raise NotAnEmbedding("A must embed into B")
    if k < 1:
        raise ValueError("at least one color is required")


def construct_witness(
    kind: ClassKind, a: LabeledAlgebra, b: LabeledAlgebra, k: int, max_atoms: int
) -> tuple[LabeledAlgebra, ArrowCertificate]:
    """Build a Ramsey witness by the level-splitting recursion and verify it."""
    _check_witness_inputs(kind, a, b, k)
    c = _assemble_witness(a, b, k, max_atoms)
    certificate = arrows(c, b, a, k)
    if not class_membership(c, kind):
        raise VerificationFailed(
            f"constructed witness {signature_json(c)} left the class {kind.value}",
            certificate=certificate,
        )
    if certificate.verdict != "holds":
        raise VerificationFailed(
            f"constructed witness {signature_json(c)} fails its arrow check",
            certificate=certificate,
        )
    return c, certificate


def min_witness(
    kind: ClassKind, a: LabeledAlgebra, b: LabeledAlgebra, k: int, max_atoms: int
) -> tuple[LabeledAlgebra, int] | None:
    """Smallest class member C with arrows(C, b, a, k), ties by signature."""
    _check_witness_inputs(kind, a, b, k)
    for candidate in enumerate_algebras(max_atoms, b.chain_length, kind):
        if candidate.n_atoms < b.n_atoms:
            continue
        if arrows(candidate, b, a, k).verdict == "holds":
            return candidate, candidate.n_atoms
    return None
