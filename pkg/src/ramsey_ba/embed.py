"""Embeddings between algebras, and the gluing operations on signatures.

An embedding of a small algebra into a big one is recorded contravariantly
as a surjective block map on atoms: block_of[b] names the small atom whose
image absorbs big atom b.  The induced element map sends a small element to
the union of its blocks.  Conditions:

* partition: every block is nonempty,
* levels: the maximal level inside block i equals the small atom i's level,
* ordered (optional): block maxima strictly increase with i, which is
  equivalent to the induced map preserving the natural orders on both sides.

Since atoms are stored level-sorted, the level condition pins each block's
level to its largest atom, and ordered embeddings are rigid: distinct ones
have distinct images, so ordered embeddings are in bijection with copies.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Literal

from .core import (
    OUT,
    Element,
    LabeledAlgebra,
    Level,
    level_key,
    make_algebra,
)
from .errors import (
    ChainMismatch,
    ImproperConcatenation,
    LevelOutOfRange,
    LevelOverlap,
    MixedAlgebras,
    NotAnEmbedding,
    SizeMismatch,
)

Mode = Literal["plain", "ordered"]


@dataclass(frozen=True)
class Embedding:
    """A block map atoms(big) -> atoms(small) meeting the conditions above."""

    small: LabeledAlgebra
    big: LabeledAlgebra
    block_of: tuple[int, ...]
    ordered: bool = False

    def blocks(self) -> list[list[int]]:
        """Big atoms per small atom."""
        out: list[list[int]] = [[] for _ in range(self.small.n_atoms)]
        for b, i in enumerate(self.block_of):
            out[i].append(b)
        return out

    def induced(self, x: Element) -> Element:
        """Image of a small element: the union of its blocks."""
        if x.algebra != self.small:
            raise MixedAlgebras("element does not belong to the small algebra")
        return Element(
            self.big,
            frozenset(b for b, i in enumerate(self.block_of) if i in x.atoms),
        )


def _block_maxima_increasing(block_of: tuple[int, ...], k: int) -> bool:
    maxima = [-1] * k
    for b, i in enumerate(block_of):
        maxima[i] = b
    return all(maxima[i] < maxima[i + 1] for i in range(k - 1))


def validate_embedding(e: Embedding) -> None:
    """Raise NotAnEmbedding unless all conditions hold (ordered only if flagged)."""
    small, big = e.small, e.big
    if small.chain_length != big.chain_length:
        raise ChainMismatch(
            f"chain lengths differ: {small.chain_length} vs {big.chain_length}"
        )
    if len(e.block_of) != big.n_atoms:
        raise NotAnEmbedding(
            f"block map has {len(e.block_of)} entries for {big.n_atoms} atoms"
        )
    if any(not 0 <= i < small.n_atoms for i in e.block_of):
        raise NotAnEmbedding("block map names a nonexistent small atom")
    maxima: list[Level | None] = [None] * small.n_atoms
    for b, i in enumerate(e.block_of):
        if maxima[i] is None or level_key(big.levels[b]) > level_key(maxima[i]):
            maxima[i] = big.levels[b]
    for i, m in enumerate(maxima):
        if m is None:
            raise NotAnEmbedding(f"block {i} is empty")
        if m != small.levels[i]:
            raise NotAnEmbedding(
                f"block {i} has maximal level {m!r}, atom needs {small.levels[i]!r}"
            )
    if e.ordered and not _block_maxima_increasing(e.block_of, small.n_atoms):
        raise NotAnEmbedding("block maxima not increasing for an ordered embedding")


def enumerate_embeddings(
    small: LabeledAlgebra, big: LabeledAlgebra, mode: Mode = "plain"
) -> list[Embedding]:
    """All embeddings of small into big, lexicographic in block_of.

    Plain mode enforces partition and level conditions; ordered mode adds the
    increasing-block-maxima condition.
    """
    if small.chain_length != big.chain_length:
        raise ChainMismatch(
            f"chain lengths differ: {small.chain_length} vs {big.chain_length}"
        )
    if mode not in ("plain", "ordered"):
        raise ValueError(f"unknown mode {mode!r}")
    k, n = small.n_atoms, big.n_atoms
    if k > n:
        return []
    small_keys = [level_key(l) for l in small.levels]
    big_keys = [level_key(l) for l in big.levels]
    found: list[Embedding] = []
    block_of = [0] * n

    # Counting down, hit[i] set once block i holds an atom at exactly its
    # level; empty[i] while block i has no atoms at all.
    hit = [False] * k
    empty = [True] * k

    def place(b: int) -> Iterator[None]:
        if b == n:
            if all(hit):
                yield None
            return
        # prune: the remaining b .. n-1 atoms must fill every still-empty block
        if sum(empty) > n - b:
            return
        for i in range(k):
            key = big_keys[b]
            if key > small_keys[i]:
                continue
            block_of[b] = i
            was_hit, was_empty = hit[i], empty[i]
            hit[i] = hit[i] or key == small_keys[i]
            empty[i] = False
            yield from place(b + 1)
            hit[i], empty[i] = was_hit, was_empty

    for _ in place(0):
        candidate = tuple(block_of)
        if mode == "ordered" and not _block_maxima_increasing(candidate, k):
            continue
        found.append(
            Embedding(small=small, big=big, block_of=candidate, ordered=mode == "ordered")
        )
    return found


def identity_embedding(algebra: LabeledAlgebra) -> Embedding:
    return Embedding(
        small=algebra,
        big=algebra,
        block_of=tuple(algebra.atoms),
        ordered=True,
    )


def compose(outer: Embedding, inner: Embedding) -> Embedding:
    """Function-style composition: inner embeds A into B, outer embeds B into C."""
    if inner.big != outer.small:
        raise MixedAlgebras("embeddings do not compose: middle algebras differ")
    block_of = tuple(inner.block_of[i] for i in outer.block_of)
    return Embedding(
        small=inner.small,
        big=outer.big,
        block_of=block_of,
        ordered=_block_maxima_increasing(block_of, inner.small.n_atoms),
    )


def image_copy(e: Embedding) -> frozenset[Element]:
    """The image subalgebra as a set of 2^k big elements."""
    blocks = e.blocks()
    out = []
    for signs in itertools.product((False, True), repeat=e.small.n_atoms):
        atoms: set[int] = set()
        for i, take in enumerate(signs):
            if take:
                atoms.update(blocks[i])
        out.append(Element(e.big, frozenset(atoms)))
    return frozenset(out)


def star(x: LabeledAlgebra, y: LabeledAlgebra) -> LabeledAlgebra:
    """Concatenate level sequences; defined when the result stays nondecreasing."""
    if x.chain_length != y.chain_length:
        raise ChainMismatch(
            f"chain lengths differ: {x.chain_length} vs {y.chain_length}"
        )
    if level_key(x.levels[-1]) > level_key(y.levels[0]):
        raise ImproperConcatenation(
            f"levels {x.levels[-1]!r} then {y.levels[0]!r} would decrease"
        )
    return make_algebra(x.levels + y.levels, x.chain_length)


def circ(x: LabeledAlgebra, y: LabeledAlgebra) -> LabeledAlgebra:
    """Absorb y into the top of x: keep the first n-m levels of x, then y's.

    Defined for n >= m with every level of x strictly below every level of y.
    With n = m the result is just y's signature; the witness recursion needs
    that degenerate case.
    """
    if x.chain_length != y.chain_length:
        raise ChainMismatch(
            f"chain lengths differ: {x.chain_length} vs {y.chain_length}"
        )
    n, m = x.n_atoms, y.n_atoms
    if n < m:
        raise SizeMismatch(f"left operand has {n} atoms, right needs at most that, got {m}")
    if level_key(x.levels[-1]) >= level_key(y.levels[0]):
        raise LevelOverlap(
            f"levels of the left operand must stay strictly below the right's:"
            f" {x.levels[-1]!r} vs {y.levels[0]!r}"
        )
    return make_algebra(x.levels[: n - m] + y.levels, x.chain_length)


def lift(pure: LabeledAlgebra, j: int, chain_length: int) -> LabeledAlgebra:
    """Place every atom of a pure algebra at ideal level j."""
    if pure.chain_length != 0 or any(l != OUT for l in pure.levels):
        raise ValueError("lift expects a pure algebra (chain length 0)")
    if not 0 <= j < chain_length:
        raise LevelOutOfRange(f"level {j} outside 0 .. {chain_length - 1}")
    return make_algebra([j] * pure.n_atoms, chain_length)


def reduct(x: LabeledAlgebra) -> LabeledAlgebra:
    """Forget the ideals: same atoms, all levels OUT, chain length 0."""
    return make_algebra([OUT] * x.n_atoms, 0)
