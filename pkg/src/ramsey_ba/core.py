"""Finite Boolean algebras carrying an increasing chain of ideals.

An algebra here is the power set of a finite atom set together with an
increasing chain of t ideals, encoded per atom: an atom at level j first
appears in the j-th ideal, an atom at level OUT lies in no ideal.  An
element belongs to the j-th ideal exactly when every atom below it has
level at most j.  Atoms are stored sorted by level (canonical order), so an
algebra is determined by its chain length and its nondecreasing level
sequence.

Three classes of such algebras are distinguished:

* BJ: at least one atom outside every ideal,
* BU: a single ideal (t = 1) and exactly one atom outside it,
* BJU: exactly one atom outside every ideal.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import total_ordering
from typing import Iterable, Iterator, Sequence

from .errors import (
    ChainMismatch,
    EmptyAtomSet,
    LevelOutOfRange,
    MixedAlgebras,
)


def _restore_out() -> "_OutsideLevel":
    return OUT


@total_ordering
class _OutsideLevel:
    """Level of an atom lying in no ideal; greater than every ideal index."""

    __slots__ = ()

    def __lt__(self, other):
        if isinstance(other, (int, _OutsideLevel)):
            return False
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, _OutsideLevel)

    def __hash__(self):
        return hash("ramsey_ba.level.OUT")

    def __repr__(self):
        return "OUT"

    def __reduce__(self):
        # unpickle to the module singleton so identity checks survive
        # process boundaries (worker pools pickle algebras)
        return (_restore_out, ())


OUT = _OutsideLevel()

Level = int | _OutsideLevel


def level_key(level: Level) -> tuple[int, int]:
    """Sort key putting ideal indices first, OUT last."""
    if isinstance(level, _OutsideLevel):
        return (1, 0)
    return (0, level)


def level_alphabet(chain_length: int) -> tuple[Level, ...]:
    """All levels available at a given chain length, in increasing order."""
    return tuple(range(chain_length)) + (OUT,)


class ClassKind(Enum):
    BJ = "bj"
    BU = "bu"
    BJU = "bju"


@dataclass(frozen=True)
class LabeledAlgebra:
    """A finite Boolean algebra with an ideal chain, in canonical atom order.

    chain_length is the number t of ideals; levels[a] is the level of atom a
    and the sequence is nondecreasing.  sort_perm records where each canonical
    atom sat in the constructor's input (sort_perm[k] = original position of
    the atom now at k); it is bookkeeping, not identity, and is excluded from
    equality.
    """

    chain_length: int
    levels: tuple[Level, ...]
    sort_perm: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def n_atoms(self) -> int:
        return len(self.levels)

    @property
    def atoms(self) -> range:
        return range(len(self.levels))


def make_algebra(levels: Sequence[Level], chain_length: int) -> LabeledAlgebra:
    """Build an algebra from per-atom levels, re-sorting into canonical order."""
    if chain_length < 0:
        raise LevelOutOfRange(f"chain_length must be nonnegative, got {chain_length}")
    levels = tuple(levels)
    if not levels:
        raise EmptyAtomSet("an algebra needs at least one atom")
    for pos, level in enumerate(levels):
        if isinstance(level, _OutsideLevel):
            continue
        if isinstance(level, bool) or not isinstance(level, int):
            raise LevelOutOfRange(f"levels[{pos}] is not an ideal index or OUT: {level!r}")
        if not 0 <= level < chain_length:
            raise LevelOutOfRange(
                f"levels[{pos}] = {level} outside 0 .. {chain_length - 1}"
            )
    perm = tuple(sorted(range(len(levels)), key=lambda a: level_key(levels[a])))
    return LabeledAlgebra(
        chain_length=chain_length,
        levels=tuple(levels[a] for a in perm),
        sort_perm=perm,
    )


@dataclass(frozen=True)
class Element:
    """An element of a fixed algebra: the join of a set of its atoms."""

    algebra: LabeledAlgebra
    atoms: frozenset[int]

    def __post_init__(self):
        if not self.atoms <= set(self.algebra.atoms):
            bad = sorted(set(self.atoms) - set(self.algebra.atoms))
            raise ValueError(f"atom indices {bad} outside the algebra")

    def __and__(self, other: "Element") -> "Element":
        return meet(self, other)

    def __or__(self, other: "Element") -> "Element":
        return join(self, other)

    def __invert__(self) -> "Element":
        return complement(self)

    def __le__(self, other: "Element") -> bool:
        return leq(self, other)


def element(algebra: LabeledAlgebra, atoms: Iterable[int]) -> Element:
    return Element(algebra, frozenset(atoms))


def zero(algebra: LabeledAlgebra) -> Element:
    return Element(algebra, frozenset())


def one(algebra: LabeledAlgebra) -> Element:
    return Element(algebra, frozenset(algebra.atoms))


def atom_element(algebra: LabeledAlgebra, atom: int) -> Element:
    return element(algebra, (atom,))


def elements(algebra: LabeledAlgebra) -> Iterator[Element]:
    """All 2^n elements, by size then lexicographically by atom set."""
    for size in range(algebra.n_atoms + 1):
        for atoms in itertools.combinations(algebra.atoms, size):
            yield Element(algebra, frozenset(atoms))


def _same_algebra(x: Element, y: Element) -> None:
    if x.algebra != y.algebra:
        raise MixedAlgebras("operands live in different algebras")


def meet(x: Element, y: Element) -> Element:
    _same_algebra(x, y)
    return Element(x.algebra, x.atoms & y.atoms)


def join(x: Element, y: Element) -> Element:
    _same_algebra(x, y)
    return Element(x.algebra, x.atoms | y.atoms)


def complement(x: Element) -> Element:
    return Element(x.algebra, frozenset(x.algebra.atoms) - x.atoms)


def leq(x: Element, y: Element) -> bool:
    _same_algebra(x, y)
    return x.atoms <= y.atoms


def in_ideal(algebra: LabeledAlgebra, x: Element, j: int) -> bool:
    """True iff x lies in the j-th ideal: every atom of x has level at most j."""
    if x.algebra != algebra:
        raise MixedAlgebras("element does not belong to the given algebra")
    if not 0 <= j < algebra.chain_length:
        raise LevelOutOfRange(f"ideal index {j} outside 0 .. {algebra.chain_length - 1}")
    return all(algebra.levels[a] <= j for a in x.atoms)


def class_membership(algebra: LabeledAlgebra, kind: ClassKind) -> bool:
    """Decide membership in BJ, BU, or BJU from the level signature."""
    outside = sum(1 for level in algebra.levels if level == OUT)
    if kind is ClassKind.BJ:
        return outside >= 1
    if kind is ClassKind.BU:
        return algebra.chain_length == 1 and outside == 1
    if kind is ClassKind.BJU:
        return outside == 1
    raise ValueError(f"unknown class kind {kind!r}")


def signature_iso(a: LabeledAlgebra, b: LabeledAlgebra) -> bool:
    """Isomorphism test: equal canonical level sequences."""
    if a.chain_length != b.chain_length:
        raise ChainMismatch(
            f"chain lengths differ: {a.chain_length} vs {b.chain_length}"
        )
    return a.levels == b.levels


def generated_subalgebra(
    algebra: LabeledAlgebra, gens: Iterable[Element]
) -> tuple[LabeledAlgebra, "Embedding"]:
    """Subalgebra generated by gens, with the block map embedding it back.

    Atoms of the subalgebra are the classes of algebra atoms sharing a
    membership fingerprint across the generators; the class containing an
    atom of maximal index comes last, which keeps levels nondecreasing.
    Returns the subalgebra and the embedding of it into the host.
    """
    from .embed import Embedding  # local import, embed builds on core

    gens = list(gens)
    for g in gens:
        if g.algebra != algebra:
            raise MixedAlgebras("generator does not belong to the given algebra")
    fingerprint: dict[tuple[bool, ...], list[int]] = {}
    for a in algebra.atoms:
        fingerprint.setdefault(tuple(a in g.atoms for g in gens), []).append(a)
    blocks = sorted(fingerprint.values(), key=max)
    block_of = [0] * algebra.n_atoms
    for i, block in enumerate(blocks):
        for a in block:
            block_of[a] = i
    sub = make_algebra(
        [max((algebra.levels[a] for a in block), key=level_key) for block in blocks],
        algebra.chain_length,
    )
    return sub, Embedding(
        small=sub, big=algebra, block_of=tuple(block_of), ordered=True
    )


def signature_json(algebra: LabeledAlgebra) -> list[int | str]:
    """Level sequence in the wire convention: ideal index or \"out\"."""
    return [l if isinstance(l, int) else "out" for l in algebra.levels]


def enumerate_signatures(
    n_atoms: int, chain_length: int
) -> Iterator[tuple[Level, ...]]:
    """All canonical level sequences of a given length, lexicographically."""
    yield from itertools.combinations_with_replacement(
        level_alphabet(chain_length), n_atoms
    )


def enumerate_algebras(
    max_atoms: int, chain_length: int, kind: ClassKind | None = None
) -> Iterator[LabeledAlgebra]:
    """All algebras with 1 .. max_atoms atoms, optionally filtered by class."""
    for n in range(1, max_atoms + 1):
        for signature in enumerate_signatures(n, chain_length):
            algebra = make_algebra(signature, chain_length)
            if kind is None or class_membership(algebra, kind):
                yield algebra


def atom_partitions(n: int) -> Iterator[list[list[int]]]:
    """Partitions of range(n) as block lists, in restricted-growth order."""
    if n == 0:
        yield []
        return

    def grow(code: list[int], used: int):
        pos = len(code)
        if pos == n:
            blocks: list[list[int]] = [[] for _ in range(used)]
            for a, b in enumerate(code):
                blocks[b].append(a)
            yield blocks
            return
        for b in range(used + 1):
            code.append(b)
            yield from grow(code, max(used, b + 1))
            code.pop()

    yield from grow([0], 1)
