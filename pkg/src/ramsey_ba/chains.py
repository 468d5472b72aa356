"""Maximal subset chains versus atom orders, at finite scale.

Points are the atoms; every maximal chain of subsets from the empty set to
the full set adds one point per step, so chains correspond to the n!
addition sequences.  Reading a chain off in reverse addition order gives an
atom order, and a chain passes through every upper set (the atoms with
level strictly above some ideal position) exactly when that order is
proper.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Sequence

from .core import LabeledAlgebra, level_key, signature_json
from .errors import SizeMismatch
from .order import AtomOrder, enumerate_proper_orders, is_proper


@dataclass(frozen=True)
class MaximalChain:
    """Strictly increasing subset chain from empty to full, one point a step."""

    sets: tuple[frozenset[int], ...]

    @property
    def n_points(self) -> int:
        return len(self.sets) - 1

    def addition_sequence(self) -> tuple[int, ...]:
        return tuple(
            next(iter(self.sets[i + 1] - self.sets[i])) for i in range(self.n_points)
        )


def make_chain(sets: Iterable[Iterable[int]]) -> MaximalChain:
    members = tuple(frozenset(s) for s in sets)
    if not members or members[0] != frozenset():
        raise ValueError("chain must start at the empty set")
    n = len(members) - 1
    if members[-1] != frozenset(range(n)):
        raise ValueError("chain must end at the full point set")
    for i in range(n):
        step = members[i + 1] - members[i]
        if len(step) != 1 or not members[i] <= members[i + 1]:
            raise ValueError("each chain step must add exactly one point")
    return MaximalChain(sets=members)


def _chain_from_additions(additions: Sequence[int]) -> MaximalChain:
    sets = [frozenset()]
    for p in additions:
        sets.append(sets[-1] | {p})
    return MaximalChain(sets=tuple(sets))


def enumerate_maximal_chains(n: int) -> list[MaximalChain]:
    """All n! chains, lexicographic in addition sequence."""
    if n < 1:
        raise ValueError("at least one point is required")
    return [_chain_from_additions(seq) for seq in permutations(range(n))]


def phi(chain: MaximalChain, algebra: LabeledAlgebra) -> AtomOrder:
    """Atom order induced by a chain: reverse of the addition order.

    The first chain member containing a point shrinks as the point is added
    later, so later additions are order-smaller.
    """
    if chain.n_points != algebra.n_atoms:
        raise SizeMismatch(
            f"chain over {chain.n_points} points against {algebra.n_atoms} atoms"
        )
    return tuple(reversed(chain.addition_sequence()))


def phi_inverse(ord: Sequence[int]) -> MaximalChain:
    """The chain adding points in reverse order of ord."""
    ord = tuple(ord)
    if sorted(ord) != list(range(len(ord))):
        raise ValueError(f"not a permutation of the point set: {ord}")
    return _chain_from_additions(tuple(reversed(ord)))


def atoms_above(algebra: LabeledAlgebra, j: int) -> frozenset[int]:
    """Atoms with level strictly above j; an element is in ideal j iff disjoint from this set."""
    if not 0 <= j < algebra.chain_length:
        raise ValueError(f"no ideal at position {j}")
    return frozenset(
        a for a in algebra.atoms if level_key(algebra.levels[a]) > (0, j)
    )


def filter_family(algebra: LabeledAlgebra) -> tuple[frozenset[int], ...]:
    """The family of upper sets over the whole chain, decreasing in j."""
    return tuple(atoms_above(algebra, j) for j in range(algebra.chain_length))


def chains_extending(algebra: LabeledAlgebra) -> tuple[list[MaximalChain], dict]:
    """Chains containing every upper set, with the correspondence report.

    The report checks both directions: chains through the family map under
    phi exactly onto the proper orders, and every chain missing a family
    member maps to an improper order.
    """
    family = filter_family(algebra)
    extending: list[MaximalChain] = []
    outside_all_improper = True
    for chain in enumerate_maximal_chains(algebra.n_atoms):
        if all(e in chain.sets for e in family):
            extending.append(chain)
        elif is_proper(algebra, phi(chain, algebra)):
            outside_all_improper = False
    mapped = [phi(chain, algebra) for chain in extending]
    proper = set(enumerate_proper_orders(algebra))
    report = {
        "signature": signature_json(algebra),
        "chain_length": algebra.chain_length,
        "n_atoms": algebra.n_atoms,
        "total_chains": factorial(algebra.n_atoms),
        "extending_chains": len(extending),
        "proper_orders": len(proper),
        "extending_map_to_proper": all(o in proper for o in mapped),
        "map_is_injective": len(set(mapped)) == len(mapped),
        "map_is_onto": set(mapped) >= proper,
        "non_extending_map_to_improper": outside_all_improper,
    }
    report["matched"] = all(
        report[key]
        for key in (
            "extending_map_to_proper",
            "map_is_injective",
            "map_is_onto",
            "non_extending_map_to_improper",
        )
    )
    return extending, report
