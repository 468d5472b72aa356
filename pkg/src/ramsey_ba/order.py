"""Proper atom orders and the natural (antilexicographic) element order.

A proper order lists atoms with nondecreasing levels, atoms outside every
ideal last.  It extends to the whole algebra antilexicographically: two
elements compare at the largest atom in their symmetric difference, and the
side containing that atom is the larger.  The classes handled here are order
forgetful: any two proper orders of isomorphic algebras give isomorphic
ordered structures, because both read off the same nondecreasing level
sequence.
"""
from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from .core import Element, LabeledAlgebra, level_key, signature_json
from .errors import ChainMismatch, ImproperOrder, MixedAlgebras

AtomOrder = tuple[int, ...]

LT, EQ, GT = -1, 0, 1


def _check_permutation(algebra: LabeledAlgebra, ord: Sequence[int]) -> AtomOrder:
    ord = tuple(ord)
    if sorted(ord) != list(algebra.atoms):
        raise ValueError(f"not a permutation of the atom set: {ord}")
    return ord


def is_proper(algebra: LabeledAlgebra, ord: Sequence[int]) -> bool:
    """True iff levels are nondecreasing along ord."""
    ord = _check_permutation(algebra, ord)
    keys = [level_key(algebra.levels[a]) for a in ord]
    return all(keys[i] <= keys[i + 1] for i in range(len(keys) - 1))


def canonical_order(algebra: LabeledAlgebra) -> AtomOrder:
    """The storage order itself, which is always proper."""
    return tuple(algebra.atoms)


def antilex_compare(x: Element, y: Element, ord: Sequence[int]) -> int:
    """Compare two elements antilexicographically along ord; returns -1/0/1.

    The deciding atom is the ord-largest one on which x and y differ.
    """
    if x.algebra != y.algebra:
        raise MixedAlgebras("comparing elements of different algebras")
    ord = _check_permutation(x.algebra, ord)
    diff = x.atoms ^ y.atoms
    if not diff:
        return EQ
    position = {a: i for i, a in enumerate(ord)}
    deciding = max(diff, key=position.__getitem__)
    return GT if deciding in x.atoms else LT


def level_blocks(algebra: LabeledAlgebra) -> list[list[int]]:
    """Canonical atoms grouped into maximal runs of equal level."""
    blocks: list[list[int]] = []
    for a in algebra.atoms:
        if blocks and algebra.levels[blocks[-1][-1]] == algebra.levels[a]:
            blocks[-1].append(a)
        else:
            blocks.append([a])
    return blocks


def enumerate_proper_orders(algebra: LabeledAlgebra) -> Iterator[AtomOrder]:
    """All proper orders, lexicographically.

    A proper order permutes atoms within each level run of the canonical
    order, so the count is the product of the run factorials.
    """
    runs = [itertools.permutations(block) for block in level_blocks(algebra)]
    for parts in itertools.product(*runs):
        yield tuple(itertools.chain.from_iterable(parts))


def count_proper_orders(algebra: LabeledAlgebra) -> int:
    return math.prod(math.factorial(len(b)) for b in level_blocks(algebra))


def ordered_isomorphic(
    a: LabeledAlgebra, ord_a: Sequence[int], b: LabeledAlgebra, ord_b: Sequence[int]
) -> bool:
    """True iff the level sequences read along the two proper orders agree."""
    if a.chain_length != b.chain_length:
        raise ChainMismatch(
            f"chain lengths differ: {a.chain_length} vs {b.chain_length}"
        )
    ord_a = _check_permutation(a, ord_a)
    ord_b = _check_permutation(b, ord_b)
    if not is_proper(a, ord_a):
        raise ImproperOrder(f"not a proper order: {ord_a}")
    if not is_proper(b, ord_b):
        raise ImproperOrder(f"not a proper order: {ord_b}")
    return [a.levels[i] for i in ord_a] == [b.levels[i] for i in ord_b]


def forgetfulness_report(max_atoms: int, chain_length: int) -> dict:
    """Sweep all algebras up to a size: order forgetfulness plus order counts.

    For every algebra, every pair of proper orders must be ordered-isomorphic
    and the enumerated count must match the run-factorial product.
    """
    from .core import enumerate_algebras

    algebras = 0
    orders = 0
    violations: list[dict] = []
    for algebra in enumerate_algebras(max_atoms, chain_length):
        algebras += 1
        proper = list(enumerate_proper_orders(algebra))
        orders += len(proper)
        if len(proper) != count_proper_orders(algebra):
            violations.append(
                {
                    "levels": signature_json(algebra),
                    "reason": "count mismatch",
                    "enumerated": len(proper),
                    "expected": count_proper_orders(algebra),
                }
            )
        for ord_a, ord_b in itertools.product(proper, repeat=2):
            if not ordered_isomorphic(algebra, ord_a, algebra, ord_b):
                violations.append(
                    {
                        "levels": signature_json(algebra),
                        "reason": "orders not isomorphic",
                        "ord_a": list(ord_a),
                        "ord_b": list(ord_b),
                    }
                )
    return {
        "max_atoms": max_atoms,
        "chain_length": chain_length,
        "algebras_checked": algebras,
        "proper_orders_checked": orders,
        "violations": violations,
    }
