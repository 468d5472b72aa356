"""
Building labeled algebras and reading off their natural orders
==============================================================
"""

from ramsey_ba import (
    ClassKind,
    OUT,
    antilex_compare,
    canonical_order,
    class_membership,
    element,
    elements,
    enumerate_proper_orders,
    make_algebra,
    signature_json,
)

# Atoms carry levels: the position of the first ideal containing them, or
# OUT when no ideal does.  Construction canonicalizes the storage order.
a = make_algebra([OUT, 0, 1, 0], 2)
print("signature:", signature_json(a))
print("atoms:", list(a.atoms), "chain length:", a.chain_length)

for kind in ClassKind:
    print(f"member of {kind.value}:", class_membership(a, kind))

print("proper atom orders:")
for ord in enumerate_proper_orders(a):
    print("  ", ord)

# The natural order compares two elements at the largest atom where they
# differ; the canonical atom order makes it total with 0 first and 1 last.
ord = canonical_order(a)
ranked = sorted(
    elements(a),
    key=lambda x: tuple(
        1 if atom in x.atoms else 0 for atom in reversed(ord)
    ),
)
print("natural order, smallest to largest:")
for x in ranked:
    print("  atoms", sorted(x.atoms))

x = element(a, [0])
y = element(a, [1, 2])
print("compare {0} vs {1,2}:", antilex_compare(x, y, ord))
