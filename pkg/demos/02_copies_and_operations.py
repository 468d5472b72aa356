"""
Copies of one algebra inside another, and the building operations
=================================================================
"""

from ramsey_ba import (
    OUT,
    circ,
    enumerate_embeddings,
    image_copy,
    lift,
    make_algebra,
    reduct,
    signature_json,
    star,
)

small = make_algebra([0, OUT], 1)
big = make_algebra([0, 0, OUT], 1)

# An embedding is a surjective block map from the big atom set onto the
# small one; ordered mode additionally demands increasing block maxima.
print("ordered copies of", signature_json(small), "in", signature_json(big))
for e in enumerate_embeddings(small, big, "ordered"):
    blocks = [sorted(block) for block in e.blocks()]
    print("  block map", e.block_of, "blocks", blocks)
    print("  image:", sorted(sorted(x.atoms) for x in image_copy(e)))

# star concatenates atom lists when levels stay nondecreasing
x = make_algebra([0, 0], 1)
y = make_algebra([OUT], 1)
print("star:", signature_json(star(x, y)))

# circ joins the trailing atoms of the left operand onto the right ones
print("circ:", signature_json(circ(x, y)))

# lift places every atom of a level-free algebra at one level; reduct
# forgets all levels
pure = make_algebra([OUT, OUT, OUT], 0)
lifted = lift(pure, 0, 2)
print("lift:", signature_json(lifted))
print("reduct round trip:", signature_json(reduct(lifted)))
