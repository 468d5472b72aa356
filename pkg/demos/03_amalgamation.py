"""
Amalgamating two embeddings over a shared base
==============================================
"""

from ramsey_ba import (
    ClassKind,
    OUT,
    amalgamate,
    check_ap,
    check_hp,
    enumerate_embeddings,
    make_algebra,
    signature_json,
)

a = make_algebra([OUT], 1)
b = make_algebra([0, OUT], 1)
c = make_algebra([OUT, OUT], 1)
f = enumerate_embeddings(a, b, "ordered")[0]
g = enumerate_embeddings(a, c, "ordered")[0]

# The amalgam lives on the union of both atom sets with the block maxima
# identified; r and s are the embeddings completing the commuting square.
result = amalgamate(ClassKind.BJ, a, b, c, f, g)
print("D:", signature_json(result.d))
print("r:", result.r.block_of)
print("s:", result.s.block_of)
print("identified maxima:", result.identified)

# The class suites sweep every instance within a size bound.
hp = check_hp(ClassKind.BJ, 4, 2)
print(
    "hereditary sweep:", hp["instances"], "subalgebras,",
    len(hp["violations"]), "violations",
)
ap = check_ap(ClassKind.BJ, 3, 1, workers=2)
print(
    "amalgamation sweep:", ap["instances"], "squares,",
    len(ap["violations"]), "failures",
)
