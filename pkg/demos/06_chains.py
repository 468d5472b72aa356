"""
Maximal subset chains versus proper atom orders
===============================================
"""

from ramsey_ba import (
    OUT,
    chains_extending,
    enumerate_maximal_chains,
    make_algebra,
    phi,
    phi_inverse,
    signature_json,
)

# Every maximal chain from the empty set to the full point set adds one
# point per step; reading the additions backwards gives an atom order.
chain = phi_inverse((0, 1, 2))
print("chain for order (0, 1, 2):", [sorted(s) for s in chain.sets])
print("round trip:", phi(chain, make_algebra([OUT] * 3, 0)))

print("chains on 3 points:", len(enumerate_maximal_chains(3)))

# A chain respects the ideal structure when it passes through every set of
# atoms above a level; those chains correspond exactly to the proper orders.
a = make_algebra([0, 0, OUT], 1)
extending, report = chains_extending(a)
print("algebra:", signature_json(a))
for chain in extending:
    print("  extending chain:", [sorted(s) for s in chain.sets])
print(
    "correspondence:", report["extending_chains"], "chains for",
    report["proper_orders"], "proper orders, matched:", report["matched"],
)
