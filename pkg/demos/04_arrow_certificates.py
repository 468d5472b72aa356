"""
Arrow relations with machine-checkable certificates
===================================================
"""

from ramsey_ba import OUT, arrows, make_algebra, recheck_bad_coloring, signature_json
from ramsey_ba.serialize import certificate_to_json, format_io

a = make_algebra([0, OUT], 1)
c = make_algebra([0, 0, OUT], 1)

# c -> (c)^a_2 fails: the only copy of C in itself carries three copies of
# A, and a 2-coloring can split them.
cert = arrows(c, c, a, 2)
print("verdict:", cert.verdict)
print(
    "search stats:", cert.stats.nodes, "nodes,",
    cert.stats.a_copies, "copies of A,", cert.stats.b_copies, "copies of B",
)
for embedding, color in cert.bad_coloring.entries:
    print("  copy", embedding.block_of, "-> color", color)
print("independent recheck:", recheck_bad_coloring(c, c, a, 2, cert.bad_coloring))

# A bigger host turns the verdict around.
host = make_algebra([0, 0, 0, 0, 0, OUT], 1)
cert = arrows(host, c, a, 2)
print("host", signature_json(host), "verdict:", cert.verdict)

# Certificates serialize to canonical JSON for the command line.
print(format_io(certificate_to_json(arrows(c, c, a, 2))))
