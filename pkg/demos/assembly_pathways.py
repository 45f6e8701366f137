"""
Assembly pathways of strings
============================

A string is assembled from its unit symbols by repeatedly concatenating
two previously available objects; built objects can be reused for free.
The assembly index is the minimum number of joins.
"""

from seqcomplexity import (
    assembly_index_exact,
    assembly_index_split,
    assembly_tree_dot,
    verify_pathway,
)

# the classic worked example: 11 characters, 7 joins
index, pathway = assembly_index_exact("ABRACADABRA")
print(f"assembly index of ABRACADABRA = {index}")
for i, step in enumerate(pathway.steps):
    left = step.left if isinstance(step.left, str) else f"#{step.left}"
    right = step.right if isinstance(step.right, str) else f"#{step.right}"
    print(f"  step {i}: {left} + {right} -> {step.result}")
print("witness verifies:", verify_pathway(pathway, "ABRACADABRA"))

# doubling: a run of 2^k identical symbols needs exactly k joins
for k in range(5):
    s = "A" * (2**k)
    print(f"A^{2**k:<2d} -> index {assembly_index_exact(s)[0]}")

# the polynomial-time factoring heuristic upper-bounds the exact index
for s in ("ABRACADABRA", "ABABABABABAB", "AABBAABBAABB", "ABCDEFG"):
    exact, _ = assembly_index_exact(s)
    upper, _ = assembly_index_split(s)
    print(f"{s:>14s}: exact {exact:2d}  split {upper:2d}")

# pathways render as DOT for graphviz
with open("abracadabra_assembly.dot", "w") as fh:
    fh.write(assembly_tree_dot(pathway))
print("wrote abracadabra_assembly.dot (render with: dot -Tpng ...)")
