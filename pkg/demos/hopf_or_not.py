"""Two meet cells, one Hopf and one not.

Meet on Bool4 commutes with the nucleus strongly enough that its Hopf
operator is invertible.  Meet on Two, with the closure that sends both
points to the top on one side, is not: the operator fails at a single
component, and the four characterisations of an adjoint agree about it.
"""
from catkit import zoo
from catkit.hopf import (adjoint_equivalence, fusion_operator_mnd, hopf_operator_mnd,
                         restrict_mnd)

cells = {"Bool4 meet": zoo.nucleus_meet_cell(), "Two meet": zoo.closure_meet_cell()}
for label, cell in cells.items():
    h = hopf_operator_mnd(cell)
    f = fusion_operator_mnd(cell)
    print(f"{label}: hopf invertible={h.invertible} fusion invertible={f.invertible}")
    if not h.invertible:
        x, algebra = h.witness_parts()
        print(f"  fails at object {x} and algebra {algebra}")
        eq = adjoint_equivalence(restrict_mnd(h, algebra), zoo.two_meet_implication().adjunction("1"))
        print("  restricted there:", eq.as_dict())
