"""Lift meet -| implication from Bool4 to the algebras of the nucleus.

The algebras form the chain a <= 1.  The lifted meet and lifted implication
are computed from the Hopf structure, and the lifted family is again a
parametric adjunction commuting with the forgetful functors.
"""
from catkit import zoo
from catkit.hopf import lift_parametric_adjunction

lift = lift_parametric_adjunction(zoo.nucleus_meet_cell(), zoo.meet_implication())


def table(functor):
    alg = functor.cod.algebras
    for x, y in sorted(functor.obj_map.items()):
        print(f"  {x} -> {alg[y][0]}")


print("lifted meet:")
table(lift.left)
print("lifted implication:")
table(lift.right)
bad = lift.checks.failed()
print(f"{len(lift.checks.checks)} checks, {len(bad)} failed")
for c in bad:
    print("  ", c.name, c.witness)
