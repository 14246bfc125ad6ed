"""Algebras of the nucleus x -> x or a on the four-element Boolean algebra.

An algebra is an element fixed by the nucleus, so we expect exactly a and 1.
The free/forgetful adjunction then induces the nucleus back on the nose.
"""
from catkit import zoo
from catkit.core import validate_category
from catkit.structures import em_category, monad_from_adjunction, validate_monad

j = zoo.bool4_nucleus()
print("monad laws:", validate_monad(j))

bundle = em_category(j)
alg = bundle.category
print("algebras:", ", ".join(alg.objects))
print("morphisms:", ", ".join(m.id for m in alg.morphisms))
print("category laws:", validate_category(alg))

for x in zoo.BOOL4:
    print(f"  free({x}) = {bundle.free.ob(x)}")

back = monad_from_adjunction(bundle.adjunction)
same = back.endo.same_maps(j.endo) and back.mult == j.mult and back.unit == j.unit
print("induced monad is the nucleus:", same)
