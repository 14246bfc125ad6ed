"""Named fixtures, built from the zoo and emitted as spec-file documents."""
import re

from catkit import zoo
from catkit.errors import CatkitError
from catkit.structures import identity_monad
from catkit.harness.spec_file import parse_document

FIXTURE_NAMES = ("one", "two", "bool4", "z2", "closure1", "bool4-nucleus", "meetcell",
                 "id-monad(C)")
_ID_MONAD = re.compile(r"id-monad\((one|two|bool4|z2)\)$")
_CATS = {"one": zoo.one, "two": zoo.two, "bool4": zoo.bool4, "z2": zoo.z2}


def category_doc(C):
    return {
        "objects": list(C.objects),
        "morphisms": [{"id": m.id, "dom": m.dom, "cod": m.cod} for m in C.morphisms],
        "identities": dict(C.identities),
        "composition": [{"g": g, "f": f, "eq": h} for (g, f), h in C.composition.items()],
    }


def functor_doc(F, dom, cod):
    return {"dom": dom, "cod": cod, "obj_map": dict(F.obj_map), "mor_map": dict(F.mor_map)}


def monad_doc(m, base, endo):
    return {"base": base, "endo": endo, "mult": dict(m.mult.components),
            "unit": dict(m.unit.components)}


def _task(op, **args):
    return {"op": op, "args": args}


def _single_category(C):
    return {"categories": {C.name: category_doc(C)},
            "tasks": [_task("validate-category", category=C.name)]}


def _monad_fixture(m):
    C = m.base
    return {
        "categories": {C.name: category_doc(C)},
        "functors": {m.endo.name: functor_doc(m.endo, C.name, C.name)},
        "monads": {m.name: monad_doc(m, C.name, m.endo.name)},
        "tasks": [_task("validate-category", category=C.name),
                  _task("validate-monad", monad=m.name),
                  _task("em", monad=m.name)],
    }


def _parametric_doc(pa, F, G):
    return {"F": F, "G": G, "per_parameter": [
        {"param": p, "adjunction": {"unit": dict(a.unit.components),
                                    "counit": dict(a.counit.components)}}
        for p, a in pa.items()]}


def _bool4_nucleus():
    B = zoo.bool4()
    cell = zoo.nucleus_meet_cell()
    j, J = cell.target, cell.carrier
    K = zoo.bool4_implication()
    psi = dict(cell.psi.components)
    pa = zoo.meet_implication().adjunctions
    BB = {"product": ["Bool4", "Bool4"]}
    doc = {
        "categories": {"Bool4": category_doc(B)},
        "functors": {
            "nucleus": functor_doc(j.endo, "Bool4", "Bool4"),
            "meet": functor_doc(J, BB, "Bool4"),
            "imp": functor_doc(K, {"product": [{"op": "Bool4"}, "Bool4"]}, "Bool4"),
        },
        "monads": {"j": monad_doc(j, "Bool4", "nucleus")},
        "one_cells": {"meet": {"kind": "mnd", "source": {"product": ["j", "j"]},
                               "target": "j", "top": "meet", "psi": psi}},
        "parametric_adjunctions": {"meet-imp": _parametric_doc(pa, "meet", "imp")},
    }
    cell = {"cell": "meet"}
    both = {"cell": "meet", "parametric": "meet-imp"}
    doc["tasks"] = [
        _task("validate-category", category="Bool4"),
        _task("validate-monad", monad="j"),
        _task("em", monad="j"),
        _task("validate-one-cell", **cell),
        _task("validate-parametric", parametric="meet-imp"),
        _task("psi", **cell),
        _task("phi", **cell),
        _task("hopf-mnd", **cell),
        _task("hopf-adj", **cell),
        _task("fusion", **cell),
        _task("adjoint-object", **both),
        _task("dinatural-extend", **both),
        _task("antipode", **both),
        _task("compare-phi", **cell),
        _task("fusion-hopf", **cell),
        _task("lift", **both),
    ]
    return doc


def _meetcell():
    T2 = zoo.two()
    mc = zoo.closure_meet_cell()
    j1 = mc.source.factors[0]
    pam = zoo.two_meet_implication()
    J, K = pam.left, pam.right
    psi = dict(mc.psi.components)
    pa = pam.adjunctions
    cell = {"cell": "meetcell"}
    both = {"cell": "meetcell", "parametric": "min-imp"}
    return {
        "categories": {"Two": category_doc(T2)},
        "functors": {
            "top": functor_doc(j1.endo, "Two", "Two"),
            "meet": functor_doc(J, {"product": ["Two", "Two"]}, "Two"),
            "imp": functor_doc(K, {"product": [{"op": "Two"}, "Two"]}, "Two"),
        },
        "monads": {"j1": monad_doc(j1, "Two", "top")},
        "one_cells": {"meetcell": {"kind": "mnd",
                                   "source": {"product": ["j1", {"identity": "Two"}]},
                                   "target": {"identity": "Two"}, "top": "meet",
                                   "psi": psi}},
        "parametric_adjunctions": {"min-imp": _parametric_doc(pa, "meet", "imp")},
        "tasks": [
            _task("validate-one-cell", **cell),
            _task("validate-parametric", parametric="min-imp"),
            _task("hopf-mnd", **cell),
            _task("hopf-adj", **cell),
            _task("fusion", **cell),
            _task("adjoint-object", **both),
            _task("compare-phi", **cell),
            _task("fusion-hopf", **cell),
        ],
    }


def fixture_document(name):
    if name in _CATS:
        return _single_category(_CATS[name]())
    if name == "closure1":
        return _monad_fixture(zoo.closure1())
    if name == "bool4-nucleus":
        return _bool4_nucleus()
    if name == "meetcell":
        return _meetcell()
    m = _ID_MONAD.match(name)
    if m:
        C = _CATS[m.group(1)]()
        mon = identity_monad(C)
        return _monad_fixture(mon)
    raise CatkitError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def generate_fixture(name):
    """The resolved SpecFile for a named fixture."""
    return parse_document(fixture_document(name))
