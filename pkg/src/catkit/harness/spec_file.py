"""JSON spec files: grammar, resolution into engine objects, and emission.

Every reference is either a declared name or an inline expression:

* category: ``"Name"`` | ``{"product": [c, c]}`` | ``{"op": c}``
* monad: ``"Name"`` | ``{"product": [m, m]}`` | ``{"identity": c}``
* adjunction: ``"Name"`` | ``{"product": [a, a]}`` | ``{"identity": c}`` | ``{"free": m}``

Structure maps of monads, adjunctions and cells may be a declared
transformation name or an inline ``{object: morphism}`` table.
"""
import json
from dataclasses import dataclass, field

from catkit.errors import CatkitError, ResourceLimitError
from catkit.core import (FinCat, Functor, Morphism, NatTrans, compose_functors,
                         fix_left, fix_right, identity_functor, op_category,
                         product_category)
from catkit.structures import (Adjunction, Monad, em_category, identity_adjunction,
                               identity_monad, product_adjunction, product_monad)
from catkit.twocat import AdjOneCell, MndOneCell
from catkit.hopf import ParametricAdjunction

E_JSON = "E_JSON"
E_SCHEMA = "E_SCHEMA"
E_REF = "E_REF"

COLLECTIONS = ("categories", "functors", "natural_transformations", "monads",
               "adjunctions", "one_cells", "parametric_adjunctions", "tasks")

TASK_OPS = ("validate-category", "validate-functor", "validate-nat", "validate-monad",
            "validate-adjunction", "validate-one-cell", "validate-parametric",
            "em", "phi", "psi", "hopf-adj", "hopf-mnd", "fusion", "adjoint-object",
            "dinatural-extend", "antipode", "compare-phi", "fusion-hopf", "lift")


@dataclass(frozen=True)
class Issue:
    code: str
    path: str
    message: str
    line: int = 0

    def as_dict(self):
        d = {"code": self.code, "path": self.path, "message": self.message}
        if self.line:
            d["line"] = self.line
        return d

    def __str__(self):
        loc = f"line {self.line}" if self.line else self.path
        return f"{self.code} at {loc}: {self.message}"


class SpecError(CatkitError):
    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))

    @property
    def code(self):
        return self.issues[0].code


@dataclass
class Task:
    op: str
    args: dict
    id: str = ""

    def label(self, index):
        return self.id or f"{index}:{self.op}"


@dataclass
class SpecFile:
    document: dict
    categories: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    natural_transformations: dict = field(default_factory=dict)
    monads: dict = field(default_factory=dict)
    adjunctions: dict = field(default_factory=dict)
    one_cells: dict = field(default_factory=dict)
    parametric_adjunctions: dict = field(default_factory=dict)
    tasks: list = field(default_factory=list)

    def same_as(self, other):
        if self.document != other.document:
            return False
        for name in COLLECTIONS[:-1]:
            a, b = getattr(self, name), getattr(other, name)
            if a.keys() != b.keys():
                return False
            for k in a:
                if not _structurally_equal(a[k], b[k]):
                    return False
        return self.tasks == other.tasks


def _structurally_equal(x, y):
    if isinstance(x, ParametricAdjunction):
        return (x.left == y.left and x.right == y.right
                and x.adjunctions.keys() == y.adjunctions.keys()
                and all(x.adjunctions[k] == y.adjunctions[k] for k in x.adjunctions))
    return x == y


# JSON layer

def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise _Duplicate(k)
        out[k] = v
    return out


class _Duplicate(Exception):
    pass


def load_json(data):
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise SpecError([Issue(E_JSON, "$", f"not UTF-8: {e}")]) from None
    try:
        return json.loads(data, object_pairs_hook=_no_duplicates)
    except _Duplicate as e:
        raise SpecError([Issue(E_SCHEMA, "$", f"duplicate key {e.args[0]!r}")]) from None
    except json.JSONDecodeError as e:
        raise SpecError([Issue(E_JSON, "$", e.msg, e.lineno)]) from None


def parse_spec_file(data):
    """Bytes or text to a resolved SpecFile; raises SpecError listing every issue."""
    return parse_document(load_json(data))


def emit_spec(spec):
    return (json.dumps(spec.document, indent=1, ensure_ascii=False) + "\n").encode("utf-8")


# schema layer

class _Resolver:
    def __init__(self, doc):
        self.doc = doc
        self.issues = []
        self.spec = SpecFile(doc)
        self._em = {}

    def issue(self, code, path, msg):
        self.issues.append(Issue(code, path, msg))

    def keys(self, obj, path, required, optional=()):
        if not isinstance(obj, dict):
            self.issue(E_SCHEMA, path, "expected an object")
            return False
        ok = True
        for k in obj:
            if k not in required and k not in optional:
                self.issue(E_SCHEMA, f"{path}.{k}", "unknown key")
                ok = False
        for k in required:
            if k not in obj:
                self.issue(E_SCHEMA, f"{path}.{k}", "missing key")
                ok = False
        return ok

    def text(self, v, path):
        if not isinstance(v, str):
            self.issue(E_SCHEMA, path, "expected a string")
            return False
        return True

    # references

    def category(self, ref, path):
        if isinstance(ref, str):
            if ref not in self.spec.categories:
                self.issue(E_REF, path, f"unknown category {ref!r}")
                return None
            return self.spec.categories[ref]
        if isinstance(ref, dict) and len(ref) == 1:
            (k, v), = ref.items()
            if k == "product" and isinstance(v, list) and len(v) == 2:
                a, b = self.category(v[0], f"{path}.product[0]"), self.category(v[1], f"{path}.product[1]")
                return product_category(a, b) if a and b else None
            if k == "op":
                a = self.category(v, f"{path}.op")
                return op_category(a) if a else None
        self.issue(E_SCHEMA, path, "bad category reference")
        return None

    def monad(self, ref, path):
        if isinstance(ref, str):
            if ref not in self.spec.monads:
                self.issue(E_REF, path, f"unknown monad {ref!r}")
                return None
            return self.spec.monads[ref]
        if isinstance(ref, dict) and len(ref) == 1:
            (k, v), = ref.items()
            if k == "product" and isinstance(v, list) and len(v) == 2:
                a, b = self.monad(v[0], f"{path}.product[0]"), self.monad(v[1], f"{path}.product[1]")
                return product_monad(a, b) if a and b else None
            if k == "identity":
                c = self.category(v, f"{path}.identity")
                return identity_monad(c) if c else None
        self.issue(E_SCHEMA, path, "bad monad reference")
        return None

    def adjunction(self, ref, path):
        if isinstance(ref, str):
            if ref not in self.spec.adjunctions:
                self.issue(E_REF, path, f"unknown adjunction {ref!r}")
                return None
            return self.spec.adjunctions[ref]
        if isinstance(ref, dict) and len(ref) == 1:
            (k, v), = ref.items()
            if k == "product" and isinstance(v, list) and len(v) == 2:
                a = self.adjunction(v[0], f"{path}.product[0]")
                b = self.adjunction(v[1], f"{path}.product[1]")
                return product_adjunction(a, b) if a and b else None
            if k == "identity":
                c = self.category(v, f"{path}.identity")
                return identity_adjunction(c) if c else None
            if k == "free":
                m = self.monad(v, f"{path}.free")
                if m is None:
                    return None
                if id(m) not in self._em:
                    self._em[id(m)] = (m, em_category(m, validate=False))
                return self._em[id(m)][1].adjunction
        self.issue(E_SCHEMA, path, "bad adjunction reference")
        return None

    def functor(self, ref, path):
        if not self.text(ref, path):
            return None
        if ref not in self.spec.functors:
            self.issue(E_REF, path, f"unknown functor {ref!r}")
            return None
        return self.spec.functors[ref]

    def components(self, ref, path, source, target, name):
        """A transformation given by name or inline table, typed by context."""
        if isinstance(ref, str):
            t = self.spec.natural_transformations.get(ref)
            if t is None:
                self.issue(E_REF, path, f"unknown transformation {ref!r}")
            return t
        if not isinstance(ref, dict):
            self.issue(E_SCHEMA, path, "expected a transformation name or component table")
            return None
        if source is None or target is None:
            return None
        return self.table(ref, path, source, target, name)

    def table(self, comps, path, source, target, name):
        dom, cod = source.dom, source.cod
        ok = True
        for x, m in comps.items():
            if not dom.has_object(x):
                self.issue(E_REF, f"{path}.{x}", f"{x!r} is not an object of {dom.name}")
                ok = False
            elif not isinstance(m, str) or not cod.has_morphism(m):
                self.issue(E_REF, f"{path}.{x}", f"{m!r} is not a morphism of {cod.name}")
                ok = False
        return NatTrans(name, source, target, comps) if ok else None

    # declarations

    def run(self):
        doc = self.doc
        if not isinstance(doc, dict):
            self.issue(E_SCHEMA, "$", "top level must be an object")
            return
        for k in doc:
            if k not in COLLECTIONS:
                self.issue(E_SCHEMA, f"$.{k}", "unknown key")
        for name in COLLECTIONS[:-1]:
            coll = doc.get(name, {})
            if not isinstance(coll, dict):
                self.issue(E_SCHEMA, f"$.{name}", "expected an object of named entries")
                continue
            handler = getattr(self, "decl_" + name)
            for key, body in coll.items():
                handler(key, body, f"$.{name}.{key}")
        tasks = doc.get("tasks", [])
        if not isinstance(tasks, list):
            self.issue(E_SCHEMA, "$.tasks", "expected a list")
            return
        for i, t in enumerate(tasks):
            self.decl_task(t, f"$.tasks[{i}]")

    def decl_categories(self, name, body, path):
        if not self.keys(body, path, ("objects", "morphisms", "identities", "composition")):
            return
        objects = body["objects"]
        if not isinstance(objects, list) or not all(isinstance(o, str) for o in objects):
            self.issue(E_SCHEMA, f"{path}.objects", "expected a list of identifiers")
            return
        objset = set(objects)
        mors = []
        for i, m in enumerate(body["morphisms"] if isinstance(body["morphisms"], list) else []):
            p = f"{path}.morphisms[{i}]"
            if not self.keys(m, p, ("id", "dom", "cod")):
                continue
            for end in ("dom", "cod"):
                if m[end] not in objset:
                    self.issue(E_REF, f"{p}.{end}", f"unknown object {m[end]!r}")
            mors.append(Morphism(m["id"], m["dom"], m["cod"]))
        if not isinstance(body["morphisms"], list):
            self.issue(E_SCHEMA, f"{path}.morphisms", "expected a list")
        morset = {m.id for m in mors}
        ident = body["identities"]
        if not isinstance(ident, dict):
            self.issue(E_SCHEMA, f"{path}.identities", "expected an object")
            ident = {}
        for x, i in ident.items():
            if x not in objset:
                self.issue(E_REF, f"{path}.identities.{x}", f"unknown object {x!r}")
            if i not in morset:
                self.issue(E_REF, f"{path}.identities.{x}", f"unknown morphism {i!r}")
        comp = {}
        entries = body["composition"]
        if not isinstance(entries, list):
            self.issue(E_SCHEMA, f"{path}.composition", "expected a list")
            entries = []
        for i, e in enumerate(entries):
            p = f"{path}.composition[{i}]"
            if not self.keys(e, p, ("g", "f", "eq")):
                continue
            for k in ("g", "f", "eq"):
                if e[k] not in morset:
                    self.issue(E_REF, f"{p}.{k}", f"unknown morphism {e[k]!r}")
            if (e["g"], e["f"]) in comp:
                self.issue(E_SCHEMA, p, f"duplicate composite ({e['g']}, {e['f']})")
            comp[(e["g"], e["f"])] = e["eq"]
        self.spec.categories[name] = FinCat(name, objects, mors, ident, comp)

    def decl_functors(self, name, body, path):
        if not self.keys(body, path, ("dom", "cod", "obj_map", "mor_map")):
            return
        A, B = self.category(body["dom"], f"{path}.dom"), self.category(body["cod"], f"{path}.cod")
        if A is None or B is None:
            return
        om, mm = body["obj_map"], body["mor_map"]
        for k, table in (("obj_map", om), ("mor_map", mm)):
            if not isinstance(table, dict):
                self.issue(E_SCHEMA, f"{path}.{k}", "expected an object")
                return
        for x, y in om.items():
            if not A.has_object(x):
                self.issue(E_REF, f"{path}.obj_map.{x}", f"{x!r} is not an object of {A.name}")
            if not isinstance(y, str) or not B.has_object(y):
                self.issue(E_REF, f"{path}.obj_map.{x}", f"{y!r} is not an object of {B.name}")
        for f, g in mm.items():
            if not A.has_morphism(f):
                self.issue(E_REF, f"{path}.mor_map.{f}", f"{f!r} is not a morphism of {A.name}")
            if not isinstance(g, str) or not B.has_morphism(g):
                self.issue(E_REF, f"{path}.mor_map.{f}", f"{g!r} is not a morphism of {B.name}")
        self.spec.functors[name] = Functor(name, A, B, om, mm)

    def decl_natural_transformations(self, name, body, path):
        if not self.keys(body, path, ("source", "target", "components")):
            return
        F, G = self.functor(body["source"], f"{path}.source"), self.functor(body["target"], f"{path}.target")
        if F is None or G is None:
            return
        if not isinstance(body["components"], dict):
            self.issue(E_SCHEMA, f"{path}.components", "expected an object")
            return
        t = self.table(body["components"], f"{path}.components", F, G, name)
        if t is not None:
            self.spec.natural_transformations[name] = t

    def decl_monads(self, name, body, path):
        if not self.keys(body, path, ("base", "endo", "mult", "unit")):
            return
        C = self.category(body["base"], f"{path}.base")
        S = self.functor(body["endo"], f"{path}.endo")
        if C is None or S is None:
            return
        SS = compose_functors(S, S) if S.dom == S.cod else None
        mult = self.components(body["mult"], f"{path}.mult", SS, S, "mu")
        unit = self.components(body["unit"], f"{path}.unit", identity_functor(C), S, "eta")
        if mult is not None and unit is not None:
            self.spec.monads[name] = Monad(name, C, S, mult, unit)

    def decl_adjunctions(self, name, body, path):
        if not self.keys(body, path, ("left", "right", "unit", "counit")):
            return
        L, R = self.functor(body["left"], f"{path}.left"), self.functor(body["right"], f"{path}.right")
        if L is None or R is None:
            return
        shaped = L.cod == R.dom and R.cod == L.dom
        unit = self.components(body["unit"], f"{path}.unit", identity_functor(L.dom),
                               compose_functors(R, L) if shaped else None, "eta")
        counit = self.components(body["counit"], f"{path}.counit",
                                 compose_functors(L, R) if shaped else None,
                                 identity_functor(L.cod), "eps")
        if not shaped:
            self.issue(E_SCHEMA, path, f"{L.name} and {R.name} do not form an adjoint pair")
        if unit is not None and counit is not None:
            self.spec.adjunctions[name] = Adjunction(name, L, R, unit, counit)

    def decl_one_cells(self, name, body, path):
        if not isinstance(body, dict) or body.get("kind") not in ("adj", "mnd"):
            self.issue(E_SCHEMA, f"{path}.kind", "kind must be 'adj' or 'mnd'")
            return
        if body["kind"] == "adj":
            if not self.keys(body, path, ("kind", "source", "target", "top", "bottom", "lambda")):
                return
            src, tgt = self.adjunction(body["source"], f"{path}.source"), self.adjunction(body["target"], f"{path}.target")
            J, V = self.functor(body["top"], f"{path}.top"), self.functor(body["bottom"], f"{path}.bottom")
            if None in (src, tgt, J, V):
                return
            lam = self.components(body["lambda"], f"{path}.lambda", tgt.left * J if J.cod == tgt.left.dom else None,
                                  V * src.left if src.left.cod == V.dom else None, "lambda")
            if lam is not None:
                self.spec.one_cells[name] = AdjOneCell(src, tgt, J, V, lam, name=name, check=False)
        else:
            if not self.keys(body, path, ("kind", "source", "target", "top", "psi")):
                return
            src, tgt = self.monad(body["source"], f"{path}.source"), self.monad(body["target"], f"{path}.target")
            B = self.functor(body["top"], f"{path}.top")
            if None in (src, tgt, B):
                return
            fits = B.dom == src.base and B.cod == tgt.base
            psi = self.components(body["psi"], f"{path}.psi", tgt.endo * B if fits else None,
                                  B * src.endo if fits else None, "psi")
            if not fits:
                self.issue(E_SCHEMA, f"{path}.top", f"{B.name} does not run between the monads' bases")
            if psi is not None:
                self.spec.one_cells[name] = MndOneCell(src, tgt, B, psi, name=name, check=False)

    def decl_parametric_adjunctions(self, name, body, path):
        if not self.keys(body, path, ("F", "G", "per_parameter")):
            return
        F, G = self.functor(body["F"], f"{path}.F"), self.functor(body["G"], f"{path}.G")
        if F is None or G is None:
            return
        from catkit.core import ProductCat
        if not isinstance(F.dom, ProductCat) or not isinstance(G.dom, ProductCat):
            self.issue(E_SCHEMA, path, "F and G must be functors out of products")
            return
        entries = body["per_parameter"]
        if not isinstance(entries, list):
            self.issue(E_SCHEMA, f"{path}.per_parameter", "expected a list")
            return
        adjs = {}
        for i, e in enumerate(entries):
            p = f"{path}.per_parameter[{i}]"
            if not self.keys(e, p, ("param", "adjunction")):
                continue
            q = e["param"]
            if not F.dom.right.has_object(q):
                self.issue(E_REF, f"{p}.param", f"{q!r} is not a parameter object")
                continue
            if q in adjs:
                self.issue(E_SCHEMA, f"{p}.param", f"duplicate parameter {q!r}")
            a = e["adjunction"]
            if isinstance(a, str):
                adj = self.adjunction(a, f"{p}.adjunction")
            elif self.keys(a, f"{p}.adjunction", ("unit", "counit")):
                L, R = fix_right(F, q), fix_left(G, q)
                unit = self.table(a["unit"], f"{p}.adjunction.unit", identity_functor(L.dom), R * L, "eta")
                counit = self.table(a["counit"], f"{p}.adjunction.counit", L * R, identity_functor(L.cod), "eps")
                adj = Adjunction(f"{name}@{q}", L, R, unit, counit) if unit and counit else None
            else:
                adj = None
            if adj is not None:
                adjs[q] = adj
        self.spec.parametric_adjunctions[name] = ParametricAdjunction(name, F, G, adjs)

    def decl_task(self, t, path):
        if not self.keys(t, path, ("op", "args"), ("id",)):
            return
        if t["op"] not in TASK_OPS:
            self.issue(E_SCHEMA, f"{path}.op", f"unknown task {t['op']!r}")
            return
        if not isinstance(t["args"], dict):
            self.issue(E_SCHEMA, f"{path}.args", "expected an object")
            return
        refs = {"category": "categories", "functor": "functors", "nat": "natural_transformations",
                "monad": "monads", "adjunction": "adjunctions", "cell": "one_cells",
                "parametric": "parametric_adjunctions"}
        for k, v in t["args"].items():
            if k not in refs:
                self.issue(E_SCHEMA, f"{path}.args.{k}", "unknown argument")
            elif not isinstance(v, str) or v not in getattr(self.spec, refs[k]):
                if isinstance(v, str) and v in self.doc.get(refs[k], {}):
                    continue  # declared but failed to resolve; already reported
                self.issue(E_REF, f"{path}.args.{k}", f"unknown {k} {v!r}")
        self.spec.tasks.append(Task(t["op"], dict(t["args"]), t.get("id", "")))


def parse_document(doc):
    r = _Resolver(doc)
    try:
        r.run()
    except ResourceLimitError:
        raise
    except CatkitError as e:
        r.issue(E_SCHEMA, "$", str(e))
    if r.issues:
        raise SpecError(r.issues)
    return r.spec
