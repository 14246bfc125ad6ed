"""Executes the tasks of a spec file and gathers their outcomes."""
from dataclasses import dataclass, field

from catkit import __version__
from catkit.errors import CatkitError, PreconditionError, ResourceLimitError
from catkit.core import CheckLog, validate_category, validate_functor, validate_nat_trans
from catkit.structures import (em_category, enumerate_algebras, monad_from_adjunction,
                               product_adjunction, reflects_isomorphisms,
                               validate_adjunction, validate_monad)
from catkit.twocat import (AdjOneCell, is_em_adjunction, phi_one_cell, psi_one_cell,
                           validate_adj_one_cell, validate_mnd_one_cell)
from catkit.hopf import (adjoint_equivalence, adjoint_object_adj, adjoint_object_mnd,
                         antipode_adj, antipode_mnd, compare_hopf_phi,
                         fusion_hopf_equivalence, fusion_operator_mnd,
                         hopf_adjoint_object_adj, hopf_adjoint_object_mnd,
                         hopf_operator_adj, hopf_operator_mnd, lift_parametric_adjunction,
                         restrict_adj, restrict_mnd, validate_parametric_adjunction)


@dataclass
class TaskResult:
    index: int
    id: str
    op: str
    outcome: str
    checks: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    error: dict = None

    def as_dict(self):
        d = {"index": self.index, "id": self.id, "op": self.op, "outcome": self.outcome,
             "checks": self.checks, "summary": self.summary}
        if self.error:
            d["error"] = self.error
        return d


@dataclass
class Report:
    version: str
    input_digest: str
    tasks: list = field(default_factory=list)

    @property
    def outcome(self):
        states = {t.outcome for t in self.tasks}
        for s in ("error", "fail"):
            if s in states:
                return s
        return "pass"

    @property
    def resource_limited(self):
        return any(t.error and t.error.get("code") == "E_RESOURCE" for t in self.tasks)

    def counts(self):
        out = {"pass": 0, "fail": 0, "error": 0}
        for t in self.tasks:
            out[t.outcome] += 1
        return out

    def as_dict(self):
        return {"engine": "catkit", "version": self.version,
                "input_digest": self.input_digest, "outcome": self.outcome,
                "counts": self.counts(), "tasks": [t.as_dict() for t in self.tasks]}

    @classmethod
    def from_dict(cls, d):
        tasks = [TaskResult(t["index"], t["id"], t["op"], t["outcome"], t["checks"],
                            t["summary"], t.get("error")) for t in d["tasks"]]
        return cls(d["version"], d["input_digest"], tasks)


def _text(w):
    if isinstance(w, (tuple, list)):
        return [_text(x) for x in w]
    return str(w)


def _witness(w):
    return _text(tuple(w) if isinstance(w, (tuple, list)) else (w,))


def _from_report(log, rep):
    """One check per law; structural problems short-circuit the rest."""
    vs = [v for v in rep.violations if v.structural] or rep.violations
    by_law = {}
    for v in vs:
        by_law.setdefault(v.law, []).append(v)
    for law in sorted(by_law):
        first = min(by_law[law], key=lambda v: _witness(v.witness))
        log.record(law, False, first.witness, first.detail)
    if rep.ok:
        log.record("laws", True)
    return rep.structural


class _Context:
    """Derived artifacts shared by the tasks of one run."""

    def __init__(self, spec):
        self.spec = spec
        self.cache = {}

    def memo(self, key, make):
        if key not in self.cache:
            self.cache[key] = make()
        return self.cache[key]

    def cell(self, args):
        return self.spec.one_cells[args["cell"]]

    def parametric(self, args):
        return self.spec.parametric_adjunctions[args["parametric"]]

    def mnd_cell(self, args):
        c = self.cell(args)
        if isinstance(c, AdjOneCell):
            return self.memo(("phi", args["cell"]), lambda: phi_one_cell(c))
        return c

    def adj_cell(self, args):
        c = self.cell(args)
        if isinstance(c, AdjOneCell):
            return c
        return self.memo(("psi", args["cell"]), lambda: _lift_cell(c))

    def hopf_mnd(self, args):
        return self.memo(("hopf-mnd", args["cell"]), lambda: hopf_operator_mnd(self.mnd_cell(args)))

    def lifting(self, args):
        return self.memo(("lift", args["cell"], args["parametric"]),
                         lambda: lift_parametric_adjunction(self.mnd_cell(args), self.parametric(args)))


def _lift_cell(c):
    if c.source.factors:
        a, b = c.source.factors
        src = product_adjunction(em_category(a).adjunction, em_category(b).adjunction)
        return psi_one_cell(c, source_adj=src)
    return psi_one_cell(c)


def _counts(cat):
    return {"objects": len(cat.objects), "morphisms": len(cat.morphisms)}


# task handlers: (context, args, log) -> summary dict

def _validate_category(ctx, args, log):
    C = ctx.spec.categories[args["category"]]
    _from_report(log, validate_category(C))
    return _counts(C)


def _validate_functor(ctx, args, log):
    _from_report(log, validate_functor(ctx.spec.functors[args["functor"]]))
    return {}


def _validate_nat(ctx, args, log):
    _from_report(log, validate_nat_trans(ctx.spec.natural_transformations[args["nat"]]))
    return {}


def _validate_monad(ctx, args, log):
    _from_report(log, validate_monad(ctx.spec.monads[args["monad"]]))
    return {}


def _validate_adjunction(ctx, args, log):
    _from_report(log, validate_adjunction(ctx.spec.adjunctions[args["adjunction"]]))
    return {}


def _validate_one_cell(ctx, args, log):
    c = ctx.cell(args)
    check = validate_adj_one_cell if isinstance(c, AdjOneCell) else validate_mnd_one_cell
    _from_report(log, check(c))
    return {"kind": "adj" if isinstance(c, AdjOneCell) else "mnd"}


def _validate_parametric(ctx, args, log):
    pa = ctx.parametric(args)
    _from_report(log, validate_parametric_adjunction(pa))
    return {"parameters": len(pa.adjunctions)}


def _em(ctx, args, log):
    m = ctx.spec.monads[args["monad"]]
    if _from_report(log, validate_monad(m)):
        return {}
    b = em_category(m)
    found = enumerate_algebras(m)
    log.record("algebra-count-matches-enumeration", len(found) == len(b.category.objects))
    _from_report(log, validate_adjunction(b.adjunction))
    back = monad_from_adjunction(b.adjunction)
    log.record("induced-monad-is-original", back.endo.same_maps(m.endo)
               and back.mult == m.mult and back.unit == m.unit)
    ok, w = reflects_isomorphisms(b.forget)
    log.record("forgetful-reflects-isos", ok, w or ())
    return {"algebras": sorted(b.category.objects), **_counts(b.category)}


def _psi(ctx, args, log):
    c = ctx.mnd_cell(args)
    lifted = ctx.adj_cell(args)
    _from_report(log, validate_adj_one_cell(lifted))
    log.record("transport-back-is-original", phi_one_cell(lifted) == c)
    return {"lifted_functor": _counts(lifted.bottom.dom) | {"codomain_objects": len(lifted.bottom.cod.objects)}}


def _phi(ctx, args, log):
    c = ctx.cell(args)
    adj = c if isinstance(c, AdjOneCell) else ctx.adj_cell(args)
    m = phi_one_cell(adj)
    _from_report(log, validate_mnd_one_cell(m))
    if is_em_adjunction(adj.target):
        again = _lift_cell(m) if m.source.factors else psi_one_cell(m)
        log.record("lift-after-transport-is-original", again == adj)
    if not isinstance(c, AdjOneCell):
        log.record("transport-of-lift-is-original", m == c)
    return {}


def _operator(log, res, name):
    _from_report(log, res.cell_report)
    log.record(f"{name}-invertible", res.invertible,
               () if res.witness is None else (res.witness,))
    out = {"invertible": res.invertible}
    if res.witness is not None:
        out["witness"] = _text(res.witness_parts())
    return out


def _hopf_mnd(ctx, args, log):
    return _operator(log, ctx.hopf_mnd(args), "hopf")


def _hopf_adj(ctx, args, log):
    return _operator(log, hopf_operator_adj(ctx.adj_cell(args)), "hopf")


def _fusion(ctx, args, log):
    return _operator(log, fusion_operator_mnd(ctx.mnd_cell(args)), "fusion")


def _adjoint_object(ctx, args, log):
    cell, pa = ctx.mnd_cell(args), ctx.parametric(args)
    h = ctx.hopf_mnd(args)
    E = cell.source.factors[1]
    emE = em_category(E)
    lifting = ctx.lifting(args) if h.invertible else None
    h_adj = hopf_operator_adj(lifting.left_cell) if lifting else None
    decided = {}
    for q in emE.category.objects:
        jk = pa.adjunction(emE.forget.ob(q))
        r = restrict_mnd(h, q)
        eq = adjoint_equivalence(r, jk)
        decided[q] = eq.as_dict()
        log.record(f"{q}:statements-agree", eq.agree)
        log.record(f"{q}:right-adjoint-exists", eq.mnd_adjoint, () if eq.mnd_adjoint else (q,))
        if eq.psi_invertible:
            log.extend(adjoint_object_mnd(r, jk).checks, prefix=f"{q}:mnd:")
        if lifting:
            ra = restrict_adj(h_adj, q)
            log.extend(adjoint_object_adj(ra, jk, lifting.parametric.adjunction(q)).checks,
                       prefix=f"{q}:adj:")
    return {"restrictions": decided}


def _dinatural(ctx, args, log):
    cell, pa = ctx.mnd_cell(args), ctx.parametric(args)
    obj = ctx.memo(("dinat", args["cell"]), lambda: hopf_adjoint_object_mnd(cell, pa))
    log.extend(obj.checks, prefix="mnd:")
    lifting = ctx.lifting(args)
    adj = ctx.memo(("dinat-adj", args["cell"]),
                   lambda: hopf_adjoint_object_adj(lifting.left_cell, pa, lifting.parametric))
    log.extend(adj.checks, prefix="adj:")
    return {"parameters": len(obj.pieces)}


def _antipode(ctx, args, log):
    cell, pa = ctx.mnd_cell(args), ctx.parametric(args)
    S, E = cell.source.factors
    obj = ctx.memo(("dinat", args["cell"]), lambda: hopf_adjoint_object_mnd(cell, pa))
    log.extend(antipode_mnd(obj, pa, S, cell.target, E).checks, prefix="mnd:")
    lifting = ctx.lifting(args)
    adj = ctx.memo(("dinat-adj", args["cell"]),
                   lambda: hopf_adjoint_object_adj(lifting.left_cell, pa, lifting.parametric))
    log.extend(antipode_adj(adj, pa, em_category(E).adjunction).checks, prefix="adj:")
    return {}


def _decisions(log, cmp, c):
    log.extend(cmp.checks)
    if is_em_adjunction(c.target):
        log.record("target-forgetful-reflects-isos", cmp.decisions["reflects_isos"])
    return dict(cmp.decisions)


def _compare_phi(ctx, args, log):
    c = ctx.adj_cell(args)
    return _decisions(log, compare_hopf_phi(c), c)


def _fusion_hopf(ctx, args, log):
    c = ctx.adj_cell(args)
    return _decisions(log, fusion_hopf_equivalence(c), c)


def _lift(ctx, args, log):
    res = ctx.lifting(args)
    log.extend(res.checks)
    return {"lifted_left": dict(sorted(res.left.obj_map.items())),
            "lifted_right": dict(sorted(res.right.obj_map.items()))}


HANDLERS = {
    "validate-category": _validate_category, "validate-functor": _validate_functor,
    "validate-nat": _validate_nat, "validate-monad": _validate_monad,
    "validate-adjunction": _validate_adjunction, "validate-one-cell": _validate_one_cell,
    "validate-parametric": _validate_parametric, "em": _em, "phi": _phi, "psi": _psi,
    "hopf-adj": _hopf_adj, "hopf-mnd": _hopf_mnd, "fusion": _fusion,
    "adjoint-object": _adjoint_object, "dinatural-extend": _dinatural,
    "antipode": _antipode, "compare-phi": _compare_phi, "fusion-hopf": _fusion_hopf,
    "lift": _lift,
}


def _selected(task, index, selection):
    if not selection:
        return True
    return any(s in (task.id, task.op, str(index)) for s in selection)


def run_task(ctx, task, index):
    log = CheckLog()
    result = TaskResult(index, task.id, task.op, "pass")
    try:
        result.summary = HANDLERS[task.op](ctx, task.args, log)
    except ResourceLimitError as e:
        result.outcome = "error"
        result.error = {"code": "E_RESOURCE", "message": str(e)}
    except PreconditionError as e:
        log.record("precondition", False, e.witness, str(e))
    except CatkitError as e:
        result.outcome = "error"
        result.error = {"code": "E_ENGINE", "message": str(e),
                        "witness": _witness(getattr(e, "witness", ()))}
    result.checks = [c.as_dict() | ({"witness": _witness(c.witness)} if c.witness else {})
                     for c in log.checks]
    if result.outcome == "pass" and not log.ok:
        result.outcome = "fail"
    return result


def run_check_suite(spec, selection=(), digest=""):
    """Run the selected tasks in order; each failure is contained to its task."""
    ctx = _Context(spec)
    report = Report(__version__, digest)
    for i, task in enumerate(spec.tasks):
        if _selected(task, i, selection):
            report.tasks.append(run_task(ctx, task, i))
    return report


def validate_all(spec, digest=""):
    """Validate every declared structure, as a report with one task per declaration."""
    ctx = _Context(spec)
    report = Report(__version__, digest)
    kinds = [("categories", "validate-category", "category"),
             ("functors", "validate-functor", "functor"),
             ("natural_transformations", "validate-nat", "nat"),
             ("monads", "validate-monad", "monad"),
             ("adjunctions", "validate-adjunction", "adjunction"),
             ("one_cells", "validate-one-cell", "cell"),
             ("parametric_adjunctions", "validate-parametric", "parametric")]
    from catkit.harness.spec_file import Task
    i = 0
    for coll, op, arg in kinds:
        for name in getattr(spec, coll):
            report.tasks.append(run_task(ctx, Task(op, {arg: name}, name), i))
            i += 1
    return report
