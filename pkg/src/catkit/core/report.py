"""Structured results of law checking."""
from dataclasses import dataclass, field

from catkit.errors import ConstructionError


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple = ()
    detail: str = ""
    structural: bool = False

    def as_dict(self):
        d = {"law": self.law, "witness": list(self.witness)}
        if self.detail:
            d["detail"] = self.detail
        if self.structural:
            d["structural"] = True
        return d


@dataclass
class ValidationReport:
    """Outcome of validating one object: structural errors first, then laws."""
    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    @property
    def structural(self):
        return any(v.structural for v in self.violations)

    def add(self, law, witness=(), detail="", structural=False):
        self.violations.append(Violation(law, tuple(witness), detail, structural))

    def laws_failed(self):
        return sorted({v.law for v in self.violations})

    def first(self, law=None):
        for v in self.violations:
            if law is None or v.law == law:
                return v
        return None

    def raise_if_failed(self):
        if self.violations:
            v = self.violations[0]
            raise ConstructionError(
                f"{self.subject}: {v.law} fails at {v.witness} {v.detail}".rstrip(),
                v.witness)
        return self

    def __bool__(self):
        return self.ok

    def __repr__(self):
        state = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"ValidationReport({self.subject!r}, {state})"


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: tuple = ()
    detail: str = ""

    def as_dict(self):
        d = {"name": self.name, "ok": self.ok}
        if self.witness:
            d["witness"] = [str(w) for w in self.witness]
        if self.detail:
            d["detail"] = self.detail
        return d


class CheckLog:
    """Ordered list of named boolean checks with optional witnesses."""

    def __init__(self):
        self.checks = []

    def record(self, name, ok, witness=(), detail=""):
        self.checks.append(Check(name, bool(ok), tuple(witness), detail))
        return bool(ok)

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness, c.detail))

    def require(self, name, ok, witness=(), detail=""):
        if not self.record(name, ok, witness, detail):
            raise ConstructionError(f"{name} fails at {tuple(witness)} {detail}".rstrip(),
                                    witness)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failed(self):
        return [c for c in self.checks if not c.ok]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)
