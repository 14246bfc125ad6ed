"""Serialising reports as stable JSON or as a short text summary."""
import hashlib
import json

from catkit.harness.runner import Report


def input_digest(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _sorted_witnesses(d):
    for t in d["tasks"]:
        for c in t["checks"]:
            if "witness" in c:
                c["witness"] = sorted(c["witness"], key=json.dumps)
    return d


def emit_report(report, format="json"):
    if format == "json":
        d = _sorted_witnesses(report.as_dict())
        return (json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if format == "text":
        return _text(report).encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")


def parse_report(data):
    return Report.from_dict(json.loads(data))


def _text(report):
    c = report.counts()
    lines = [f"catkit {report.version}  input {report.input_digest}",
             f"{len(report.tasks)} task(s): {c['pass']} pass, {c['fail']} fail, {c['error']} error"]
    for t in report.tasks:
        label = t.id or t.op
        lines.append(f"[{t.outcome.upper():5}] #{t.index} {label}")
        for chk in t.checks:
            if not chk["ok"]:
                w = chk.get("witness")
                lines.append(f"        {chk['name']} fails" + (f" at {w}" if w else ""))
        if t.error:
            lines.append(f"        {t.error['code']}: {t.error['message']}")
    return "\n".join(lines) + "\n"
