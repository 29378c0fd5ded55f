"""Text and JSON renderings of reports.

JSON output is written with sorted keys and no ASCII escaping, so identical
inputs give identical bytes.  :func:`from_json` reads the same schema back.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .abelian import AbelianGroup
from .assembler import Check, Diagnosis, ExtensionReport

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Result:
    """A plain computation result: ordered ``(key, value)`` fields and optional table rows."""

    title: str
    fields: tuple[tuple[str, object], ...] = ()
    rows: tuple[tuple[str, ...], ...] = ()
    columns: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()


def _value(v):
    if isinstance(v, AbelianGroup):
        return {"group": v.to_json(), "text": str(v)}
    if isinstance(v, (list, tuple)):
        return [_value(x) for x in v]
    if v is None or isinstance(v, (bool, int, str)):
        return v
    return str(v)


def _unvalue(v):
    if isinstance(v, dict) and "group" in v:
        return AbelianGroup.from_json(v["group"])
    if isinstance(v, list):
        return tuple(_unvalue(x) for x in v)
    return v


def _text(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    if v is None:
        return "none"
    return str(v)


def _checks(checks) -> list[dict]:
    return [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]


def to_record(obj) -> dict:
    if isinstance(obj, ExtensionReport):
        return {
            "type": "extension", "title": obj.title, "kind": obj.kind,
            "validity": _checks(obj.validity), "kernel": _value(obj.kernel), "kernel_case": obj.kernel_case,
            "middle": obj.middle, "cokernel": obj.cokernel,
            "cokernel_parts": [[k, _value(v)] for k, v in obj.cokernel_parts],
            "maps": list(obj.maps), "notes": list(obj.notes),
            "extras": [[k, _value(v)] for k, v in obj.extras],
        }
    if isinstance(obj, Diagnosis):
        return {"type": "diagnosis", "title": obj.title, "validity": _checks(obj.validity), "notes": list(obj.notes)}
    if isinstance(obj, Result):
        return {"type": "result", "title": obj.title, "fields": [[k, _value(v)] for k, v in obj.fields],
                "columns": list(obj.columns), "rows": [list(r) for r in obj.rows], "notes": list(obj.notes)}
    raise TypeError(f"cannot render {type(obj).__name__}")


def from_record(rec: dict):
    checks = tuple(Check(c["name"], bool(c["passed"]), c["detail"]) for c in rec.get("validity", ()))
    kind = rec["type"]
    if kind == "extension":
        return ExtensionReport(
            title=rec["title"], validity=checks, kernel=_unvalue(rec["kernel"]), middle=rec["middle"],
            cokernel=rec["cokernel"], maps=tuple(rec["maps"]), notes=tuple(rec["notes"]),
            kernel_case=rec["kernel_case"],
            cokernel_parts=tuple((k, _unvalue(v)) for k, v in rec["cokernel_parts"]),
            extras=tuple((k, _unvalue(v)) for k, v in rec["extras"]), kind=rec["kind"])
    if kind == "diagnosis":
        return Diagnosis(rec["title"], checks, tuple(rec["notes"]))
    if kind == "result":
        return Result(rec["title"], tuple((k, _unvalue(v)) for k, v in rec["fields"]),
                      tuple(tuple(r) for r in rec["rows"]), tuple(rec["columns"]), tuple(rec["notes"]))
    raise ValueError(f"unknown record type {kind!r}")


def render_json(obj, command: str = "") -> str:
    doc = {"schema": SCHEMA_VERSION, "command": command, "report": to_record(obj)}
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def from_json(text: str):
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return doc.get("command", ""), from_record(doc["report"])


def _check_lines(checks) -> list[str]:
    out = ["validity:"]
    for c in checks:
        mark = "pass" if c.passed else "FAIL"
        out.append(f"  [{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
    return out


def _bullets(name: str, items) -> list[str]:
    return [f"{name}:"] + [f"  - {x}" for x in items] if items else []


def render_text(obj) -> str:
    lines: list[str] = []
    if isinstance(obj, ExtensionReport):
        lines.append(obj.title)
        lines.append(f"sequence of {obj.kind}")
        lines += _check_lines(obj.validity)
        lines.append(f"kernel: {_text(obj.kernel)}")
        if obj.kernel_case:
            lines.append(f"kernel case: {obj.kernel_case}")
        lines.append(f"middle: {obj.middle}")
        lines.append(f"cokernel: {obj.cokernel}")
        lines += _bullets("maps", obj.maps)
        lines += _bullets("notes", obj.notes)
        lines += [f"{k}: {_text(v)}" for k, v in obj.extras]
    elif isinstance(obj, Diagnosis):
        lines.append(f"DIAGNOSIS: {obj.title}")
        lines += _check_lines(obj.validity)
        lines += _bullets("notes", obj.notes)
    elif isinstance(obj, Result):
        lines.append(obj.title)
        lines += [f"{k}: {_text(v)}" for k, v in obj.fields]
        if obj.rows:
            widths = [max(len(str(c)) for c in col) for col in zip(obj.columns, *obj.rows)]
            fmt = lambda r: "  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()
            lines.append(fmt(obj.columns))
            lines += [fmt(r) for r in obj.rows]
        lines += _bullets("notes", obj.notes)
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def render_report(obj, fmt: str = "text", command: str = "") -> bytes:
    if fmt == "json":
        return render_json(obj, command).encode("utf-8")
    if fmt == "text":
        return render_text(obj).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")
