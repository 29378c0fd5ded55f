"""Line-oriented input descriptors.

A descriptor has sections ``[group] [dims] [module] [dax] [options]`` with
``key = value`` lines; ``#`` starts a comment.  The grammar is documented in
``docs/input_format.md``.  Every error carries the offending line number.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .abelian import AbelianGroup, parse_abelian_group
from .assembler import DEFAULT_ORBIT_BOUND, ManifoldInput, ModuleData, ModuleError
from .dax import SpanSpec, Trace
from .groups import GroupError, GroupSpec, group_from_shorthand, table_group
from .ring import parse_ring_element

SECTIONS = ("group", "dims", "module", "dax", "options")
_KEYS = {
    "group": {"group", "labels", "row", "generators", "name"},
    "dims": {"d", "k", "ell", "m", "pi_dl1", "n"},
    "module": {"generators", "relation", "action", "dual", "W", "attest_dual"},
    "dax": {"md", "md_eps", "trace"},
    "options": {"orbit_bound", "drop_identity", "context", "boundary", "sw_vanishes"},
}
_REPEATABLE = {"row", "relation", "action", "md", "md_eps"}
_TRUE = {"yes", "true", "1", "on"}
_FALSE = {"no", "false", "0", "off"}


class InputError(ValueError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        where = f"{path or '<input>'}:{line}: " if line is not None else (f"{path}: " if path else "")
        super().__init__(where + message)
        self.line = line


@dataclass
class Entry:
    key: str
    arg: str
    value: str
    line: int


@dataclass
class Descriptor:
    """Raw parsed sections plus the path they came from."""

    sections: dict[str, list[Entry]] = field(default_factory=dict)
    events: list[tuple[int, str, int]] = field(default_factory=list)   # (sign, word, line)
    path: str | None = None

    def entries(self, section: str, key: str) -> list[Entry]:
        return [e for e in self.sections.get(section, []) if e.key == key]

    def one(self, section: str, key: str) -> Entry | None:
        found = self.entries(section, key)
        return found[0] if found else None

    def error(self, message: str, entry: Entry | None = None) -> InputError:
        return InputError(message, entry.line if entry else None, self.path)


def parse_text(text: str, path: str | None = None) -> Descriptor:
    desc = Descriptor(path=path)
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in SECTIONS:
                raise InputError(f"unknown section [{section}]", lineno, path)
            desc.sections.setdefault(section, [])
            continue
        if section is None:
            raise InputError("content before the first [section]", lineno, path)
        if section == "dax" and line[0] in "+-" and "=" not in line:
            word = line[1:].strip()
            if not word:
                raise InputError("trace event without a group element", lineno, path)
            desc.events.append((1 if line[0] == "+" else -1, word, lineno))
            continue
        if "=" not in line:
            raise InputError(f"expected 'key = value', got {line!r}", lineno, path)
        lhs, value = (s.strip() for s in line.split("=", 1))
        key, _, arg = lhs.partition(" ")
        if key not in _KEYS[section]:
            raise InputError(f"unknown key {key!r} in [{section}]", lineno, path)
        if key != "action" and arg:
            raise InputError(f"unexpected text after key {key!r}", lineno, path)
        if key == "action" and not arg.strip():
            raise InputError("action needs a group element: 'action <element> = rows'", lineno, path)
        if key not in _REPEATABLE and any(e.key == key for e in desc.sections[section]):
            raise InputError(f"duplicate key {key!r} in [{section}]", lineno, path)
        desc.sections[section].append(Entry(key, arg.strip(), value, lineno))
    return desc


def parse_file(path: str | Path) -> Descriptor:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read input: {exc.strerror}", None, str(p)) from None
    desc = parse_text(text, str(p))
    trace = desc.one("dax", "trace")
    if trace is not None:
        tp = (p.parent / trace.value) if not Path(trace.value).is_absolute() else Path(trace.value)
        try:
            events = parse_trace_text(tp.read_text(encoding="utf-8"), str(tp))
        except OSError as exc:
            raise desc.error(f"cannot read trace file {trace.value}: {exc.strerror}", trace) from None
        desc.events.extend(events)
    return desc


def parse_trace_text(text: str, path: str | None = None) -> list[tuple[int, str, int]]:
    """Trace files: one event per line, ``+ <element>`` or ``- <element>``."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line[0] not in "+-" or not line[1:].strip():
            raise InputError(f"trace event must be '+ <element>' or '- <element>', got {line!r}", lineno, path)
        out.append((1 if line[0] == "+" else -1, line[1:].strip(), lineno))
    return out


# -- typed accessors -------------------------------------------------------------


def _int(desc: Descriptor, entry: Entry) -> int:
    try:
        return int(entry.value)
    except ValueError:
        raise desc.error(f"{entry.key} must be an integer, got {entry.value!r}", entry) from None


def _ints(desc: Descriptor, entry: Entry, text: str | None = None) -> list[int]:
    try:
        return [int(x) for x in (entry.value if text is None else text).split()]
    except ValueError:
        raise desc.error(f"{entry.key} must be a list of integers", entry) from None


def _flag(desc: Descriptor, entry: Entry | None, default: bool = False) -> bool:
    if entry is None:
        return default
    v = entry.value.lower()
    if v in _TRUE:
        return True
    if v in _FALSE:
        return False
    raise desc.error(f"{entry.key} must be yes or no, got {entry.value!r}", entry)


def dim(desc: Descriptor, key: str, required: bool = True) -> int | None:
    entry = desc.one("dims", key)
    if entry is None:
        if required:
            raise desc.error(f"missing '{key}' in [dims]")
        return None
    return _int(desc, entry)


def group_spec(desc: Descriptor) -> GroupSpec:
    shorthand = desc.one("group", "group")
    rows = desc.entries("group", "row")
    if shorthand is None and not rows:
        if "group" in desc.sections:
            raise desc.error("[group] needs 'group = <family>' or table rows")
        return group_from_shorthand("trivial")
    if shorthand is not None and rows:
        raise desc.error("give either 'group' or table rows, not both", rows[0])
    if shorthand is not None:
        try:
            return group_from_shorthand(shorthand.value)
        except GroupError as exc:
            raise desc.error(str(exc), shorthand) from None
    labels_e = desc.one("group", "labels")
    labels = labels_e.value.split() if labels_e else None
    index = {l: i for i, l in enumerate(labels)} if labels else {}
    table = []
    for e in rows:
        row = []
        for tok in e.value.split():
            if tok in index:
                row.append(index[tok])
            else:
                try:
                    row.append(int(tok))
                except ValueError:
                    raise desc.error(f"unknown element {tok!r} in table row", e) from None
        table.append(row)
    gens_e = desc.one("group", "generators")
    gens = []
    name_e = desc.one("group", "name")
    try:
        spec = table_group(table, labels, name=name_e.value if name_e else "")
        if gens_e:
            for tok in gens_e.value.split():
                gens.append((tok, spec.parse(tok)))
            spec = table_group(table, labels, generators=gens, name=name_e.value if name_e else "")
    except GroupError as exc:
        raise desc.error(str(exc), rows[0]) from None
    return spec


def element(desc: Descriptor, spec: GroupSpec, text: str, line: int):
    try:
        return spec.parse(text)
    except GroupError as exc:
        raise InputError(str(exc), line, desc.path) from None


def trace(desc: Descriptor, spec: GroupSpec) -> Trace:
    return Trace(tuple((s, element(desc, spec, w, line)) for s, w, line in desc.events))


def span(desc: Descriptor, spec: GroupSpec, key: str) -> SpanSpec | None:
    entries = desc.entries("dax", key)
    if not entries:
        return None
    gens = []
    for e in entries:
        for piece in e.value.split(";"):
            piece = piece.strip()
            if not piece or piece == "{}":
                continue
            try:
                gens.append(parse_ring_element(spec, piece))
            except GroupError as exc:
                raise desc.error(str(exc), e) from None
    return SpanSpec(tuple(gens))


def module_data(desc: Descriptor, spec: GroupSpec) -> ModuleData:
    gens_e = desc.one("module", "generators")
    if gens_e is None:
        raise desc.error("missing 'generators' in [module]")
    names: list[str] = []
    try:
        n = int(gens_e.value)
    except ValueError:
        names = gens_e.value.split()
        n = len(names)
    rels = []
    for e in desc.entries("module", "relation"):
        r = _ints(desc, e)
        if len(r) != n:
            raise desc.error(f"relation has {len(r)} entries, module has {n} generators", e)
        rels.append(r)
    actions = {}
    for e in desc.entries("module", "action"):
        rows = [_ints(desc, e, part) for part in e.value.split("/")]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise desc.error(f"action of {e.arg} must be {n} rows of {n} integers separated by '/'", e)
        if e.arg in actions:
            raise desc.error(f"duplicate action for {e.arg}", e)
        actions[e.arg] = rows
    try:
        return ModuleData.build(n, rels, actions, names)
    except ModuleError as exc:
        raise desc.error(str(exc), gens_e) from None


def manifold_input(desc: Descriptor, orbit_bound: int | None = None) -> ManifoldInput:
    spec = group_spec(desc)
    d, k = dim(desc, "d"), dim(desc, "k")
    if not 1 <= k <= d:
        raise desc.error(f"need 1 <= k <= d, got k = {k}, d = {d}", desc.one("dims", "k"))
    mod = module_data(desc, spec)
    dual = desc.one("module", "dual")
    if dual is None:
        raise desc.error("missing 'dual' (the class G) in [module]")
    G = tuple(_ints(desc, dual))
    if len(G) != mod.generators:
        raise desc.error(f"dual has {len(G)} entries, module has {mod.generators} generators", dual)
    w = desc.one("module", "W")
    W = tuple(_ints(desc, w)) if w else None
    return ManifoldInput(
        d=d, k=k, pi=spec, pi_dk=mod, G=G,
        md_values=span(desc, spec, "md") or SpanSpec(),
        md_eps_values=span(desc, spec, "md_eps"),
        W_values=W,
        lambda_UG_is_one=_flag(desc, desc.one("module", "attest_dual")),
        orbit_bound=orbit_bound if orbit_bound is not None else option_int(desc, "orbit_bound", DEFAULT_ORBIT_BOUND),
    )


def option_int(desc: Descriptor, key: str, default: int) -> int:
    e = desc.one("options", key)
    if e is None:
        return default
    v = _int(desc, e)
    if v < 0:
        raise desc.error(f"{key} must be >= 0", e)
    return v


def option_flag(desc: Descriptor, key: str, default: bool = False) -> bool:
    return _flag(desc, desc.one("options", key), default)


def option_str(desc: Descriptor, key: str, default: str, allowed: tuple[str, ...]) -> str:
    e = desc.one("options", key)
    if e is None:
        return default
    if e.value not in allowed:
        raise desc.error(f"{key} must be one of {', '.join(allowed)}", e)
    return e.value


def homotopy_data(desc: Descriptor) -> str | AbelianGroup | None:
    """``pi_dl1`` is an abelian group (``Z/2``, ``Z^2``) or free-form text."""
    e = desc.one("dims", "pi_dl1")
    if e is None:
        return None
    try:
        return parse_abelian_group(e.value)
    except ValueError:
        return e.value
