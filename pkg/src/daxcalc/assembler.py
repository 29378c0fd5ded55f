"""Extension reports for spaces of embedded disks.

The reports combine the Dax quotients of :mod:`daxcalc.dax` with the
frame-bundle case logic of :mod:`daxcalc.frames`.  Homotopy groups of the
ambient manifold are never computed; they are user data or symbolic names.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .abelian import INFINITE, AbelianGroup, IntMatrix, Presentation, smith_normal_form, solve_integer
from .dax import (DaxQuotient, ParityContext, SpanSpec, framing_count, md_eps_from_md)
from .frames import (HOPF_DIMS, HOPF_ODD, CoefficientGroup, Splitting, splitting_exists, z_kd)
from .groups import Element, GroupError, GroupSpec
from .ring import RingElement, format_ring_element

DEFAULT_ORBIT_BOUND = 4


class ModuleError(ValueError):
    """Inconsistent module data (actions incompatible with the relations)."""


Matrix = tuple[tuple[int, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in zip(*b)) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _row_times(v: Sequence[int], a: Matrix) -> tuple[int, ...]:
    if not a:
        return tuple(v)
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0])))


def _rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    if not rows:
        return 0
    _, D, _ = smith_normal_form(IntMatrix.from_rows(rows, ncols))
    return sum(1 for i in range(min(D.rows, D.cols)) if D[i, i])


@dataclass(frozen=True)
class ModuleData:
    """``Z^n / relations`` with a left action of pi.

    ``actions`` maps a group generator name (finite pi) or letter (free pi)
    to an n x n matrix whose row i is the image of basis vector i, so
    ``g . v = v A_g``.  Generators without an entry act trivially.
    """

    generators: int
    relations: Matrix = ()
    actions: tuple[tuple[str, Matrix], ...] = ()
    names: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.generators
        if n < 0:
            raise ModuleError("number of module generators must be >= 0")
        for r in self.relations:
            if len(r) != n:
                raise ModuleError(f"relation {list(r)} must have {n} entries")
        for name, a in self.actions:
            if len(a) != n or any(len(row) != n for row in a):
                raise ModuleError(f"action of {name} must be a {n} x {n} matrix")
        if self.names and len(self.names) != n:
            raise ModuleError("one name per module generator")

    @classmethod
    def build(cls, generators: int, relations=(), actions: Mapping[str, Sequence[Sequence[int]]] | None = None,
              names: Sequence[str] = ()) -> "ModuleData":
        acts = tuple(sorted((k, tuple(tuple(int(x) for x in row) for row in v))
                            for k, v in (actions or {}).items()))
        rels = tuple(tuple(int(x) for x in r) for r in relations)
        return cls(generators, rels, acts, tuple(names))

    @property
    def presentation(self) -> Presentation:
        return Presentation(self.generators, self.relations)

    def group(self) -> AbelianGroup:
        return self.presentation.group()

    def action(self, name: str) -> Matrix:
        return dict(self.actions).get(name, _identity(self.generators))

    def _same_mod_relations(self, a: Matrix, b: Matrix) -> bool:
        pres = self.presentation
        return all(pres.contains([x - y for x, y in zip(ra, rb)]) for ra, rb in zip(a, b))

    def _preserves_relations(self, a: Matrix) -> bool:
        pres = self.presentation
        return all(pres.contains(_row_times(r, a)) for r in self.relations)

    def element_matrices(self, spec: GroupSpec) -> dict[Element, Matrix]:
        """Matrix of every element of a finite pi, checking that the generator
        actions define a homomorphism into automorphisms of the module."""
        if not spec.has_finite_order:
            raise GroupError("element matrices need a finite group")
        self._check_names(spec)
        named = list(spec.generators) if spec.is_finite else []
        if spec.is_finite and not named:
            named = [(spec.labels[g], g) for g in spec.elements() if g != spec.identity]
        gens = [(name, idx, self.action(name)) for name, idx in named]
        for name, _, a in gens:
            if not self._preserves_relations(a):
                raise ModuleError(f"action of {name} does not preserve the relation lattice")
        mats = {spec.identity: _identity(self.generators)}
        frontier = [spec.identity]
        while frontier:
            nxt = []
            for h in frontier:
                for name, s, a in gens:
                    hs = spec.multiply(h, s)
                    m = _matmul(a, mats[h])      # (h s) . v = h . (s . v)
                    if hs in mats:
                        if not self._same_mod_relations(m, mats[hs]):
                            raise ModuleError(
                                f"actions are not a group action: two products give {spec.format(hs)} "
                                f"with different matrices")
                    else:
                        mats[hs] = m
                        nxt.append(hs)
            frontier = nxt
        names = {n for n, _ in named}
        for name, a in self.actions:
            if name not in names:
                g = spec.parse(name)
                if g in mats and not self._same_mod_relations(a, mats[g]):
                    raise ModuleError(f"action given for {name} disagrees with the action generated by the generators")
        if len(mats) != len(spec.elements()):
            raise ModuleError("named generators do not generate the group")
        return mats

    def letter_matrices(self, spec: GroupSpec) -> dict[tuple[int, int], Matrix]:
        """``(letter, +-1) -> matrix`` for free pi; inverses solved over Z."""
        self._check_names(spec)
        n = self.generators
        out = {}
        for i, name in enumerate(spec.letters):
            a = self.action(name)
            if not self._preserves_relations(a):
                raise ModuleError(f"action of {name} does not preserve the relation lattice")
            # row j of the inverse solves x A = e_j modulo the relations
            stacked = IntMatrix.from_rows(list(a) + list(self.relations), n).transpose()
            inv = []
            for j in range(n):
                sol = solve_integer(stacked, [int(t == j) for t in range(n)])
                if sol is None:
                    raise ModuleError(f"action of {name} is not invertible modulo the relations")
                inv.append(tuple(sol[:n]))
            out[(i, 1)] = a
            out[(i, -1)] = tuple(inv)
        return out

    def _check_names(self, spec: GroupSpec):
        known = ({name for name, _ in spec.generators} | set(spec.labels)) if spec.is_finite else set(spec.letters)
        for name, _ in self.actions:
            if name not in known:
                raise ModuleError(f"action given for {name!r}, which is not a generator of {spec.describe()}")

    def word_matrix(self, spec: GroupSpec, word, letters: Mapping) -> Matrix:
        m = _identity(self.generators)
        for letter, exp in word:
            step = letters[(letter, 1 if exp > 0 else -1)]
            for _ in range(abs(exp)):
                m = _matmul(step, m)   # w = x1 x2 ... xn acts on rows by A_xn ... A_x1
        return m


@dataclass(frozen=True)
class ManifoldInput:
    d: int
    k: int
    pi: GroupSpec
    pi_dk: ModuleData
    G: tuple[int, ...]
    md_values: SpanSpec = field(default_factory=SpanSpec)
    md_eps_values: SpanSpec | None = None
    W_values: tuple[int, ...] | None = None
    lambda_UG_is_one: bool = False
    orbit_bound: int = DEFAULT_ORBIT_BOUND


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Diagnosis:
    title: str
    validity: tuple[Check, ...]
    notes: tuple[str, ...] = ()

    @property
    def failed(self) -> tuple[Check, ...]:
        return tuple(c for c in self.validity if not c.passed)


@dataclass(frozen=True)
class DualQuotient:
    group: AbelianGroup
    relative: bool
    orbit_size: int
    orbit_bound: int | None = None

    def __str__(self):
        s = str(self.group)
        if self.relative:
            s += f" (relative: translates by words of length <= {self.orbit_bound})"
        return s


@dataclass(frozen=True)
class ExtensionReport:
    """A short exact sequence ``kernel >-> middle ->> cokernel``.

    Only built when every validity item passed; otherwise callers get a
    :class:`Diagnosis`.
    """

    title: str
    validity: tuple[Check, ...]
    kernel: AbelianGroup | str
    middle: str
    cokernel: str
    maps: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    kernel_case: str = ""
    cokernel_parts: tuple[tuple[str, object], ...] = ()
    extras: tuple[tuple[str, object], ...] = ()
    kind: str = "groups"

    def __post_init__(self):
        bad = [c.name for c in self.validity if not c.passed]
        if bad:
            raise AssertionError(f"extension report with failed hypotheses: {bad}")


def _finish(title: str, checks: list[Check], notes: list[str], build):
    if all(c.passed for c in checks):
        return build()
    return Diagnosis(title, tuple(checks), tuple(notes))


# -- pieces -------------------------------------------------------------------


def orbit_of_dual(inp: ManifoldInput) -> tuple[list[tuple[int, ...]], bool]:
    """Translates ``g . G``: all of pi when finite, words up to the orbit bound when free."""
    mod, spec, G = inp.pi_dk, inp.pi, tuple(inp.G)
    if spec.has_finite_order:
        mats = mod.element_matrices(spec)
        return [_row_times(G, mats[g]) for g in sorted(mats, key=spec.sort_key)], False
    letters = mod.letter_matrices(spec)
    return [_row_times(G, mod.word_matrix(spec, w, letters)) for w in spec.words_up_to(inp.orbit_bound)], True


def quotient_by_dual(inp: ManifoldInput) -> DualQuotient:
    """``pi_{d-k} M / Z[pi] G``."""
    if not inp.lambda_UG_is_one:
        raise ValueError("quotient by the dual needs an attested dual sphere (lambda(U, G) = 1)")
    if len(inp.G) != inp.pi_dk.generators:
        raise ModuleError(f"G has {len(inp.G)} coordinates, module has {inp.pi_dk.generators} generators")
    orbit, relative = orbit_of_dual(inp)
    pres = Presentation(inp.pi_dk.generators, tuple(inp.pi_dk.relations) + tuple(orbit))
    return DualQuotient(pres.group(), relative, len(orbit), inp.orbit_bound if relative else None)


def group_ring_injects(inp: ManifoldInput) -> bool | None:
    """Is ``Z[pi] -> pi_{d-k}M, g -> g G`` injective?  ``None`` for free pi."""
    if not inp.pi.has_finite_order:
        return None
    orbit, _ = orbit_of_dual(inp)
    n = inp.pi_dk.generators
    rels = list(inp.pi_dk.relations)
    return _rank(rels + orbit, n) - _rank(rels, n) == len(orbit)


@dataclass(frozen=True)
class MdTransfer:
    check: Check
    md_values: SpanSpec
    md_eps_values: SpanSpec | None
    source: str


def _span_contains(ctx, spec, span: SpanSpec, x: RingElement) -> bool:
    return DaxQuotient(ctx, spec, span).contains(x)


def md_transfer_check(inp: ManifoldInput) -> MdTransfer:
    """Resolve md^eps for the frame-bundle kernel; md of M is reused for M_G."""
    ctx = ParityContext(max(inp.k - 1, 1), inp.d)
    covered = (inp.d - inp.k) % 2 == 0 or inp.k == 2
    if covered:
        derived = md_eps_from_md(inp.k, inp.d, inp.pi, inp.md_values)
        if inp.md_eps_values is None:
            return MdTransfer(Check("md^eps resolved", True, "<1> + md"), inp.md_values, derived, "derived")
        given = inp.md_eps_values
        same = (all(_span_contains(ctx, inp.pi, given, x) for x in derived.generators)
                and all(_span_contains(ctx, inp.pi, derived, x) for x in given.generators))
        detail = "explicit md^eps agrees with <1> + md" if same else "explicit md^eps differs from <1> + md"
        return MdTransfer(Check("md^eps resolved", same, detail), inp.md_values, given, "checked")
    if inp.md_eps_values is None:
        return MdTransfer(Check("md^eps resolved", False,
                                "explicit md^eps required: d - k odd and k >= 3"), inp.md_values, None, "missing")
    return MdTransfer(Check("md^eps resolved", True, "explicit md^eps (no formula in this parity)"),
                      inp.md_values, inp.md_eps_values, "explicit")


def _kernel_case(ctx: ParityContext) -> str:
    if ctx.ell == 1:
        return "ell = 1: R = 0"
    if ctx.sign == -1:
        return "ell >= 2, d - ell odd: R = <g + g^-1>"
    return "ell >= 2, d - ell even: R = <g - g^-1>"


def _span_text(spec: GroupSpec, span: SpanSpec) -> str:
    gens = [format_ring_element(spec, x) for x in span.generators if x]
    return "{" + ", ".join(gens) + "}"


def _kernel(ctx: ParityContext, spec: GroupSpec, span: SpanSpec, drop_identity: bool):
    q = DaxQuotient(ctx, spec, span, drop_identity)
    if spec.has_finite_order:
        return q.group(), q
    base = "Z[pi - 1]" if drop_identity else "Z[pi]"
    parts = ([] if ctx.relations_trivial else ["R"]) + ([f"<{_span_text(spec, span)[1:-1]}>"]
                                                       if any(span.generators) else [])
    if not parts:
        return base + " (free abelian)", q
    return f"{base}/({' + '.join(parts)}), relative to listed generators", q


# -- reports --------------------------------------------------------------------


def _w_checks(inp: ManifoldInput) -> tuple[list[Check], list[str]]:
    """Validity of a supplied integral lift W of the spherical Stiefel-Whitney class."""
    checks, notes = [], []
    c = inp.d - inp.k
    needs_w = c == inp.k and c in HOPF_DIMS
    if inp.W_values is None:
        if needs_w:
            notes.append("W not supplied: eta_{W,U} = (e(nuK, nuU) - W(-U u K))/2 is stated without a value of W")
        return checks, notes
    W = tuple(inp.W_values)
    mod = inp.pi_dk
    if len(W) != mod.generators:
        checks.append(Check("W well defined", False, f"W has {len(W)} values for {mod.generators} generators"))
        return checks, notes
    dot = lambda v: sum(a * b for a, b in zip(W, v))
    ok_rel = all(dot(r) == 0 for r in mod.relations)
    checks.append(Check("W well defined", ok_rel, "W vanishes on relations" if ok_rel else "W is nonzero on a relation"))
    wg = dot(inp.G)
    checks.append(Check("W(G) = 0", wg == 0, f"W(G) = {wg}"))
    mats = (list(mod.element_matrices(inp.pi).values()) if inp.pi.has_finite_order
            else list(mod.letter_matrices(inp.pi).values()))
    inv = all(dot(_row_times(e, m)) == dot(e) for m in mats for e in _identity(mod.generators))
    checks.append(Check("W is pi-invariant", inv, "W(g v) = W(v)" if inv else "W(g v) != W(v) for some g, v"))
    if not needs_w:
        notes.append("W supplied but unused: the spherical Stiefel-Whitney correction only enters when d - k = k in {2, 4, 8}")
    return checks, notes


def theorem_d_report(inp: ManifoldInput):
    """``Z[pi]/(R_{k-1,d} + md^eps) >-> pi_{d-2k}(Emb_s(D^k, M), U) ->> Z_{k,d} + pi_{d-k}M / Z[pi]G``."""
    title = f"pi_{inp.d - 2 * inp.k} Emb_s(D^{inp.k}, M), d = {inp.d}"
    d, k = inp.d, inp.k
    checks = [
        Check("k >= 2", k >= 2, f"k = {k}; for k = 1 use the arc splitting"),
        Check("d - 2k >= 0", d - 2 * k >= 0, f"d - 2k = {d - 2 * k}"),
        Check("d - k not in {1, 3, 7}", (d - k) not in HOPF_ODD,
              f"d - k = {d - k}; the extension needs d - k != 1, 3, 7"),
        Check("dual attested", bool(inp.lambda_UG_is_one), "lambda(U, G) = 1 for a framed dual sphere G"),
    ]
    if len(inp.G) != inp.pi_dk.generators:
        raise ModuleError(f"G has {len(inp.G)} coordinates, module has {inp.pi_dk.generators} generators")
    g_zero = inp.pi_dk.presentation.contains(inp.G)
    checks.append(Check("G nonzero", not g_zero or inp.pi_dk.group().is_trivial,
                        "G is zero in a nonzero module" if g_zero and not inp.pi_dk.group().is_trivial else "ok"))
    notes: list[str] = []
    if not all(c.passed for c in checks):
        return Diagnosis(title, tuple(checks), tuple(notes))
    transfer = md_transfer_check(inp)
    checks.append(transfer.check)
    w_checks, w_notes = _w_checks(inp)
    checks += w_checks
    notes += w_notes
    if not all(c.passed for c in checks):
        return Diagnosis(title, tuple(checks), tuple(notes))

    ctx = ParityContext(k - 1, d)
    kernel, _ = _kernel(ctx, inp.pi, transfer.md_eps_values, drop_identity=False)
    dual = quotient_by_dual(inp)
    coeff = z_kd(k, d)
    coker_group = coeff.group.direct_sum(dual.group)
    cokernel = f"{coeff} ⊕ {dual}"
    verdict, rule = splitting_exists(k, d, "tangent_bundle_of_compact_manifold")
    c = d - k
    if c % 2:
        eta = "eta: Z/2-valued, determined by the frame bundle (no explicit formula)"
    elif c == k and c in HOPF_DIMS:
        eta = "eta_{W,U}(K) = (e(nuK, nuU) - W(-U u K))/2"
    else:
        eta = "eta_{W,U}(K) = e(nuK, nuU)/2, and Z splits back"
    maps = (
        "kernel -> middle: ambient isotopy after the augmented realization map",
        "middle -> kernel (on the image): Dax invariant of the augmented foliation",
        f"middle -> cokernel: eta_{{W,U}} ⊕ (-U u .); {eta}",
    )
    notes += [
        f"kernel case ({_kernel_case(ctx)}), with ell = k - 1 = {k - 1}",
        "md of M is used verbatim for M_G (images agree as subgroups)",
        f"md^eps: {transfer.source} {_span_text(inp.pi, transfer.md_eps_values)}",
        f"splitting of the frame-bundle extension: {verdict.value} ({rule})",
    ]
    inj = group_ring_injects(inp)
    if inj is False:
        notes.append("advisory: Z[pi] -> pi_{d-k}M, g -> gG is not injective; a geometric dual makes it a split injection")
    if d - 2 * k - 1 >= 0:
        notes.append(f"stable range: pi_n Emb_s(D^{k}, M) = pi_(n+{k}) M for n <= {d - 2 * k - 1} (user homotopy data)")
    if d == 2 * k:
        notes.append("d = 2k: pi_0 carries a group structure from the loop-space description; "
                     "the sequence is reported as an extension of underlying sets")
    if dual.relative:
        notes.append("cokernel quotient uses translates of G by words up to the orbit bound only")
    extras = [("Z_kd", coeff.value), ("dual_quotient", dual.group), ("dual_relative", dual.relative),
              ("cokernel_group", coker_group), ("splitting", verdict.value)]
    if inp.W_values is not None:
        extras.append(("W", tuple(inp.W_values)))
    return ExtensionReport(
        title=title, validity=tuple(checks), kernel=kernel,
        middle=f"pi_{d - 2 * k}(Emb_s(D^{k}, M), U)", cokernel=cokernel, maps=maps, notes=tuple(notes),
        kernel_case=_kernel_case(ctx), cokernel_parts=(("coefficient", coeff.value), ("module", dual.group)),
        extras=tuple(extras), kind="groups" if d > 2 * k else "groups (d = 2k)")


def theorem_c_report(ell: int, d: int, pi: GroupSpec, md_values: SpanSpec = SpanSpec(),
                     pi_dl1: str | AbelianGroup | None = None):
    """``Z[pi - 1]/(R + md) >-> pi_{d-2ell-1}(Emb(D^ell, X), u) ->> pi_{d-ell-1} X``."""
    title = f"pi_{d - 2 * ell - 1} Emb(D^{ell}, X), d = {d}"
    checks = [
        Check("ell >= 1", ell >= 1, f"ell = {ell}"),
        Check("d >= ell + 3", d >= ell + 3, f"d - ell = {d - ell}"),
        Check("d - 2 ell >= 0", d - 2 * ell >= 0, f"d - 2 ell = {d - 2 * ell}"),
    ]
    if not all(c.passed for c in checks):
        return Diagnosis(title, tuple(checks))
    ctx = ParityContext(ell, d)
    target = str(pi_dl1) if pi_dl1 is not None else f"pi_{d - ell - 1} X"
    notes = [f"relations: {_kernel_case(ctx)}"]
    if d - 2 * ell - 2 >= 0:
        notes.append(f"p_u: pi_n Emb(D^{ell}, X) = pi_(n+{ell}) X for 0 <= n <= {d - 2 * ell - 2}")
    if d - 2 * ell == 0:
        kernel, q = _kernel(ctx, pi, SpanSpec(), drop_identity=False)
        notes.append("Dax invariant of the immersion boundary agrees with the Wall self-intersection "
                     "invariant, hence with the Hatcher-Quinn invariant for simply connected sources")
        return ExtensionReport(
            title=f"pi_0 Emb(D^{ell}, X), d = {d}", validity=tuple(checks), kernel=kernel,
            middle=f"pi_0 Imm(D^{ell}, X)", cokernel=f"pi_0 Emb(D^{ell}, X) (exact sequence of sets)",
            maps=("pi_0 Emb -> pi_0 Imm -> Z[pi]/R via the Dax invariant of the immersion boundary",),
            notes=tuple(notes), kernel_case=_kernel_case(ctx), kind="sets (d = 2 ell)")
    kernel, _ = _kernel(ctx, pi, md_values, drop_identity=True)
    kind = "groups" if d - 2 * ell - 1 >= 1 else "sets (d - 2 ell - 1 = 0)"
    if d - 2 * ell - 1 == 0:
        notes.append("the realization map extends to an action on pi_0 Emb")
    return ExtensionReport(
        title=title, validity=tuple(checks), kernel=kernel,
        middle=f"pi_{d - 2 * ell - 1}(Emb(D^{ell}, X), u)", cokernel=target,
        maps=("kernel -> middle: realization map", "middle -> kernel (on the image): Dax invariant",
              "middle -> cokernel: p_u(f) = -u u f"),
        notes=tuple(notes), kernel_case=_kernel_case(ctx), cokernel_parts=(("module", target),), kind=kind)


def augmented_report(ell: int, d: int, pi: GroupSpec, md_values: SpanSpec = SpanSpec(),
                     md_eps_values: SpanSpec | None = None, pi_dl1: str | AbelianGroup | None = None):
    """Extension for augmented ell-disks: kernel by parity case, cokernel ``Z`` / ``Z/2`` plus pi_{d-ell-1} X."""
    title = f"pi_{d - 2 * ell - 1} Emb^eps(D^{ell}, X), d = {d}"
    checks = [
        Check("1 <= ell <= d - 3", 1 <= ell <= d - 3, f"ell = {ell}, d = {d}"),
        Check("d - 2 ell >= 1", d - 2 * ell >= 1, f"d - 2 ell = {d - 2 * ell}"),
    ]
    if not all(c.passed for c in checks):
        return Diagnosis(title, tuple(checks))
    ctx = ParityContext(ell, d)
    odd = (d - ell) % 2 == 1
    target = str(pi_dl1) if pi_dl1 is not None else f"pi_{d - ell - 1} X"
    notes = []
    if odd:
        kernel, _ = _kernel(ctx, pi, md_values, drop_identity=True)
        case = "ell = 1: Z[pi - 1]/md" if ell == 1 else "ell >= 2, d - ell odd: Z[pi - 1]/(<g + g^-1> + md)"
        coeff = CoefficientGroup.Z.value
        notes.append("d - ell odd: (eta, ev_0) splits off a Z, so every family has Z many augmentations")
        extras = [("augmentations", "Z")]
    else:
        checks.append(Check("md^eps supplied", md_eps_values is not None,
                            "explicit md^eps required when d - ell is even"))
        if md_eps_values is None:
            return Diagnosis(title, tuple(checks))
        kernel, _ = _kernel(ctx, pi, md_eps_values, drop_identity=False)
        case = ("ell = 1, d - ell even: Z[pi]/md^eps" if ell == 1
                else "ell >= 2, d - ell even: Z[pi]/(<g - g^-1> + md^eps)")
        if d - ell in HOPF_DIMS:
            coeff = "no general rule"
            notes.append(f"d - ell = {d - ell} in {{2, 4, 8}}: the coefficient of the cokernel has no general rule")
        else:
            coeff = CoefficientGroup.Z2.value
        count = framing_count(ctx, pi, md_eps_values)
        shown = "countably many" if count is INFINITE else count
        rel = "" if pi.has_finite_order else " (relative to listed generators)"
        notes.append(f"augmentations of a family: twice the order of 1 in Z[pi]/md^eps = {shown}{rel}")
        extras = [("augmentations", "infinite" if count is INFINITE else count)]
    if d - 2 * ell - 2 >= 1:
        notes.append(f"p_u: pi_n = pi_(n+{ell}) X for 1 <= n <= {d - 2 * ell - 2}")
    return ExtensionReport(
        title=title, validity=tuple(checks), kernel=kernel,
        middle=f"pi_{d - 2 * ell - 1}(Emb^eps(D^{ell}, X), u^eps)", cokernel=f"{coeff} ⊕ {target}",
        maps=("kernel -> middle: augmented realization map", "middle -> cokernel: (eta_W after derivative) ⊕ p_u"),
        notes=tuple(notes), kernel_case=case,
        cokernel_parts=(("coefficient", coeff), ("module", target)), extras=tuple(extras))
