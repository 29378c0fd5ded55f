"""Dax invariants of double-point traces and their target quotients.

The target of the invariant is ``Z[pi] / R`` where ``R`` is spanned by
``g - eps * g^-1`` (``eps = (-1)^(d - ell)``) when ``ell >= 2`` and is zero
when ``ell == 1``.  Classes are handled through a canonical form: one
representative per pair ``{g, g^-1}`` (the smaller one in the group's
canonical order), with self-inverse elements reduced mod 2 when ``eps = -1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .abelian import INFINITE, AbelianGroup, Presentation
from .groups import Element, GroupError, GroupSpec
from .ring import RingElement, check_element


@dataclass(frozen=True)
class ParityContext:
    ell: int
    d: int

    def __post_init__(self):
        if self.ell < 1 or self.d < 1:
            raise ValueError("need ell >= 1 and d >= 1")

    @property
    def sign(self) -> int:
        return -1 if (self.d - self.ell) % 2 else 1

    @property
    def relations_trivial(self) -> bool:
        return self.ell == 1


def _representative(spec: GroupSpec, g: Element) -> Element:
    gi = spec.invert(g)
    return min(g, gi, key=spec.sort_key)


def canonical_form(ctx: ParityContext, spec: GroupSpec, x: RingElement,
                   drop_identity: bool = False) -> RingElement:
    check_element(spec, x)
    e = spec.identity
    if ctx.relations_trivial:
        if drop_identity and x.coefficient(e):
            return x - RingElement.basis(e, x.coefficient(e))
        return x
    eps = ctx.sign
    acc: dict[Element, int] = {}
    for g, c in x.items():
        rep = _representative(spec, g)
        acc[rep] = acc.get(rep, 0) + (c if rep == g else eps * c)
    for rep in list(acc):
        if eps == -1 and spec.is_self_inverse(rep):
            acc[rep] %= 2
    if drop_identity:
        acc.pop(e, None)
    return RingElement(acc)


def relation_generators(ctx: ParityContext, spec: GroupSpec) -> list[RingElement]:
    """The nonzero generators ``g - eps g^-1`` of R (finite groups only)."""
    if ctx.relations_trivial:
        return []
    out = []
    for g in spec.elements():
        r = RingElement.basis(g) - RingElement.basis(spec.invert(g), ctx.sign)
        if r:
            out.append(r)
    return out


def canonical_basis(ctx: ParityContext, spec: GroupSpec, drop_identity: bool) -> list[Element]:
    """Representatives indexing the summands of ``Z[pi]/R`` (finite groups)."""
    if not spec.has_finite_order:
        raise GroupError("canonical basis only exists for finite groups")
    if ctx.relations_trivial:
        reps = spec.elements()
    else:
        reps = sorted({_representative(spec, g) for g in spec.elements()}, key=spec.sort_key)
    if drop_identity:
        reps = [g for g in reps if g != spec.identity]
    return reps


def relations_quotient_group(ctx: ParityContext, spec: GroupSpec,
                             drop_identity: bool = False) -> AbelianGroup:
    """Isomorphism type of ``Z[pi]/R`` (or ``Z[pi - 1]/R``), counted directly
    from the pairing ``g <-> g^-1``: a free summand per pair, and per
    self-inverse element either Z (eps = +1) or Z/2 (eps = -1)."""
    if not spec.has_finite_order:
        raise GroupError("Z[pi]/R has infinite rank for infinite pi; use canonical_form instead")
    reps = canonical_basis(ctx, spec, drop_identity)
    if ctx.relations_trivial or ctx.sign == 1:
        return AbelianGroup(len(reps))
    involutions = sum(1 for g in reps if spec.is_self_inverse(g))
    return AbelianGroup(len(reps) - involutions, (2,) * involutions)


@dataclass(frozen=True)
class DaxClass:
    ctx: ParityContext
    value: RingElement
    drop_identity: bool = False


@dataclass(frozen=True)
class Trace:
    """Signed, group-labelled double points, in the order they were recorded."""

    events: tuple[tuple[int, Element], ...] = ()

    def __post_init__(self):
        for sign, _ in self.events:
            if sign not in (1, -1):
                raise ValueError(f"event sign must be +1 or -1, got {sign!r}")

    def __add__(self, other: "Trace") -> "Trace":
        return Trace(self.events + other.events)

    def negated(self) -> "Trace":
        return Trace(tuple((-s, g) for s, g in self.events))

    def as_ring_element(self) -> RingElement:
        return RingElement((g, s) for s, g in self.events)


def dax_of_trace(ctx: ParityContext, spec: GroupSpec, t: Trace,
                 drop_identity: bool = False) -> DaxClass:
    for _, g in t.events:
        spec.check(g)
    return DaxClass(ctx, canonical_form(ctx, spec, t.as_ring_element(), drop_identity), drop_identity)


@dataclass(frozen=True)
class SpanSpec:
    """Abelian-group generators of a subgroup of the Dax target."""

    generators: tuple[RingElement, ...] = ()

    @classmethod
    def of(cls, gens: Iterable[RingElement]) -> "SpanSpec":
        return cls(tuple(gens))

    def canonical(self, ctx: ParityContext, spec: GroupSpec, drop_identity: bool) -> "SpanSpec":
        return SpanSpec(tuple(canonical_form(ctx, spec, g, drop_identity) for g in self.generators))


@dataclass(frozen=True)
class DaxQuotient:
    """``Z[pi]/(R + span)`` (or with the identity dropped).

    For finite ``pi`` this is an honest finitely generated abelian group.  For
    free ``pi`` every query touches finitely many group elements, so
    membership and orders are decided by linear algebra on the union of the
    supports involved; only the integer span of the listed generators is
    divided out (``relative`` is then set).
    """

    ctx: ParityContext
    spec: GroupSpec
    span: SpanSpec = field(default_factory=SpanSpec)
    drop_identity: bool = False

    @property
    def relative(self) -> bool:
        return not self.spec.has_finite_order

    def reduce(self, x: RingElement) -> RingElement:
        return canonical_form(self.ctx, self.spec, x, self.drop_identity)

    def _generators(self) -> list[RingElement]:
        return [g for g in (self.reduce(x) for x in self.span.generators) if g]

    def _local_presentation(self, extra: Sequence[RingElement]) -> tuple[Presentation, list[Element]]:
        gens = self._generators()
        support = set()
        for x in list(gens) + list(extra):
            support |= x.support
        if self.spec.has_finite_order:
            basis = canonical_basis(self.ctx, self.spec, self.drop_identity)
        else:
            basis = sorted(support, key=self.spec.sort_key)
        index = {g: i for i, g in enumerate(basis)}
        rows = []
        if not self.ctx.relations_trivial and self.ctx.sign == -1:
            for g in basis:
                if self.spec.is_self_inverse(g):
                    rows.append(tuple(2 if i == index[g] else 0 for i in range(len(basis))))
        for x in gens:
            v = [0] * len(basis)
            for g, c in x.items():
                v[index[g]] += c
            rows.append(tuple(v))
        return Presentation(len(basis), tuple(rows)), basis

    def _vector(self, x: RingElement, basis: list[Element]) -> list[int]:
        index = {g: i for i, g in enumerate(basis)}
        v = [0] * len(basis)
        for g, c in x.items():
            v[index[g]] += c
        return v

    def group(self) -> AbelianGroup:
        if not self.spec.has_finite_order:
            raise GroupError("quotient of Z[pi] for infinite pi is not finitely generated")
        pres, _ = self._local_presentation(())
        return pres.group()

    def contains(self, x: RingElement) -> bool:
        """Is ``x`` zero in the quotient?"""
        y = self.reduce(x)
        pres, basis = self._local_presentation([y])
        return pres.contains(self._vector(y, basis))

    def equal(self, x: RingElement, y: RingElement) -> bool:
        return self.contains(x - y)

    def order(self, x: RingElement) -> int | None:
        y = self.reduce(x)
        pres, basis = self._local_presentation([y])
        return pres.order(self._vector(y, basis))

    def describe(self, fmt=None) -> str:
        base = "Z[pi - 1]" if self.drop_identity else "Z[pi]"
        rel = "R" if not self.ctx.relations_trivial else ""
        parts = [p for p in (rel, "span" if self._generators() else "") if p]
        text = base + ("/(" + " + ".join(parts) + ")" if parts else "")
        if self.relative:
            text += ", relative to listed generators"
        return text


def md_image_quotient(ctx: ParityContext, spec: GroupSpec, md_values: SpanSpec,
                      drop_identity: bool = False):
    """``AbelianGroup`` for finite pi, otherwise a lazy :class:`DaxQuotient`."""
    q = DaxQuotient(ctx, spec, md_values, drop_identity)
    return q.group() if spec.has_finite_order else q


def framing_count(ctx: ParityContext, spec: GroupSpec, md_eps_values: SpanSpec) -> int | None:
    """Number of augmentations in the even case: twice the order of the class
    of 1 in ``Z[pi]/(R + md^eps)``; ``INFINITE`` (``None``) for countably many."""
    if ctx.sign != 1:
        raise ValueError(
            "framing count applies when d - ell is even; for d - ell odd every family "
            "has Z many augmentations")
    q = DaxQuotient(ctx, spec, md_eps_values, drop_identity=False)
    m = q.order(RingElement.basis(spec.identity))
    return INFINITE if m is INFINITE else 2 * m


def md_eps_from_md(k: int, d: int, spec: GroupSpec, md_values: SpanSpec) -> SpanSpec:
    """``<1> + md`` in the cases where that formula holds (d - k even, or k = 2)."""
    if not ((d - k) % 2 == 0 or k == 2):
        raise ValueError("explicit md^eps required: no formula relates it to md when d - k is odd and k >= 3")
    one = RingElement.basis(spec.identity)
    return SpanSpec((one,) + tuple(md_values.generators))
