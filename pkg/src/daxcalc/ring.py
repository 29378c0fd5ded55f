"""Integer group rings: finite formal sums of group elements."""
from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .groups import Element, GroupError, GroupSpec


class RingElement:
    """A finitely supported map ``group element -> nonzero int``.

    Immutable; zero coefficients are never stored.  Elements do not carry
    their group, so operations that need inverses or products take a
    :class:`GroupSpec`.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Element, int] | Iterable[tuple[Element, int]] = ()):
        acc: dict[Element, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for g, c in items:
            c = int(c)
            if c:
                acc[g] = acc.get(g, 0) + c
                if acc[g] == 0:
                    del acc[g]
        self._terms = acc
        self._hash = None

    @classmethod
    def basis(cls, g: Element, coeff: int = 1) -> "RingElement":
        return cls({g: coeff})

    @classmethod
    def zero(cls) -> "RingElement":
        return cls()

    def coefficient(self, g: Element) -> int:
        return self._terms.get(g, 0)

    def items(self):
        return self._terms.items()

    @property
    def support(self) -> frozenset:
        return frozenset(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[Element]:
        return iter(self._terms)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "RingElement") -> "RingElement":
        merged = dict(self._terms)
        for g, c in other._terms.items():
            merged[g] = merged.get(g, 0) + c
        return RingElement(merged)

    def __neg__(self) -> "RingElement":
        return RingElement({g: -c for g, c in self._terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scale(self, n: int) -> "RingElement":
        return RingElement({g: n * c for g, c in self._terms.items()})

    def __repr__(self):
        return f"RingElement({dict(sorted(self._terms.items(), key=repr))!r})"

    def sorted_terms(self, spec: GroupSpec) -> list[tuple[Element, int]]:
        return sorted(self._terms.items(), key=lambda t: spec.sort_key(t[0]))


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_involution(spec: GroupSpec, x: RingElement, sign: int) -> RingElement:
    """``sum c_g g  ->  sum (sign * c_g) g^-1``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return RingElement((spec.invert(g), sign * c) for g, c in x.items())


def ring_multiply(spec: GroupSpec, x: RingElement, y: RingElement) -> RingElement:
    acc: dict[Element, int] = {}
    for g, a in x.items():
        for h, b in y.items():
            gh = spec.multiply(g, h)
            acc[gh] = acc.get(gh, 0) + a * b
    return RingElement(acc)


def check_element(spec: GroupSpec, x: RingElement) -> RingElement:
    for g in x:
        spec.check(g)
    return x


# terms split at '+'/'-' except where the sign belongs to an exponent
_TERM_SPLIT = re.compile(r"(?<![\^{])\s*([+-])\s*")


def parse_ring_element(spec: GroupSpec, text: str) -> RingElement:
    """Parse ``2*g - h + 1``-style expressions.  ``1`` is the group identity
    and a bare integer ``n`` means ``n*1``; ``0`` is the zero element."""
    s = text.strip()
    if not s:
        raise GroupError("empty ring element")
    pieces = _TERM_SPLIT.split(s)
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    if len(pieces) % 2:
        raise GroupError(f"cannot parse ring element {text!r}")
    acc: dict[Element, int] = {}
    for sign, term in zip(pieces[::2], pieces[1::2]):
        term = term.strip()
        if not term:
            raise GroupError(f"dangling sign in {text!r}")
        m = re.fullmatch(r"(\d+)\s*(?:\*\s*(.+))?", term)
        if m:
            coeff = int(m.group(1))
            g = spec.parse(m.group(2)) if m.group(2) else spec.identity
        else:
            coeff = 1
            g = spec.parse(term)
        coeff = -coeff if sign == "-" else coeff
        acc[g] = acc.get(g, 0) + coeff
    return RingElement(acc)


def format_ring_element(spec: GroupSpec, x: RingElement) -> str:
    if not x:
        return "0"
    out = []
    for i, (g, c) in enumerate(x.sorted_terms(spec)):
        label = spec.format(g)
        mag = abs(c)
        body = label if mag == 1 else f"{mag}*{label}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)
