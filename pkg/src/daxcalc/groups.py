"""Groups with solvable word problem: finite groups given by a Cayley table,
and finitely generated free groups given by reduced words.

Finite elements are table indices (``int``, identity at 0).  Free elements are
reduced words, stored as tuples of ``(letter_index, exponent)`` syllables with
nonzero exponents and no two adjacent syllables on the same letter.
"""
from __future__ import annotations

import itertools
import re
import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

Word = tuple[tuple[int, int], ...]
Element = Union[int, Word]

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")


class GroupError(ValueError):
    """Malformed element or group description."""


class GroupAxiomError(GroupError):
    """A multiplication table that fails to describe a group."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


def reduce_word(syllables: Iterable[tuple[int, int]]) -> Word:
    """Freely reduce a sequence of syllables (stack based, so confluent)."""
    out: list[list[int]] = []
    for letter, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == letter:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([letter, exp])
    return tuple((l, e) for l, e in out)


def word_length(w: Word) -> int:
    return sum(abs(e) for _, e in w)


def _expanded_codes(w: Word) -> tuple[int, ...]:
    # letter order a < a^-1 < b < b^-1 < ...
    codes: list[int] = []
    for letter, exp in w:
        code = 2 * letter + (1 if exp < 0 else 0)
        codes.extend([code] * abs(exp))
    return tuple(codes)


@dataclass(frozen=True)
class GroupSpec:
    """An ambient fundamental group.

    Build instances with the constructors below (:func:`free_group`,
    :func:`cyclic_group`, :func:`table_group`, ...) rather than directly;
    they validate the data.
    """

    kind: str  # "finite" | "free"
    order: int = 0
    table: tuple[tuple[int, ...], ...] = ()
    inverses: tuple[int, ...] = ()
    labels: tuple[str, ...] = ()
    rank: int = 0
    letters: tuple[str, ...] = ()
    # named generators usable in words; for finite groups (label, index)
    generators: tuple[tuple[str, int], ...] = ()
    name: str = ""
    _label_index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind == "finite":
            object.__setattr__(self, "_label_index", {l: i for i, l in enumerate(self.labels)})
        elif self.kind == "free":
            object.__setattr__(self, "_label_index", {l: i for i, l in enumerate(self.letters)})
        else:
            raise GroupError(f"unknown group kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def has_finite_order(self) -> bool:
        """True for table groups and for the rank-0 free group."""
        return self.is_finite or self.rank == 0

    @property
    def identity(self) -> Element:
        return 0 if self.is_finite else ()

    def elements(self) -> list[Element]:
        if not self.is_finite:
            if self.rank == 0:
                return [()]
            raise GroupError("free groups have infinitely many elements")
        return list(range(self.order))

    def is_identity(self, g: Element) -> bool:
        return g == self.identity

    def check(self, g: Element) -> Element:
        """Return ``g`` if it is a valid element of this group, else raise."""
        if self.is_finite:
            if not isinstance(g, int) or isinstance(g, bool) or not 0 <= g < self.order:
                raise GroupError(f"element {g!r} out of range for group of order {self.order}")
            return g
        if not isinstance(g, tuple):
            raise GroupError(f"malformed word {g!r}")
        prev = None
        for syl in g:
            if not (isinstance(syl, tuple) and len(syl) == 2):
                raise GroupError(f"malformed word {g!r}")
            letter, exp = syl
            if not 0 <= letter < self.rank or exp == 0 or letter == prev:
                raise GroupError(f"word {g!r} is not reduced over {self.rank} letters")
            prev = letter
        return g

    def multiply(self, g: Element, h: Element) -> Element:
        self.check(g)
        self.check(h)
        if self.is_finite:
            return self.table[g][h]
        return reduce_word(g + h)

    def invert(self, g: Element) -> Element:
        self.check(g)
        if self.is_finite:
            return self.inverses[g]
        return tuple((l, -e) for l, e in reversed(g))

    def power(self, g: Element, n: int) -> Element:
        if n < 0:
            g, n = self.invert(g), -n
        out = self.identity
        for _ in range(n):
            out = self.multiply(out, g)
        return out

    def sort_key(self, g: Element):
        """Canonical total order: table index, or shortlex on reduced words."""
        if self.is_finite:
            return (g,)
        return (word_length(g), _expanded_codes(g))

    def is_self_inverse(self, g: Element) -> bool:
        return self.invert(g) == g

    def letter(self, i: int, exp: int = 1) -> Word:
        return reduce_word([(i, exp)])

    def words_up_to(self, length: int) -> list[Word]:
        """All reduced words of length <= ``length``, in shortlex order."""
        if self.is_finite:
            raise GroupError("words_up_to is only meaningful for free groups")
        out: list[Word] = [()]
        frontier: list[Word] = [()]
        for _ in range(length):
            nxt = []
            for w in frontier:
                for code in range(2 * self.rank):
                    letter, exp = code // 2, (-1 if code % 2 else 1)
                    if w and w[-1][0] == letter and (w[-1][1] > 0) != (exp > 0):
                        continue
                    nxt.append(reduce_word(w + ((letter, exp),)))
            nxt.sort(key=self.sort_key)
            out.extend(nxt)
            frontier = nxt
        return out

    # -- text ---------------------------------------------------------------

    def format(self, g: Element) -> str:
        self.check(g)
        if self.is_finite:
            return self.labels[g]
        if not g:
            return "1"
        return " ".join(self.letters[l] if e == 1 else f"{self.letters[l]}^{e}" for l, e in g)

    def parse(self, text: str) -> Element:
        """Parse an element: a label, ``#index`` (finite), or a word in the
        generator names with optional integer exponents (``a b^-1``, ``ab⁻¹``)."""
        s = re.sub("[⁰¹²³⁴⁵⁶⁷⁸⁹⁻]+", lambda m: "^" + m.group().translate(_SUPERSCRIPTS), text.strip())
        if not s:
            raise GroupError("empty element")
        if self.is_finite:
            if s in self._label_index:
                return self._label_index[s]
            if s.startswith("#") and s[1:].isdigit():
                return self.check(int(s[1:]))
        if s == "1":
            return self.identity
        names = dict(self.generators) if self.is_finite else self._label_index
        if not names:
            raise GroupError(f"unknown element {text!r}")
        tokens = self._tokenize(s.replace(" ", ""), sorted(names, key=len, reverse=True), text)
        if self.is_finite:
            out = self.identity
            for name, exp in tokens:
                out = self.multiply(out, self.power(names[name], exp))
            return out
        return reduce_word((names[n], e) for n, e in tokens)

    @staticmethod
    def _tokenize(s: str, names: Sequence[str], original: str) -> list[tuple[str, int]]:
        tokens = []
        pos = 0
        while pos < len(s):
            if s[pos] == "1" and (pos + 1 == len(s) or not s[pos + 1].isdigit()):
                pos += 1
                continue
            for name in names:
                if s.startswith(name, pos):
                    pos += len(name)
                    break
            else:
                raise GroupError(f"cannot parse element {original!r} at position {pos}")
            m = re.match(r"\^\{?(-?\d+)\}?", s[pos:])
            exp = 1
            if m:
                exp = int(m.group(1))
                pos += m.end()
            tokens.append((name, exp))
        return tokens

    def describe(self) -> str:
        if self.name:
            return self.name
        if self.is_finite:
            return f"finite group of order {self.order}"
        return "trivial group" if self.rank == 0 else f"free group of rank {self.rank}"


def group_multiply(spec: GroupSpec, g: Element, h: Element) -> Element:
    return spec.multiply(g, h)


def group_invert(spec: GroupSpec, g: Element) -> Element:
    return spec.invert(g)


# -- constructors ---------------------------------------------------------------


def free_group(rank: int, letters: Sequence[str] | None = None) -> GroupSpec:
    if rank < 0:
        raise GroupError("free rank must be >= 0")
    if letters is None:
        pool = [c for c in string.ascii_lowercase if c not in "e"]
        if rank > len(pool):
            letters = [f"x{i + 1}" for i in range(rank)]
        else:
            letters = pool[:rank]
    letters = tuple(letters)
    if len(letters) != rank or len(set(letters)) != rank:
        raise GroupError("need one distinct label per free letter")
    for l in letters:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", l):
            raise GroupError(f"invalid letter label {l!r}")
    name = "trivial group" if rank == 0 else f"F{rank}"
    return GroupSpec(kind="free", rank=rank, letters=letters, name=name)


def table_group(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    inverses: Sequence[int] | None = None,
    generators: Sequence[tuple[str, int]] = (),
    name: str = "",
) -> GroupSpec:
    """Validate a Cayley table and wrap it as a finite :class:`GroupSpec`.

    Raises :class:`GroupAxiomError` naming a failing witness (for associativity,
    the triple ``(g, h, k)``)."""
    n = len(table)
    if n == 0:
        raise GroupAxiomError("empty multiplication table")
    rows = tuple(tuple(int(x) for x in row) for row in table)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise GroupAxiomError(f"row {i} has {len(row)} entries, expected {n}", (i,))
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise GroupAxiomError(f"entry ({i},{j}) = {x} out of range", (i, j))
    for i in range(n):
        if rows[0][i] != i or rows[i][0] != i:
            raise GroupAxiomError(f"index 0 is not a two-sided identity (fails at {i})", (i,))
    for g, h, k in itertools.product(range(n), repeat=3):
        if rows[rows[g][h]][k] != rows[g][rows[h][k]]:
            raise GroupAxiomError(f"table is not associative at (g,h,k) = ({g},{h},{k})", (g, h, k))
    inv = []
    for g in range(n):
        cands = [h for h in range(n) if rows[g][h] == 0]
        if len(cands) != 1 or rows[cands[0]][g] != 0:
            raise GroupAxiomError(f"element {g} has no two-sided inverse", (g,))
        inv.append(cands[0])
    if inverses is not None and tuple(inverses) != tuple(inv):
        bad = next(g for g in range(n) if inverses[g] != inv[g])
        raise GroupAxiomError(f"inverse table inconsistent at {bad}", (bad,))
    if labels is None:
        labels = ["1"] + [f"g{i}" for i in range(1, n)]
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise GroupAxiomError("need one distinct label per element")
    return GroupSpec(
        kind="finite", order=n, table=rows, inverses=tuple(inv), labels=labels,
        generators=tuple(generators), name=name or f"finite group of order {n}",
    )


def _from_multiplication(elements: list, mul, labels: list[str], generators, name: str) -> GroupSpec:
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return table_group(table, labels, generators=generators, name=name)


def _power_label(base: str, i: int) -> str:
    return "" if i == 0 else (base if i == 1 else f"{base}^{i}")


def cyclic_group(n: int) -> GroupSpec:
    if n < 1:
        raise GroupError("cyclic order must be >= 1")
    labels = ["1"] + [_power_label("g", i) for i in range(1, n)]
    gens = (("g", 1 % n),) if n > 1 else ()
    return _from_multiplication(list(range(n)), lambda a, b: (a + b) % n, labels, gens, f"Z/{n}")


def dihedral_group(n: int) -> GroupSpec:
    """Symmetries of the regular n-gon, order 2n: elements r^a s^b."""
    if n < 1:
        raise GroupError("dihedral parameter must be >= 1")
    elements = [(a, b) for b in range(2) for a in range(n)]

    def mul(x, y):
        (a, b), (c, e) = x, y
        return ((a + (c if b == 0 else -c)) % n, (b + e) % 2)

    labels = []
    for a, b in elements:
        parts = [p for p in (_power_label("r", a), "s" if b else "") if p]
        labels.append(" ".join(parts) or "1")
    gens = (("r", 1 % n), ("s", n))
    return _from_multiplication(elements, mul, labels, gens, f"D{n}")


_QUAT = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion_group() -> GroupSpec:
    """Q8 = {±1, ±i, ±j, ±k}; -1 is labelled i^2 and -u is labelled u^3."""
    elements = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]

    def mul(x, y):
        s, u = _QUAT[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    labels = ["1", "i^2", "i", "i^3", "j", "j^3", "k", "k^3"]
    return _from_multiplication(elements, mul, labels, (("i", 2), ("j", 4), ("k", 6)), "Q8")


def elementary_abelian_group(p: int, r: int) -> GroupSpec:
    if p < 2 or r < 0:
        raise GroupError("elementary abelian group needs p >= 2, r >= 0")
    letters = "abcdfhjkmnpqrstuvwxyz"[:r]
    elements = list(itertools.product(range(p), repeat=r))

    def mul(x, y):
        return tuple((a + b) % p for a, b in zip(x, y))

    labels = [" ".join(p_ for p_ in (_power_label(letters[i], a) for i, a in enumerate(e)) if p_) or "1"
              for e in elements]
    gens = tuple((letters[i], elements.index(tuple(int(j == i) for j in range(r)))) for i in range(r))
    return _from_multiplication(elements, mul, labels, gens, f"(Z/{p})^{r}")


def klein_four_group() -> GroupSpec:
    g = elementary_abelian_group(2, 2)
    return GroupSpec(**{**_fields(g), "name": "V4"})


def symmetric_group(n: int) -> GroupSpec:
    """S_n on {1..n}; elements labelled in one-line notation, generators s1..s(n-1)
    are the adjacent transpositions."""
    if n < 1:
        raise GroupError("symmetric degree must be >= 1")
    ident = tuple(range(n))
    perms = [ident] + [p for p in itertools.permutations(range(n)) if p != ident]

    def mul(p, q):  # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(n))

    labels = ["1"] + ["[" + ",".join(str(x + 1) for x in p) + "]" for p in perms[1:]]
    gens = []
    for i in range(n - 1):
        t = list(ident)
        t[i], t[i + 1] = t[i + 1], t[i]
        gens.append((f"s{i + 1}", perms.index(tuple(t))))
    return _from_multiplication(perms, mul, labels, tuple(gens), f"S{n}")


def _fields(g: GroupSpec) -> dict:
    return {
        "kind": g.kind, "order": g.order, "table": g.table, "inverses": g.inverses,
        "labels": g.labels, "rank": g.rank, "letters": g.letters,
        "generators": g.generators, "name": g.name,
    }


def trivial_group() -> GroupSpec:
    return free_group(0)


def group_from_shorthand(text: str) -> GroupSpec:
    """``cyclic 3``, ``dihedral 4``, ``quaternion``, ``klein``, ``elementary 2 3``,
    ``symmetric 3``, ``free 2``, ``trivial``."""
    parts = text.split()
    if not parts:
        raise GroupError("empty group description")
    kind, args = parts[0].lower(), parts[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise GroupError(f"non-integer argument in group description {text!r}") from None
    makers = {
        "cyclic": (cyclic_group, 1), "dihedral": (dihedral_group, 1),
        "quaternion": (quaternion_group, 0), "klein": (klein_four_group, 0),
        "elementary": (elementary_abelian_group, 2), "symmetric": (symmetric_group, 1),
        "free": (free_group, 1), "trivial": (trivial_group, 0),
    }
    if kind not in makers:
        raise GroupError(f"unknown group family {kind!r}")
    fn, arity = makers[kind]
    if kind == "quaternion" and nums == [8]:
        nums = []
    if len(nums) != arity:
        raise GroupError(f"{kind} takes {arity} integer argument(s)")
    return fn(*nums)
