"""Finite monoids, monoid homomorphisms and the arrow calculus of the
base diagram category whose objects are monoid elements and whose arrows
are triples (a,b,c): b -> abc."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .errors import NotComposable, OutOfRangeEntry, SizeMismatch, ValidationReport


@dataclass(frozen=True)
class FiniteMonoid:
    """A monoid on dense indices 0..size-1 given by its multiplication table.

    The unit may be any index; imported tables need no relabeling.
    Immutable after construction; `validate_monoid` enforces the axioms.
    """

    table: tuple[tuple[int, ...], ...]
    unit: int

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, elems) -> int:
        r = self.unit
        for a in elems:
            r = self.table[r][a]
        return r

    def elements(self):
        return range(self.size)

    def content_hash(self) -> str:
        blob = json.dumps({"table": self.table, "unit": self.unit})
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    @classmethod
    def from_rows(cls, rows, unit: int) -> "FiniteMonoid":
        return cls(tuple(tuple(r) for r in rows), unit)

    @classmethod
    def trivial(cls) -> "FiniteMonoid":
        return cls(((0,),), 0)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteMonoid":
        rows = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls.from_rows(rows, 0)


def validate_monoid(table, unit: int) -> ValidationReport:
    """Exhaustive O(n^3) check of the monoid axioms on a raw table."""
    report = ValidationReport()
    n = len(table)
    if not (0 <= unit < n):
        raise OutOfRangeEntry(f"unit index {unit} out of range for size {n}")
    for a, row in enumerate(table):
        if len(row) != n:
            raise OutOfRangeEntry(f"row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not (0 <= v < n):
                raise OutOfRangeEntry(f"table[{a}][{b}] = {v} out of range")
    for a in range(n):
        if table[unit][a] != a:
            report.add("left-unit", (a,), f"1*{a} = {table[unit][a]}")
        if table[a][unit] != a:
            report.add("right-unit", (a,), f"{a}*1 = {table[a][unit]}")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    report.add(
                        "associativity",
                        (a, b, c),
                        f"({a}{b}){c} = {table[table[a][b]][c]} != "
                        f"{a}({b}{c}) = {table[a][table[b][c]]}",
                    )
    return report


def units_of(m: FiniteMonoid) -> set[int]:
    """The group of two-sided invertible elements: {a : exists b, ab=ba=1}."""
    out = set()
    for a in m.elements():
        for b in m.elements():
            if m.op(a, b) == m.unit and m.op(b, a) == m.unit:
                out.add(a)
                break
    return out


def inverse_in(m: FiniteMonoid, a: int) -> int | None:
    for b in m.elements():
        if m.op(a, b) == m.unit and m.op(b, a) == m.unit:
            return b
    return None


def is_group(m: FiniteMonoid) -> bool:
    return len(units_of(m)) == m.size


@dataclass(frozen=True)
class MonoidHom:
    """A homomorphism given elementwise; map[a] is the image of a."""

    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    @classmethod
    def identity(cls, m: FiniteMonoid) -> "MonoidHom":
        return cls(m, m, tuple(range(m.size)))

    def compose(self, inner: "MonoidHom") -> "MonoidHom":
        if inner.target is not self.source and inner.target != self.source:
            raise NotComposable("monoid hom sources/targets do not match")
        return MonoidHom(inner.source, self.target, tuple(self.map[x] for x in inner.map))

    def is_bijective(self) -> bool:
        return (
            self.source.size == self.target.size
            and len(set(self.map)) == self.source.size
        )

    def inverse(self) -> "MonoidHom":
        if not self.is_bijective():
            raise NotComposable("monoid hom is not bijective")
        inv = [0] * self.target.size
        for a, b in enumerate(self.map):
            inv[b] = a
        return MonoidHom(self.target, self.source, tuple(inv))


def validate_monoid_hom(h: MonoidHom) -> ValidationReport:
    report = ValidationReport()
    if len(h.map) != h.source.size:
        raise SizeMismatch(
            f"map length {len(h.map)} != source size {h.source.size}"
        )
    for v in h.map:
        if not (0 <= v < h.target.size):
            raise OutOfRangeEntry(f"image {v} out of range")
    if h.map[h.source.unit] != h.target.unit:
        report.add("unit", (h.source.unit,), f"maps to {h.map[h.source.unit]}")
    for a in h.source.elements():
        for b in h.source.elements():
            lhs = h.map[h.source.op(a, b)]
            rhs = h.target.op(h.map[a], h.map[b])
            if lhs != rhs:
                report.add("multiplicativity", (a, b), f"p(ab)={lhs} != p(a)p(b)={rhs}")
    return report


def monoid_isomorphisms(m1: FiniteMonoid, m2: FiniteMonoid):
    """All monoid isomorphisms m1 -> m2, by backtracking over images."""
    if m1.size != m2.size:
        return
    n = m1.size
    assign = [-1] * n
    used = [False] * n

    def consistent(a: int) -> bool:
        for x in range(n):
            if assign[x] < 0:
                continue
            for y in range(n):
                if assign[y] < 0:
                    continue
                z = m1.op(x, y)
                if assign[z] >= 0 and m2.op(assign[x], assign[y]) != assign[z]:
                    return False
        return True

    def rec(a: int):
        if a == n:
            yield MonoidHom(m1, m2, tuple(assign))
            return
        if a == m1.unit:
            candidates = [m2.unit]
        else:
            candidates = [v for v in range(n) if v != m2.unit or m1.unit == a]
        for v in candidates:
            if used[v]:
                continue
            assign[a] = v
            used[v] = True
            if consistent(a):
                yield from rec(a + 1)
            assign[a] = -1
            used[v] = False

    yield from rec(0)


@dataclass(frozen=True)
class DMArrow:
    """An arrow (a,b,c): b -> abc in the diagram category of a monoid."""

    a: int
    b: int
    c: int

    def source(self) -> int:
        return self.b

    def target_in(self, m: FiniteMonoid) -> int:
        return m.prod((self.a, self.b, self.c))


def dm_identity(a: int, m: FiniteMonoid) -> DMArrow:
    return DMArrow(m.unit, a, m.unit)


def compose_dm(m: FiniteMonoid, outer: DMArrow, inner: DMArrow) -> DMArrow:
    """(d, abc, e)(a, b, c) = (da, b, ce)."""
    if outer.b != inner.target_in(m):
        raise NotComposable(
            f"middle object {outer.b} != inner target {inner.target_in(m)}"
        )
    return DMArrow(m.op(outer.a, inner.a), inner.b, m.op(inner.c, outer.c))


def all_dm_arrows(m: FiniteMonoid):
    for a in m.elements():
        for b in m.elements():
            for c in m.elements():
                yield DMArrow(a, b, c)
