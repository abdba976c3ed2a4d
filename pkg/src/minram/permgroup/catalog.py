"""Named groups, group specifications and their default generating sets.

The default generators listed here are part of the external contract: the
Frucht graphs emitted by the CLI are built from them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import InputError, ParseError
from .abstract import AbstractGroup
from .chain import PermGroup, alternating_group, symmetric_group
from .perm import format_perms, parse_cycles


def _cycle(points, n):
    img = list(range(n))
    for a, b in zip(points, points[1:] + points[:1]):
        img[a] = b
    return tuple(img)


def _perms(text):
    return parse_cycles(text)


def _named_generators(name: str):
    """(generators, degree) for a single named factor such as ``D4``."""
    m = re.fullmatch(r"([A-Za-z]+)(\d*)", name)
    if not m:
        raise InputError(f"unknown group name {name!r}")
    head, num = m.group(1), m.group(2)
    k = int(num) if num else None
    if head in ("trivial", "1") or (head == "C" and k == 1):
        return [], 1
    if head == "C" and k:
        return [_cycle(list(range(k)), k)], k
    if head == "V" and k == 4:
        return _perms("(1 2)(3 4), (1 3)(2 4)")
    if head == "D" and k:
        if k == 1:
            return [_cycle([0, 1], 2)], 2
        if k == 2:
            return _perms("(1 2)(3 4), (1 3)(2 4)")
        rot = _cycle(list(range(k)), k)
        refl = list(range(k))
        for i in range(1, (k + 1) // 2):
            refl[i], refl[k - i] = k - i, i
        return [rot, tuple(refl)], k
    if head == "S" and k:
        G = symmetric_group(k)
        return G.gens, G.degree
    if head == "A" and k:
        G = alternating_group(k)
        return G.gens, G.degree
    if head == "Q" and k == 8:
        return _perms("(1 2 3 4)(5 6 7 8), (1 5 3 7)(2 8 4 6)")
    if head == "Dic" and k == 3:
        return _perms("(1 2 3), (2 3)(4 5 6 7)")
    raise InputError(f"unknown group name {name!r}")


def _direct_product(factors):
    gens = []
    offset = 0
    for fgens, deg in factors:
        for g in fgens:
            gens.append((offset, deg, g))
        offset += deg
    n = max(offset, 1)
    out = []
    for off, deg, g in gens:
        img = list(range(n))
        for i in range(deg):
            img[off + i] = off + g[i]
        out.append(tuple(img))
    return out, n


def named_group(name: str):
    """Generators and degree of a named group; supports ``AxB`` and ``C2^3``."""
    name = name.strip()
    if not name:
        raise InputError("empty group name")
    factors = []
    for part in re.split(r"\s*[xX×]\s*", name):
        m = re.fullmatch(r"(\w+?)\^(\d+)", part)
        if m:
            factors += [_named_generators(m.group(1))] * int(m.group(2))
        else:
            factors.append(_named_generators(part))
    if len(factors) == 1:
        gens, n = factors[0]
        return list(gens), n
    return _direct_product(factors)


# Catalog of small groups by order (names resolvable by named_group).
CATALOG = {
    "C1": 1, "C2": 2, "C3": 3, "C4": 4, "V4": 4, "C5": 5, "C6": 6, "S3": 6,
    "C7": 7, "C8": 8, "C4xC2": 8, "C2^3": 8, "D4": 8, "Q8": 8, "C9": 9,
    "C3xC3": 9, "C10": 10, "D5": 10, "C11": 11, "C12": 12, "C6xC2": 12,
    "A4": 12, "D6": 12, "Dic3": 12,
}


def catalog_names(max_order=None):
    return [k for k, v in CATALOG.items() if max_order is None or v <= max_order]


@dataclass
class GroupSpec:
    """Input description of a finite group.

    ``kind`` is ``"named"``, ``"perms"`` or ``"table"``. Named and
    permutation specs resolve to a :class:`PermGroup`; a table spec resolves
    to its right regular representation when a permutation group is needed.
    """

    kind: str
    name: str | None = None
    gens: list = field(default_factory=list)
    degree: int = 1
    table: AbstractGroup | None = None
    source: str = ""

    @classmethod
    def named(cls, name):
        gens, n = named_group(name)
        return cls("named", name=name, gens=list(gens), degree=n, source=name)

    @classmethod
    def from_perms(cls, text, degree=None):
        gens, n = parse_cycles(text, degree)
        return cls("perms", gens=gens, degree=n, source=text)

    @classmethod
    def from_table(cls, group: AbstractGroup, source=""):
        return cls("table", table=group, degree=group.order, source=source)

    def perm_group(self) -> PermGroup:
        if self.kind == "table":
            T = self.table
            gens = [tuple(T.table[x][g] for x in range(T.order)) for g in T.generators()]
            return PermGroup(gens, T.order)
        return PermGroup(self.gens, self.degree)

    def abstract(self) -> AbstractGroup:
        if self.kind == "table":
            return self.table
        return AbstractGroup.from_perm_group(self.perm_group())

    def default_generators(self):
        """Generator element indices in :meth:`abstract` (the catalog choice)."""
        A = self.abstract()
        if self.kind == "table":
            return A.generators()
        index = {g: i for i, g in enumerate(A.perms)}
        gens = []
        for g in self.perm_group().gens:
            i = index[g]
            if i not in gens:
                gens.append(i)
        return gens

    def describe(self):
        if self.kind == "named":
            return self.name
        if self.kind == "perms":
            return f"<{format_perms(self.gens)}>"
        return f"table group of order {self.table.order}"

    def to_json(self):
        if self.kind == "named":
            return {"named": self.name}
        if self.kind == "perms":
            return {"perms": format_perms(self.gens), "degree": self.degree}
        return {"table": self.table.table}


def parse_group_spec(text: str) -> GroupSpec:
    """Resolve a CLI group argument: a name, cycle generators or a table file."""
    if text is None or not str(text).strip():
        raise ParseError("empty group specification", offset=0)
    s = str(text).strip()
    if s.startswith("("):
        return GroupSpec.from_perms(s)
    path = Path(s)
    if path.suffix in (".txt", ".tbl", ".table") or path.exists():
        if not path.exists():
            raise InputError(f"table file {s!r} not found")
        return GroupSpec.from_table(AbstractGroup.from_table_text(path.read_text()), source=s)
    return GroupSpec.named(s)
