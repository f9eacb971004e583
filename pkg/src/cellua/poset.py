"""Finite posets with a remembered input order."""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence


class PosetError(ValueError):
    pass


class Poset:
    """A finite strict partial order.

    ``relations`` are pairs (a, b) meaning a > b.  They are closed
    transitively on construction and the result is checked to be
    irreflexive and antisymmetric.  The order of ``elements`` is kept and
    used as the tie-break everywhere a deterministic listing is needed.
    """

    def __init__(self, elements: Sequence[Hashable], relations: Iterable[tuple] = ()):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise PosetError("duplicate poset elements")
        self.elements = elements
        self._index = {x: i for i, x in enumerate(elements)}
        above = {x: set() for x in elements}   # above[b] = {a : a > b}
        for a, b in relations:
            if a not in self._index or b not in self._index:
                raise PosetError(f"relation ({a!r}, {b!r}) uses an unknown element")
            above[b].add(a)
        # transitive closure by repeated expansion; posets here are tiny
        changed = True
        while changed:
            changed = False
            for b in elements:
                extra = set()
                for a in above[b]:
                    extra |= above[a]
                if not extra <= above[b]:
                    above[b] |= extra
                    changed = True
        for x in elements:
            if x in above[x]:
                raise PosetError(f"order is not antisymmetric: cycle through {x!r}")
        self._above = {x: frozenset(s) for x, s in above.items()}

    def __contains__(self, x):
        return x in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Poset) and self.elements == other.elements and self._above == other._above

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Poset({list(self.elements)!r})"

    def index(self, x) -> int:
        return self._index[x]

    def gt(self, a, b) -> bool:
        return a in self._above[b]

    def ge(self, a, b) -> bool:
        return a == b or a in self._above[b]

    def above(self, x) -> frozenset:
        """Elements strictly greater than x."""
        return self._above[x]

    def pairs(self) -> list[tuple]:
        """All strict pairs (a, b) with a > b, in input order."""
        return [(a, b) for b in self.elements for a in self.elements if a in self._above[b]]

    def covers(self) -> list[tuple]:
        """Covering pairs (a, b): a > b with nothing strictly between."""
        out = []
        for a, b in self.pairs():
            if not any(self.gt(a, c) and self.gt(c, b) for c in self.elements):
                out.append((a, b))
        return out

    def topological(self) -> list:
        """Larger elements first; ties broken by input order."""
        remaining = list(self.elements)
        out = []
        while remaining:
            for x in remaining:
                if not any(y in self._above[x] for y in remaining):
                    out.append(x)
                    remaining.remove(x)
                    break
        return out

    def is_total(self) -> bool:
        return all(a == b or self.gt(a, b) or self.gt(b, a) for a in self.elements for b in self.elements)

    def is_upward_closed(self, subset) -> tuple | None:
        """None if ``subset`` is upward closed, else a witness (bigger, smaller)."""
        subset = set(subset)
        for x in self.elements:
            if x in subset:
                for y in self._above[x]:
                    if y not in subset:
                        return (y, x)
        return None

    def restrict(self, subset) -> "Poset":
        keep = [x for x in self.elements if x in set(subset)]
        return Poset(keep, [(a, b) for a, b in self.pairs() if a in keep and b in keep])
