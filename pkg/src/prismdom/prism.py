"""Permutations in cycle notation and the prism construction.

The prism of ``G`` under a permutation ``p`` has the base layer ``0..n-1``,
a copy layer ``n..2n-1`` (the copy of ``v`` is ``n + v``) and the matching
edges ``(v, n + p(v))``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .graph_core import Graph, GraphError, new_graph

Label = Hashable

PRIME = "'"


class PermutationError(ValueError):
    pass


def format_label(label: Label) -> str:
    """Printable form of a vertex label: ``5`` or ``(5,1)``."""
    if isinstance(label, tuple):
        return "(" + ",".join(format_label(x) for x in label) + ")"
    return str(label)


def parse_label(text: str) -> Label:
    """Inverse of :func:`format_label` for int and tuple-of-int labels."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return tuple(parse_label(p) for p in text[1:-1].split(",") if p.strip())
    try:
        return int(text)
    except ValueError:
        return text


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise PermutationError(f"not a bijection on 0..{len(self.image) - 1}: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        image = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for v in cyc:
                if not 0 <= v < n:
                    raise PermutationError(f"id {v} out of range for n={n}")
                if v in seen:
                    raise PermutationError(f"id {v} appears twice")
                seen.add(v)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                image[a] = b
        return cls(tuple(image))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Permutation":
        image = list(range(n))
        rng.shuffle(image)
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def apply(self, S: Iterable[int]) -> frozenset[int]:
        return frozenset(self.image[v] for v in S)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """``self after other``: ``v -> self(other(v))``."""
        return Permutation(tuple(self.image[other.image[v]] for v in range(self.n)))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest id, sorted."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            v = self.image[start]
            while v != start:
                cyc.append(v)
                seen[v] = True
                v = self.image[v]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def to_cycle_string(self, labels: Sequence[Label] | None = None) -> str:
        def name(v: int) -> str:
            return format_label(labels[v]) if labels is not None else str(v)

        return "".join("(" + " ".join(name(v) for v in cyc) + ")" for cyc in self.cycles())

    def __str__(self) -> str:
        return self.to_cycle_string() or "()"


def invert(p: Permutation) -> Permutation:
    return p.inverse()


def _cycle_tokens(text: str) -> list[list[str]]:
    """Split ``"(2 6 (5,1) (3,1))(0 1)"`` into ``[["2","6","(5,1)","(3,1)"], ["0","1"]]``."""
    cycles: list[list[str]] = []
    i, L = 0, len(text)
    while i < L:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c != "(":
            raise PermutationError(f"expected '(' at position {i + 1}, found {c!r}")
        i += 1
        items: list[str] = []
        while True:
            while i < L and (text[i].isspace() or text[i] == ","):
                i += 1
            if i >= L:
                raise PermutationError("unterminated cycle")
            c = text[i]
            if c == ")":
                i += 1
                break
            if c == "(":
                j = text.find(")", i)
                if j < 0:
                    raise PermutationError(f"unterminated label at position {i + 1}")
                items.append(text[i : j + 1].replace(" ", ""))
                i = j + 1
                continue
            j = i
            while j < L and not (text[j].isspace() or text[j] in "(),"):
                j += 1
            items.append(text[i:j])
            i = j
        cycles.append(items)
    return cycles


def parse_permutation(n: int, text: str, labels: Mapping[Label, int] | None = None) -> Permutation:
    """Parse cycle notation; unlisted ids stay fixed.

    Elements are separated by whitespace.  With ``labels`` (label -> id)
    every element is resolved through the map, so ``(2 6 (5,1) (3,1))``
    works on tuple-labelled families.
    """
    cycles = []
    for items in _cycle_tokens(text):
        ids = []
        for tok in items:
            label = parse_label(tok)
            if labels is not None:
                if label not in labels:
                    raise PermutationError(f"unknown vertex label {tok!r}")
                ids.append(labels[label])
            elif isinstance(label, int):
                ids.append(label)
            else:
                raise PermutationError(f"{tok!r} is not a vertex id")
        cycles.append(ids)
    return Permutation.from_cycles(n, cycles)


@dataclass(frozen=True)
class PrismGraph:
    """A prism together with its provenance."""

    graph: Graph
    base: Graph
    perm: Permutation

    @property
    def n(self) -> int:
        """Order of the base graph."""
        return self.base.n

    def base_of(self, v: int) -> int:
        return v

    def copy_of(self, v: int) -> int:
        return self.base.n + v

    def is_copy(self, x: int) -> bool:
        return x >= self.base.n

    def origin(self, x: int) -> int:
        """Base-graph vertex that ``x`` stands for."""
        return x - self.base.n if x >= self.base.n else x

    def split(self, S: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
        """``(S & V, copies in S)`` with the copies given by their base ids."""
        n = self.base.n
        S = list(S)
        return frozenset(x for x in S if x < n), frozenset(x - n for x in S if x >= n)

    def labels(self, base_labels: Sequence[Label] | None = None) -> list[str]:
        names = [format_label(base_labels[v]) if base_labels is not None else str(v) for v in range(self.n)]
        return names + [s + PRIME for s in names]


def build_prism(G: Graph, p: Permutation) -> PrismGraph:
    if p.n != G.n:
        raise GraphError(f"permutation on {p.n} ids does not fit a graph of order {G.n}")
    n = G.n
    edges = list(G.edges)
    edges.extend((u + n, v + n) for u, v in G.edges)
    edges.extend((u, n + p.image[u]) for u in range(n))
    return PrismGraph(new_graph(2 * n, edges), G, p)


def identity_prism(G: Graph) -> PrismGraph:
    return build_prism(G, Permutation.identity(G.n))


def lift_set(P: PrismGraph, base: Iterable[int], copy: Iterable[int]) -> frozenset[int]:
    """``base`` taken in the base layer plus ``copy`` taken in the copy layer."""
    n = P.n
    out = set()
    for v in base:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
        out.add(v)
    for v in copy:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
        out.add(n + v)
    return frozenset(out)
