"""Graph families with human-readable vertex labels and bundled permutations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .graph_core import Graph, new_graph
from .prism import Permutation, format_label, parse_permutation

Label = Hashable


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[Label, ...]
    canonical_perm: Permutation | None = None
    name: str = ""
    id_of: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError("one label per vertex required")
        id_of = {lab: i for i, lab in enumerate(self.labels)}
        if len(id_of) != len(self.labels):
            raise ValueError("labels must be distinct")
        if self.canonical_perm is not None and self.canonical_perm.n != self.graph.n:
            raise ValueError("bundled permutation does not fit the graph")
        object.__setattr__(self, "id_of", id_of)

    def label_strings(self) -> list[str]:
        return [format_label(lab) for lab in self.labels]

    def ids(self, labels: Sequence[Label]) -> frozenset[int]:
        return frozenset(self.id_of[lab] for lab in labels)

    def perm(self, text: str) -> Permutation:
        """Parse a cycle-notation permutation written on this graph's labels."""
        return parse_permutation(self.graph.n, text, self.id_of)


def _build(labels: list, edges: list, perm: str | None, name: str) -> LabeledGraph:
    index = {lab: i for i, lab in enumerate(labels)}
    G = new_graph(len(labels), [(index[a], index[b]) for a, b in edges])
    p = parse_permutation(G.n, perm, index) if perm is not None else None
    return LabeledGraph(G, tuple(labels), p, name)


# Permutations used with the small named graphs; keys are vertex counts.
_PATH_PERMS = {3: "(0 1)", 4: "(0 1)(2 3)", 6: "(1 4)(2 3)"}
_CYCLE_PERMS = {7: "(1 3)(4 6)"}


def path(n: int) -> LabeledGraph:
    """Path ``0 - 1 - ... - n-1``."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return _build(list(range(n)), [(i, i + 1) for i in range(n - 1)], _PATH_PERMS.get(n), f"P{n}")


def cycle(n: int) -> LabeledGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return _build(list(range(n)), [(i, (i + 1) % n) for i in range(n)], _CYCLE_PERMS.get(n), f"C{n}")


def star(k: int) -> LabeledGraph:
    """``K_{1,k}`` with center 0 and leaves ``1..k``; bundled permutation ``(0 1)``."""
    if k < 1:
        raise ValueError("star needs k >= 1")
    return _build(list(range(k + 1)), [(0, i) for i in range(1, k + 1)], "(0 1)", f"K1,{k}")


def complete(n: int) -> LabeledGraph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return _build(list(range(n)), [(i, j) for i in range(n) for j in range(i + 1, n)], None, f"K{n}")


def cycle_gadget(k: int) -> LabeledGraph:
    """``k`` seven-cycles glued at one hub ``(0,0)``.

    Cycle ``i`` is ``(0,0), (i,1), ..., (i,6)``; the bundled permutation
    applies ``(1 3)(4 6)`` inside every cycle.
    """
    if k < 1:
        raise ValueError("cycle_gadget needs k >= 1")
    hub = (0, 0)
    labels: list = [hub]
    edges = []
    for i in range(1, k + 1):
        arc = [(i, j) for j in range(1, 7)]
        labels.extend(arc)
        edges.extend(zip([hub] + arc, arc + [hub]))
    perm = "".join(f"(({i},1) ({i},3))(({i},4) ({i},6))" for i in range(1, k + 1))
    return _build(labels, edges, perm, f"cycle_gadget({k})")


def path_gadget(k: int) -> LabeledGraph:
    """``k`` six-vertex paths sharing the end ``(0,0)``; permutation ``(1 4)(2 3)`` per path."""
    if k < 1:
        raise ValueError("path_gadget needs k >= 1")
    hub = (0, 0)
    labels: list = [hub]
    edges = []
    for i in range(1, k + 1):
        arm = [(i, j) for j in range(1, 6)]
        labels.extend(arm)
        edges.extend(zip([hub] + arm[:-1], arm))
    perm = "".join(f"(({i},1) ({i},4))(({i},2) ({i},3))" for i in range(1, k + 1))
    return _build(labels, edges, perm, f"path_gadget({k})")


def spider_tree(k: int, l: int) -> LabeledGraph:
    """Center 0, middles ``1..k``, leaves ``(i,1)..(i,l)`` under middle ``i``.

    Bundled permutation: the cycle ``(1 2 ... k)``.
    """
    if k < 2:
        raise ValueError("spider_tree needs k >= 2")
    if l < 1:
        raise ValueError("spider_tree needs l >= 1")
    labels: list = [0] + list(range(1, k + 1))
    edges = [(0, i) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        for j in range(1, l + 1):
            labels.append((i, j))
            edges.append((i, (i, j)))
    perm = "(" + " ".join(str(i) for i in range(1, k + 1)) + ")"
    return _build(labels, edges, perm, f"spider_tree({k},{l})")


def sept_path_gadget(k: int) -> LabeledGraph:
    """``k`` seven-vertex paths ``1-2-(3,i)-(4,i)-(5,i)-6-7`` sharing ``1, 2, 6, 7``.

    Extra edges join ``(4,1)`` to every other ``(4,i)``.  Bundled
    permutation: ``(2 6 (5,1) (3,1))``.
    """
    if k < 1:
        raise ValueError("sept_path_gadget needs k >= 1")
    labels: list = [1, 2]
    edges: list = [(1, 2), (6, 7)]
    for i in range(1, k + 1):
        labels.extend([(3, i), (4, i), (5, i)])
        edges.extend([(2, (3, i)), ((3, i), (4, i)), ((4, i), (5, i)), ((5, i), 6)])
        if i >= 2:
            edges.append(((4, 1), (4, i)))
    labels.extend([6, 7])
    return _build(labels, edges, "(2 6 (5,1) (3,1))", f"sept_path_gadget({k})")


FAMILIES: dict[str, Callable[..., LabeledGraph]] = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "cycle-gadget": cycle_gadget,
    "path-gadget": path_gadget,
    "spider-tree": spider_tree,
    "sept-path-gadget": sept_path_gadget,
}


def make_family(name: str, k: int, l: int | None = None) -> LabeledGraph:
    try:
        fn = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
    if name == "spider-tree":
        return fn(k, 1 if l is None else l)
    if l is not None:
        raise ValueError(f"family {name!r} takes no second parameter")
    return fn(k)
