"""Finite diagrams of finite subgroups modelling a family up to conjugacy.

A diagram has one node per modelled conjugacy class of subgroups, a
restriction morphism for every listed inclusion ``sub -> sup`` and, per
node, automorphisms generating the Weyl-group action on that node.  The
ambient group itself is never represented: whether the supplied data
generates every conjugacy identification is the modeller's responsibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .characters import primitive_root
from .groups import (
    FiniteGroup,
    GroupHom,
    HomomorphismError,
    all_subgroups,
    check_automorphism,
    check_hom,
    make_cyclic,
    power_automorphism,
    trivial_group,
)


class DiagramError(ValueError):
    """Structural problem with a diagram (missing node, bad morphism, ...)."""


@dataclass(frozen=True)
class ResMorphism:
    """Inclusion of the ``sub`` node group into the ``sup`` node group."""

    sub: str
    sup: str
    hom: GroupHom


@dataclass(frozen=True)
class GraphEdge:
    label: str
    ends: tuple[str, str]


@dataclass(frozen=True)
class GraphStructure:
    """Vertex and edge nodes of a graph of finite groups."""

    vertices: tuple[str, ...]
    edges: tuple[GraphEdge, ...]


@dataclass(eq=False)
class FamilyDiagram:
    nodes: dict[str, FiniteGroup]
    res: list[ResMorphism] = field(default_factory=list)
    autos: dict[str, list[GroupHom]] = field(default_factory=dict)
    graph: Optional[GraphStructure] = None
    name: str = ""

    @property
    def labels(self) -> list[str]:
        return list(self.nodes)

    def autos_of(self, label: str) -> list[GroupHom]:
        return self.autos.get(label, [])

    def trivial_node(self) -> Optional[str]:
        return next((l for l, G in self.nodes.items() if G.order == 1), None)

    def res_between(self, sub: str, sup: str) -> list[ResMorphism]:
        return [r for r in self.res if r.sub == sub and r.sup == sup]

    def add_node(self, label: str, G: FiniteGroup) -> None:
        if label in self.nodes:
            raise DiagramError(f"duplicate node {label!r}")
        self.nodes[label] = G

    def add_res(self, sub: str, sup: str, images: Sequence[int]) -> ResMorphism:
        for l in (sub, sup):
            if l not in self.nodes:
                raise DiagramError(f"unknown node {l!r}")
        hom = check_hom(self.nodes[sub], self.nodes[sup], images, injective=True)
        m = ResMorphism(sub, sup, hom)
        self.res.append(m)
        return m

    def add_auto(self, label: str, images: Sequence[int]) -> GroupHom:
        if label not in self.nodes:
            raise DiagramError(f"unknown node {label!r}")
        a = check_automorphism(self.nodes[label], images)
        self.autos.setdefault(label, []).append(a)
        return a


@dataclass
class ValidationReport:
    warnings: list[str] = field(default_factory=list)


def _fingerprint(G: FiniteGroup, members: Sequence[int]) -> tuple:
    return (len(members), tuple(sorted(G.element_orders[x] for x in members)))


def validate(d: FamilyDiagram) -> ValidationReport:
    """Check structural invariants; raise DiagramError on hard failures.

    Subgroups of a node group without a restriction path from a node of
    the same isomorphism fingerprint are reported as warnings only, since
    reduced (cofinal) diagrams are legitimate input.
    """
    if not d.nodes:
        raise DiagramError("diagram has no nodes")
    if d.trivial_node() is None:
        raise DiagramError("diagram has no trivial-group node")
    for m in d.res:
        if m.sub not in d.nodes or m.sup not in d.nodes:
            raise DiagramError(f"restriction {m.sub} < {m.sup} references an unknown node")
        if m.hom.source is not d.nodes[m.sub] or m.hom.target is not d.nodes[m.sup]:
            raise DiagramError(f"restriction {m.sub} < {m.sup} is attached to the wrong groups")
        try:
            check_hom(m.hom.source, m.hom.target, m.hom.images, injective=True)
        except HomomorphismError as exc:
            raise DiagramError(f"restriction {m.sub} < {m.sup}: {exc}") from exc
    for label, autos in d.autos.items():
        if label not in d.nodes:
            raise DiagramError(f"automorphism attached to unknown node {label!r}")
        for a in autos:
            if a.source is not d.nodes[label]:
                raise DiagramError(f"automorphism of {label} is attached to the wrong group")
            try:
                check_automorphism(a.source, a.images)
            except HomomorphismError as exc:
                raise DiagramError(f"automorphism of {label}: {exc}") from exc

    report = ValidationReport()
    below = {l: set() for l in d.nodes}
    changed = True
    for m in d.res:
        below[m.sup].add(m.sub)
    while changed:
        changed = False
        for l in d.nodes:
            extra = set().union(*(below[s] for s in below[l])) - below[l] if below[l] else set()
            if extra:
                below[l] |= extra
                changed = True
    for label, G in d.nodes.items():
        if G.order == 1:
            continue
        reachable = {_fingerprint(d.nodes[s], range(d.nodes[s].order)) for s in below[label]}
        for S in all_subgroups(G):
            if len(S) == G.order:
                continue
            fp = _fingerprint(G, S)
            if fp not in reachable:
                report.warnings.append(
                    f"node {label}: subgroup of order {len(S)} has no restriction path from a matching node"
                )
    return report


# -- builders -----------------------------------------------------------------


def _ensure_trivial(d: FamilyDiagram, attach_to: Sequence[str]) -> None:
    if d.trivial_node() is not None:
        return
    label = "1"
    while label in d.nodes:
        label += "'"
    d.add_node(label, trivial_group())
    for l in attach_to:
        d.add_res(label, l, [0])


def amalgam_diagram(
    G1: FiniteGroup,
    G2: FiniteGroup,
    H: FiniteGroup,
    e1: GroupHom,
    e2: GroupHom,
    labels: Sequence[str] = ("G1", "G2", "H"),
    name: str = "",
) -> FamilyDiagram:
    """Diagram {G1, G2, H} whose limit is the equalizer of the two restrictions to H."""
    for e, target in ((e1, G1), (e2, G2)):
        if e.source is not H or e.target is not target:
            raise DiagramError("embedding does not match the given groups")
        if not e.injective:
            raise DiagramError("amalgam embeddings must be injective")
    return graph_of_groups_diagram(
        [(labels[0], G1), (labels[1], G2)],
        [(labels[2], H, (labels[0], e1), (labels[1], e2))],
        name=name,
    )


def graph_of_groups_diagram(
    vertices: Sequence[tuple[str, FiniteGroup]],
    edges: Sequence[tuple[str, FiniteGroup, tuple[str, GroupHom], tuple[str, GroupHom]]],
    name: str = "",
) -> FamilyDiagram:
    """Nodes = vertex and edge groups; one restriction per edge embedding.

    A trivial node is added (below every other node) when no vertex or edge
    group is trivial, so the result always validates.
    """
    d = FamilyDiagram({}, name=name)
    for label, G in vertices:
        d.add_node(label, G)
    graph_edges = []
    for label, H, (a, ea), (b, eb) in edges:
        if label in d.nodes and d.nodes[label] is not H:
            raise DiagramError(f"edge label {label!r} clashes with a vertex")
        if label not in d.nodes:
            d.add_node(label, H)
        for end, e in ((a, ea), (b, eb)):
            if end not in d.nodes:
                raise DiagramError(f"edge {label} ends at unknown vertex {end!r}")
            if e.source is not H or e.target is not d.nodes[end]:
                raise DiagramError(f"edge {label}: embedding does not match groups")
            if not e.injective:
                raise DiagramError(f"edge {label}: embedding into {end} is not injective")
            d.res.append(ResMorphism(label, end, e))
        graph_edges.append(GraphEdge(label, (a, b)))
    d.graph = GraphStructure(tuple(l for l, _ in vertices), tuple(graph_edges))
    _ensure_trivial(d, list(d.nodes))
    return d


def gl_family_diagram(p: int, orbit_subgroup_orders: Sequence[int]) -> FamilyDiagram:
    """Copies of Z/p, the i-th acted on by the order-|S_i| subgroup of (Z/p)^x."""
    if p < 3 or any(p % q == 0 for q in range(2, p)):
        raise DiagramError(f"{p} is not an odd prime")
    if not orbit_subgroup_orders:
        raise DiagramError("need at least one orbit")
    root = primitive_root(p)
    d = FamilyDiagram({}, name=f"gl-p{p}-" + "-".join(map(str, orbit_subgroup_orders)))
    d.add_node("1", trivial_group())
    for i, s in enumerate(orbit_subgroup_orders, start=1):
        if s < 1 or (p - 1) % s:
            raise DiagramError(f"orbit subgroup order {s} does not divide {p - 1}")
        label = f"P{i}"
        G = make_cyclic(p)
        d.add_node(label, G)
        d.add_res("1", label, [0])
        if s > 1:
            k = pow(root, (p - 1) // s, p)
            d.autos[label] = [power_automorphism(G, k)]
    return d


# -- fusion -------------------------------------------------------------------


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller key as root so representatives are deterministic
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def groups(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return [sorted(v) for _, v in sorted(out.items())]


@dataclass(frozen=True)
class FusedClasses:
    """Torsion element classes and cyclic subgroup classes after fusion.

    Entries are (node index, local class index) pairs; the representative of
    each fused class is its smallest pair.
    """

    element_classes: tuple[tuple[tuple[int, int], ...], ...]
    cyclic_classes: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def n(self) -> int:
        return len(self.element_classes)

    @property
    def c(self) -> int:
        return len(self.cyclic_classes)


def _element_fusion(d: FamilyDiagram) -> _UnionFind:
    labels = d.labels
    idx = {l: i for i, l in enumerate(labels)}
    uf = _UnionFind([(i, c) for i, l in enumerate(labels) for c in range(len(d.nodes[l].classes))])
    for l, autos in d.autos.items():
        G = d.nodes[l]
        cls = G.classes
        for a in autos:
            for c, rep in enumerate(cls.representatives):
                uf.union((idx[l], c), (idx[l], cls.class_of[a.images[rep]]))
    for m in d.res:
        H, K = d.nodes[m.sub], d.nodes[m.sup]
        for c, rep in enumerate(H.classes.representatives):
            uf.union((idx[m.sub], c), (idx[m.sup], K.classes.class_of[m.hom.images[rep]]))
    return uf


def _cyclic_fusion(d: FamilyDiagram) -> _UnionFind:
    labels = d.labels
    idx = {l: i for i, l in enumerate(labels)}
    uf = _UnionFind([(i, c) for i, l in enumerate(labels) for c in range(len(d.nodes[l].cyclic_classes))])
    for l, autos in d.autos.items():
        G = d.nodes[l]
        for a in autos:
            for c, S in enumerate(G.cyclic_classes):
                g = _generator(G, S)
                uf.union((idx[l], c), (idx[l], G.cyclic_class_of[a.images[g]]))
    for m in d.res:
        H, K = d.nodes[m.sub], d.nodes[m.sup]
        for c, S in enumerate(H.cyclic_classes):
            g = _generator(H, S)
            uf.union((idx[m.sub], c), (idx[m.sup], K.cyclic_class_of[m.hom.images[g]]))
    return uf


def _generator(G: FiniteGroup, S: Sequence[int]) -> int:
    return min(x for x in S if G.element_orders[x] == len(S))


def fused_counts(d: FamilyDiagram) -> FusedClasses:
    return FusedClasses(
        tuple(tuple(g) for g in _element_fusion(d).groups()),
        tuple(tuple(g) for g in _cyclic_fusion(d).groups()),
    )


def cyclic_subdiagram(d: FamilyDiagram) -> FamilyDiagram:
    """One cyclic node per fused cyclic class, with induced inclusions and power-map actions."""
    labels = d.labels
    el_uf = _element_fusion(d)
    cy = fused_counts(d).cyclic_classes

    def el_class(node: int, g: int):
        G = d.nodes[labels[node]]
        return el_uf.find((node, G.classes.class_of[g]))

    # representative generator of each fused cyclic class
    reps = []
    where = {}
    for k, members in enumerate(cy):
        node, c = members[0]
        G = d.nodes[labels[node]]
        reps.append((node, _generator(G, G.cyclic_classes[c])))
        for mem in members:
            where[mem] = k

    out = FamilyDiagram({}, name=(d.name + "-cyclic") if d.name else "cyclic")
    groups = []
    for k, (node, g) in enumerate(reps):
        G = d.nodes[labels[node]]
        n = G.element_orders[g]
        C = make_cyclic(n)
        groups.append(C)
        out.add_node(f"C{k}", C)
        base = el_class(node, g)
        ks = [j for j in range(2, n) if gcd(j, n) == 1 and el_class(node, G.power(g, j)) == base]
        if ks:
            out.autos[f"C{k}"] = [power_automorphism(C, j) for j in ks]

    for k, (node, g) in enumerate(reps):
        G = d.nodes[labels[node]]
        n = G.element_orders[g]
        for m in range(1, n):
            if n % m:
                continue
            dstep = n // m
            h = G.power(g, dstep)
            sub = where[(node, G.cyclic_class_of[h])]
            snode, sg = reps[sub]
            target = el_class(snode, sg)
            j = next(
                (j for j in range(1, m + 1) if gcd(j, m) == 1 and el_class(node, G.power(g, dstep * j)) == target),
                None,
            )
            if j is None:
                raise DiagramError("fused cyclic class without a matching generator")
            out.add_res(f"C{sub}", f"C{k}", [(i * dstep * j) % n for i in range(m)])
    return out
