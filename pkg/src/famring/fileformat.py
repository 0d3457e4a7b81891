"""The ``.diagram`` text format.

A file is a sequence of ``[section]`` blocks; blank lines and lines
starting with ``#`` are ignored.  Grammar (one item per line)::

    [meta]                 key = value
    [groups]               NAME = {"cyclic": n} | {"permutations": [[...], ...]} | {"table": [[...], ...]}
    [nodes]                LABEL = GROUPNAME
    [res]                  SUB < SUP = [images of SUB's elements in SUP]
    [autos]                LABEL = [images]           (repeat the line for several generators)
    [graph]                vertex LABEL | edge LABEL : END END
    [complex]              DIM LABEL
    [images]               {"name": ..., "node": ..., "values": [...], "sub": ..., "sign": ±1, "expect": [...]}
    [presentation NAME]    field = Q|C ; vars = a b ... ; relation = POLY ;
                           check = relations (relations only, no generation) ; assign VAR = [coords]

``serialize(parse(text)) == text`` for files written by ``serialize``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Optional, Union

from .diagram import DiagramError, FamilyDiagram, GraphEdge, GraphStructure, validate
from .euler import OrbitComplex
from .groups import FiniteGroup, GroupError, make_cyclic, make_from_permutations, make_from_table
from .presentation import Presentation, PresentationError


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


SECTIONS = ("meta", "groups", "nodes", "res", "autos", "graph", "complex", "images")


@dataclass
class DiagramFile:
    meta: dict[str, str] = field(default_factory=dict)
    groups: dict[str, dict] = field(default_factory=dict)
    nodes: dict[str, str] = field(default_factory=dict)
    res: list[tuple[str, str, list[int]]] = field(default_factory=list)
    autos: list[tuple[str, list[int]]] = field(default_factory=list)
    vertices: list[str] = field(default_factory=list)
    edges: list[tuple[str, str, str]] = field(default_factory=list)
    complex: list[tuple[int, str]] = field(default_factory=list)
    images: list[dict] = field(default_factory=list)
    presentations: list[Presentation] = field(default_factory=list)
    linenos: dict[tuple[str, int], int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def name(self) -> str:
        return self.meta.get("name", "")

    @cached_property
    def built_groups(self) -> dict[str, FiniteGroup]:
        return {name: build_group(spec, name) for name, spec in self.groups.items()}

    @cached_property
    def diagram(self) -> FamilyDiagram:
        groups = self.built_groups
        d = FamilyDiagram({}, name=self.name)
        for label, gname in self.nodes.items():
            if gname not in groups:
                raise DiagramError(f"node {label} uses unknown group {gname!r}")
            d.add_node(label, groups[gname])
        for i, (sub, sup, images) in enumerate(self.res):
            try:
                d.add_res(sub, sup, images)
            except (GroupError, DiagramError) as exc:
                raise ParseError(f"restriction {sub} < {sup}: {exc}", self.linenos.get(("res", i))) from exc
        for i, (label, images) in enumerate(self.autos):
            try:
                d.add_auto(label, images)
            except (GroupError, DiagramError) as exc:
                raise ParseError(f"automorphism of {label}: {exc}", self.linenos.get(("autos", i))) from exc
        if self.vertices or self.edges:
            for e, a, b in self.edges:
                for end in (a, b):
                    if not d.res_between(e, end):
                        raise DiagramError(f"edge {e} has no restriction into {end}")
            d.graph = GraphStructure(tuple(self.vertices), tuple(GraphEdge(e, (a, b)) for e, a, b in self.edges))
        validate(d)
        return d

    @cached_property
    def orbit_complex(self) -> Optional[OrbitComplex]:
        if not self.complex:
            return None
        return OrbitComplex(self.diagram, tuple(self.complex))

    def presentation(self, name: str) -> Presentation:
        for p in self.presentations:
            if p.name == name:
                return p
        raise KeyError(f"no presentation named {name!r}")

    def expected(self, key: str) -> Optional[str]:
        return self.meta.get(key)


def build_group(spec: dict, name: str = "") -> FiniteGroup:
    if not isinstance(spec, dict) or len(spec) != 1:
        raise GroupError(f"group {name!r}: expected one of cyclic / permutations / table")
    (kind, value), = spec.items()
    if kind == "cyclic":
        return make_cyclic(int(value), name=name)
    if kind == "permutations":
        return make_from_permutations(value, degree=len(value[0]) if value else 1, name=name)
    if kind == "table":
        return make_from_table(value, name=name)
    raise GroupError(f"group {name!r}: unknown kind {kind!r}")


# -- parsing ------------------------------------------------------------------------


def _split_eq(line: str, lineno: int) -> tuple[str, str]:
    if "=" not in line:
        raise ParseError("expected 'key = value'", lineno)
    k, v = line.split("=", 1)
    return k.strip(), v.strip()


def _json(text: str, lineno: int):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", lineno) from exc


def _int_list(text: str, lineno: int) -> list[int]:
    v = _json(text, lineno)
    if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
        raise ParseError("expected a list of integers", lineno)
    return v


def parse(text: str) -> DiagramFile:
    f = DiagramFile()
    section = None
    pres: Optional[Presentation] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            head = line[1:-1].strip()
            pres = None
            if head.startswith("presentation"):
                pname = head[len("presentation"):].strip()
                if not pname:
                    raise ParseError("presentation needs a name", lineno)
                if any(p.name == pname for p in f.presentations):
                    raise ParseError(f"duplicate presentation {pname!r}", lineno)
                pres = Presentation(pname, [], [])
                f.presentations.append(pres)
                section = "presentation"
            elif head in SECTIONS:
                section = head
            else:
                raise ParseError(f"unknown section [{head}]", lineno)
            continue
        if section is None:
            raise ParseError("content before the first section", lineno)
        if section == "meta":
            k, v = _split_eq(line, lineno)
            f.meta[k] = v
        elif section == "groups":
            k, v = _split_eq(line, lineno)
            if k in f.groups:
                raise ParseError(f"duplicate group {k!r}", lineno)
            f.groups[k] = _json(v, lineno)
        elif section == "nodes":
            k, v = _split_eq(line, lineno)
            if k in f.nodes:
                raise ParseError(f"duplicate node {k!r}", lineno)
            f.nodes[k] = v
        elif section == "res":
            k, v = _split_eq(line, lineno)
            if "<" not in k:
                raise ParseError("expected 'SUB < SUP = [...]'", lineno)
            sub, sup = (s.strip() for s in k.split("<", 1))
            f.linenos[("res", len(f.res))] = lineno
            f.res.append((sub, sup, _int_list(v, lineno)))
        elif section == "autos":
            k, v = _split_eq(line, lineno)
            f.linenos[("autos", len(f.autos))] = lineno
            f.autos.append((k, _int_list(v, lineno)))
        elif section == "graph":
            parts = line.split()
            if parts[0] == "vertex" and len(parts) == 2:
                f.vertices.append(parts[1])
            elif parts[0] == "edge" and len(parts) == 5 and parts[2] == ":":
                f.edges.append((parts[1], parts[3], parts[4]))
            else:
                raise ParseError("expected 'vertex X' or 'edge E : A B'", lineno)
        elif section == "complex":
            parts = line.split()
            if len(parts) != 2 or not parts[0].lstrip("-").isdigit():
                raise ParseError("expected 'DIM NODE'", lineno)
            f.complex.append((int(parts[0]), parts[1]))
        elif section == "images":
            obj = _json(line, lineno)
            missing = {"name", "node", "values", "sub", "sign", "expect"} - set(obj)
            if missing:
                raise ParseError(f"image check lacks {sorted(missing)}", lineno)
            f.images.append(obj)
        elif section == "presentation":
            assert pres is not None
            if line.startswith("assign "):
                k, v = _split_eq(line[len("assign "):], lineno)
                if pres.assignment is None:
                    pres.assignment = {}
                pres.assignment[k] = _int_list(v, lineno)
                continue
            k, v = _split_eq(line, lineno)
            if k == "field":
                if v not in ("Q", "C"):
                    raise ParseError("field must be Q or C", lineno)
                pres.field = v
            elif k == "vars":
                pres.variables = v.split()
            elif k == "relation":
                pres.relations.append(v)
            elif k == "check":
                if v not in ("relations", "generation"):
                    raise ParseError("check must be 'relations' or 'generation'", lineno)
                pres.require_generation = v == "generation"
            else:
                raise ParseError(f"unknown presentation key {k!r}", lineno)
    for p in f.presentations:
        try:
            p.polynomials
        except PresentationError as exc:
            raise ParseError(f"presentation {p.name}: {exc}") from exc
    return f


def load(path: Union[str, Path]) -> DiagramFile:
    return parse(Path(path).read_text())


# -- serialization --------------------------------------------------------------------


def _dump(v) -> str:
    return json.dumps(v, separators=(", ", ": "))


def serialize(f: DiagramFile) -> str:
    out: list[str] = []

    def section(name: str, lines: list[str]) -> None:
        if lines:
            if out:
                out.append("")
            out.append(f"[{name}]")
            out.extend(lines)

    section("meta", [f"{k} = {v}" for k, v in f.meta.items()])
    section("groups", [f"{k} = {_dump(v)}" for k, v in f.groups.items()])
    section("nodes", [f"{k} = {v}" for k, v in f.nodes.items()])
    section("res", [f"{a} < {b} = {_dump(m)}" for a, b, m in f.res])
    section("autos", [f"{k} = {_dump(m)}" for k, m in f.autos])
    section("graph", [f"vertex {v}" for v in f.vertices] + [f"edge {e} : {a} {b}" for e, a, b in f.edges])
    section("complex", [f"{d} {n}" for d, n in f.complex])
    section("images", [_dump(obj) for obj in f.images])
    for p in f.presentations:
        lines = []
        if p.field:
            lines.append(f"field = {p.field}")
        lines.append("vars = " + " ".join(p.variables))
        lines += [f"relation = {r}" for r in p.relations]
        if not p.require_generation:
            lines.append("check = relations")
        for v, c in (p.assignment or {}).items():
            lines.append(f"assign {v} = {_dump(c)}")
        section(f"presentation {p.name}", lines)
    return "\n".join(out) + "\n"


def from_diagram(d: FamilyDiagram, group_specs: dict[str, dict], node_groups: dict[str, str]) -> DiagramFile:
    """File object for a diagram built in code; ``group_specs`` must rebuild identical tables."""
    f = DiagramFile()
    if d.name:
        f.meta["name"] = d.name
    f.groups = dict(group_specs)
    f.nodes = {l: node_groups[l] for l in d.nodes}
    f.res = [(m.sub, m.sup, list(m.hom.images)) for m in d.res]
    f.autos = [(l, list(a.images)) for l, autos in d.autos.items() for a in autos]
    if d.graph:
        f.vertices = list(d.graph.vertices)
        f.edges = [(e.label, *e.ends) for e in d.graph.edges]
    return f

