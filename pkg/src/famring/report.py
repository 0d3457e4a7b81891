"""Deterministic reports for the command-line interface.

Every builder returns a ``Report``: an ordered document of plain JSON
values plus a list of named checks.  ``render_text`` and ``render_machine``
produce byte-stable output for identical inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from .characters import character_table
from .diagram import cyclic_subdiagram, fused_counts
from .euler import (
    brown_integrality,
    index,
    m_gamma,
    rational_euler_char,
    trivial_tuple,
)
from .fileformat import DiagramFile
from .images import check_images
from .limit import LimitRing, check_ring_axioms, compute_limit, k1_rank, naturality, rank_checks, tree_torsion_count
from .presentation import Presentation, find_presentation_witness, verify_presentation


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class Report:
    command: str
    body: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    text_blocks: list[str] = field(default_factory=list)  # replaces the body in text output

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self) -> dict:
        return {"command": self.command, **self.body, "checks": [c.to_json() for c in self.checks], "passed": self.passed}


def render_machine(r: Report) -> str:
    return json.dumps(r.to_json(), indent=2, sort_keys=False) + "\n"


def _fmt(v: Any) -> str:
    if isinstance(v, (list, tuple)) and all(not isinstance(x, (dict, list, tuple)) for x in v):
        return "[" + ", ".join(map(str, v)) + "]"
    return str(v)


def _text_lines(key: str, v: Any, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(v, dict):
        out = [f"{pad}{key}:"]
        for k, x in v.items():
            out += _text_lines(str(k), x, indent + 1)
        return out
    if isinstance(v, (list, tuple)) and any(isinstance(x, (dict, list, tuple)) for x in v):
        out = [f"{pad}{key}:"]
        for i, x in enumerate(v):
            out += _text_lines(f"[{i}]", x, indent + 1)
        return out
    return [f"{pad}{key}: {_fmt(v)}"]


def render_text(r: Report) -> str:
    lines = [f"== {r.command} =="]
    if r.text_blocks:
        lines += r.text_blocks
    else:
        for k, v in r.body.items():
            lines += _text_lines(k, v, 0)
    for c in r.checks:
        tail = f"  ({c.detail})" if c.detail else ""
        lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}{tail}")
    lines.append("result: " + ("ok" if r.passed else "check failure"))
    return "\n".join(lines) + "\n"


# -- builders --------------------------------------------------------------------


def _expect_int(f: DiagramFile, key: str) -> Optional[int]:
    v = f.expected(key)
    return None if v is None else int(v)


def _presentation_doc(L: LimitRing, P: Presentation, bound: int) -> tuple[dict, bool]:
    doc: dict[str, Any] = {"name": P.name, "field": L.field, "variables": list(P.variables)}
    if P.assignment is None:
        w = find_presentation_witness(L, P, bound)
        doc["witness_search"] = {"bound": bound, "explored": w.explored, "relation_solutions": w.relation_solutions}
        if not w.found:
            doc["verdict"] = "no assignment within the bound satisfies the relations" + (
                " and generates" if P.require_generation and w.relation_solutions else ""
            )
            return doc, False
        P = P.with_assignment(w.assignment)
    cert = verify_presentation(L, P)
    doc["assignment"] = cert.assignment
    doc["relations"] = [{"relation": v.relation, "holds": v.holds, "residue": v.residue} for v in cert.relations]
    g = cert.generation
    doc["generation"] = {"required": P.require_generation, "generated": g.generated, "subring_rank": g.rank, "index": g.index, "rounds": g.rounds}
    doc["verdict"] = "pass" if cert.passed else "fail"
    return doc, cert.passed


def limit_report(f: DiagramFile, field: str, checks: bool = False, bound: int = 3) -> Report:
    d = f.diagram
    L = compute_limit(d, field)
    r = Report("limit")
    r.body["name"] = f.name
    r.body["field"] = field
    r.body["rank"] = L.rank
    r.body["nodes"] = {l: {"order": d.nodes[l].order, "basis_rank": B.rank} for l, B in zip(L.labels, L.bases)}
    r.body["basis"] = [list(b) for b in L.lattice.basis]
    r.body["unit"] = list(L.unit_coords)
    r.body["structure_constants"] = [[list(c) for c in row] for row in L.structure]
    if not checks:
        return r
    counts = fused_counts(d)
    rc = rank_checks(L, counts)
    r.check(f"rank equals {rc.count_name}", rc.passed, f"{rc.rank} vs {rc.expected}")
    want = _expect_int(f, f"rank.{field}")
    if want is not None:
        r.check(f"rank matches meta rank.{field}", L.rank == want, f"{L.rank} vs {want}")
    for key, val in (("counts.n", counts.n), ("counts.c", counts.c)):
        want = _expect_int(f, key)
        if want is not None:
            r.check(f"{key} matches meta", val == want, f"{val} vs {want}")
    ax = check_ring_axioms(L)
    r.check("ring axioms", ax.passed, "; ".join(ax.failures))
    r.check("rank 1 iff trivial family", (L.rank == 1) == all(G.order == 1 for G in d.nodes.values()))
    if field == "Q":
        Lcyc = compute_limit(cyclic_subdiagram(d), "Q", structure=False)
        r.check("rational rank of the cyclic subdiagram", Lcyc.rank == L.rank, f"{Lcyc.rank} vs {L.rank}")
    other = compute_limit(d, "C" if field == "Q" else "Q", structure=False)
    Lq, Lc = (L, other) if field == "Q" else (other, L)
    nat = naturality(Lq, Lc)
    r.body["naturality"] = {"injective": nat.injective, "onto": nat.onto}
    r.check("rational limit embeds in the complex limit", nat.injective and Lq.rank <= Lc.rank)
    for v in check_images(d, f.images):
        detail = v.reason or f"observed {list(v.observed)}, expected {list(v.check.expect)}"
        r.check(f"image {v.check.name}", v.passed, detail)
    pres = []
    for P in f.presentations:
        if (P.field or "Q") != field:
            continue
        doc, ok = _presentation_doc(L, P, bound)
        pres.append(doc)
        r.check(f"presentation {P.name}", ok)
    if pres:
        r.body["presentations"] = pres
    return r


def verify_report(f: DiagramFile, name: str, bound: int = 3, field: Optional[str] = None) -> Report:
    P = f.presentation(name)
    K = field or P.field or "Q"
    L = compute_limit(f.diagram, K)
    r = Report("verify")
    r.body["name"] = f.name
    r.body["rank"] = L.rank
    doc, ok = _presentation_doc(L, P, bound)
    r.body["presentation"] = doc
    r.check(f"presentation {P.name}", ok)
    return r


def index_report(f: DiagramFile, n: Optional[int] = None) -> Report:
    c = f.orbit_complex
    if c is None:
        raise ValueError("the file has no [complex] section")
    r = Report("index")
    r.body["name"] = f.name
    r.body["cells"] = [[dim, node] for dim, node in c.cells]
    triv = index(c, trivial_tuple(c.diagram))
    chi = rational_euler_char(c)
    r.body["index_of_trivial_tuple"] = triv
    r.body["chi_rational"] = str(chi)
    r.body["m_gamma"] = m_gamma(c.diagram)
    want = f.expected("chi")
    if want is not None:
        r.check("chi_rational matches meta", chi == Fraction(want), f"{chi} vs {want}")
    want = _expect_int(f, "m_gamma")
    if want is not None:
        r.check("m_gamma matches meta", m_gamma(c.diagram) == want)
    if n is not None:
        b = brown_integrality(c, n)
        r.body["brown"] = {
            "subgroup_index": n,
            "chi_subgroup": b.chi,
            "m_gamma_chi_over_n": str(b.value),
        }
        r.check("Brown integrality", b.integral, f"m*chi/n = {b.value}")
        r.check("chi of the subgroup equals n * chi_rational", b.consistent, f"{b.chi} vs {n * b.chi_rational}")
    return r


def counts_report(f: DiagramFile) -> Report:
    d = f.diagram
    fc = fused_counts(d)
    r = Report("counts")
    r.body["name"] = f.name
    r.body["n"] = fc.n
    r.body["c"] = fc.c
    for key, val in (("counts.n", fc.n), ("counts.c", fc.c)):
        want = _expect_int(f, key)
        if want is not None:
            r.check(f"{key} matches meta", val == want, f"{val} vs {want}")
    if d.graph is not None:
        h1 = _expect_int(f, "h1") or 0
        g = d.graph
        tc = tree_torsion_count([d.nodes[v] for v in g.vertices], [d.nodes[e.label] for e in g.edges], [h1])
        k = k1_rank(d)
        r.body["h1"] = h1
        r.body["torsion_count"] = tc
        r.body["k0_rank"] = k.k0_rank
        r.body["k1_rank"] = k.k1_rank
        r.body["k1_torsion"] = list(k.torsion)
        r.check("torsion count equals n", tc == fc.n, f"{tc} vs {fc.n}")
        r.check("K0 rank of the sequence equals n", k.k0_rank == fc.n, f"{k.k0_rank} vs {fc.n}")
        want = _expect_int(f, "k1")
        if want is not None:
            r.check("K1 rank matches meta", k.k1_rank == want, f"{k.k1_rank} vs {want}")
        want = _expect_int(f, "torsion.count")
        if want is not None:
            r.check("torsion count matches meta", tc == want, f"{tc} vs {want}")
    return r


def table_report(f: DiagramFile, group: Optional[str] = None) -> Report:
    r = Report("dump-table")
    groups = f.built_groups
    names = [group] if group else sorted(groups)
    tables = {}
    for name in names:
        if name not in groups:
            raise KeyError(f"no group named {name!r}")
        t = character_table(groups[name])
        tables[name] = t.to_dict()
        r.text_blocks += [f"group {name} (order {groups[name].order})", t.format(), ""]
        try:
            t.check_orthogonality()
            ok = sum(x * x for x in t.degrees) == groups[name].order
            r.check(f"orthogonality of {name}", ok)
        except AssertionError as exc:
            r.check(f"orthogonality of {name}", False, str(exc))
    r.body["tables"] = tables
    return r


def corpus_report(names: Sequence[str], load_file: Callable[[str], DiagramFile], bound: int = 3) -> str:
    """Machine reports for every command that applies to each named file, concatenated."""
    parts = []
    for name in names:
        f = load_file(name)
        reports = [limit_report(f, "Q", True, bound), limit_report(f, "C", True, bound), counts_report(f)]
        if f.orbit_complex is not None:
            reports.append(index_report(f, m_gamma(f.diagram)))
        for r in reports:
            parts.append(f"# {name} {r.command}\n" + render_machine(r))
    return "".join(parts)
