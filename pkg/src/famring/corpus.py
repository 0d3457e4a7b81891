"""Builders for the bundled example diagrams.

Every builder returns a DiagramFile whose meta block carries the expected
ranks and counts, so ``famring limit --checks`` can compare against them.
``write_corpus`` regenerates the ``.diagram`` files shipped in
``famring/corpus``.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Callable, Optional, Sequence

from .fileformat import DiagramFile, build_group, load, serialize
from .groups import FiniteGroup, perm_from_cycles
from .presentation import Presentation

V4_SPEC = {"permutations": [list(perm_from_cycles([[1, 2], [3, 4]], 4)), list(perm_from_cycles([[1, 3], [2, 4]], 4))]}
S3_SPEC = {"permutations": [list(perm_from_cycles([[1, 2, 3]], 3)), list(perm_from_cycles([[1, 2]], 3))]}


def _group(spec: dict) -> FiniteGroup:
    return build_group(spec)


def _cyclic_spec(n: int) -> dict:
    return {"cyclic": n}


def _mult_embedding(m: int, n: int) -> list[int]:
    """Z/m -> Z/n, 1 -> n/m."""
    return [(i * (n // m)) % n for i in range(m)]


def _inversion(n: int) -> list[int]:
    return [(-i) % n for i in range(n)]


def _pres(name: str, field: str, variables: str, *relations: str) -> Presentation:
    return Presentation(name, variables.split(), list(relations), field)


def _base(name: str, description: str) -> DiagramFile:
    f = DiagramFile()
    f.meta["name"] = name
    f.meta["description"] = description
    return f


# -- one-node cyclic rings -------------------------------------------------------


def cyclic_file(n: int) -> DiagramFile:
    f = _base(f"cyclic-{n}", f"the single finite group Z/{n}")
    f.groups = {"1": _cyclic_spec(1), f"Z{n}": _cyclic_spec(n)}
    f.nodes = {f"Z{n}": f"Z{n}", "1": "1"}
    f.res = [("1", f"Z{n}", [0])]
    ncls = n
    ncyc = sum(1 for d in range(1, n + 1) if n % d == 0)
    f.meta.update({"rank.Q": str(ncyc), "rank.C": str(ncls), "counts.n": str(ncls), "counts.c": str(ncyc)})
    if n > 2 and all(n % q for q in range(2, n)):
        f.presentations.append(_pres("printed-w", "Q", "w", f"w^2 - {n - 2}*w - {n - 1}"))
    if n == 4:
        f.presentations.append(_pres("printed-xy", "Q", "x y", "x^2 - 1", "x*y - y", "y^2 - 2*x - 2"))
    if n == 6:
        f.presentations.append(_pres("printed-st", "Q", "s t", "s^2 - s - 1", "t^2 - 1"))
        f.presentations.append(_pres("corrected-st", "Q", "s t", "s^2 - s - 2", "t^2 - 1"))
    return f


# -- free and amalgamated products of cyclic groups --------------------------------


def zpzq_file(p: int, q: int) -> DiagramFile:
    """Z/p * Z/q as a graph of groups with trivial edge group."""
    f = _base(f"z{p}z{q}", f"free product Z/{p} * Z/{q}")
    A, B = f"Z{p}", f"Z{q}"
    f.groups = {"1": _cyclic_spec(1), A: _cyclic_spec(p), B: _cyclic_spec(q)}
    f.nodes = {A: A, B: B, "1": "1"}
    f.res = [("1", A, [0]), ("1", B, [0])]
    f.vertices = [A, B]
    f.edges = [("1", A, B)]

    def ncyc(n):
        return sum(1 for d in range(1, n + 1) if n % d == 0)

    f.meta.update({
        "rank.Q": str(ncyc(p) + ncyc(q) - 1),
        "rank.C": str(p + q - 1),
        "counts.n": str(p + q - 1),
        "counts.c": str(ncyc(p) + ncyc(q) - 1),
        "k1": "0",
        "h1": "0",
        "torsion.count": str(p + q - 1),
    })
    return f


def z3z5_file() -> DiagramFile:
    f = zpzq_file(3, 5)
    f.meta["name"] = "z3z5"
    f.presentations = [
        _pres("printed-cubic", "Q", "z", "z^3 - 4*z^2 - z + 1"),
        _pres("corrected-ab", "Q", "a b", "a^2 - 3*a", "b^2 - 5*b", "a*b"),
        _pres("complex-z", "C", "z", "z^7 + z^6 + z^5 - z^2 - z - 1"),
    ]
    return f


def sl2z_file() -> DiagramFile:
    f = _base("sl2z", "SL2(Z) = Z/4 *_{Z/2} Z/6 with the tree of finite stabilizers")
    f.groups = {"1": _cyclic_spec(1), "Z2": _cyclic_spec(2), "Z3": _cyclic_spec(3), "Z4": _cyclic_spec(4), "Z6": _cyclic_spec(6)}
    f.nodes = {"Z4": "Z4", "Z6": "Z6", "Z2": "Z2", "Z3": "Z3", "1": "1"}
    f.res = [
        ("Z2", "Z4", _mult_embedding(2, 4)),
        ("Z2", "Z6", _mult_embedding(2, 6)),
        ("Z3", "Z6", _mult_embedding(3, 6)),
        ("1", "Z2", [0]),
        ("1", "Z3", [0]),
        ("1", "Z4", [0]),
        ("1", "Z6", [0]),
    ]
    f.vertices = ["Z4", "Z6"]
    f.edges = [("Z2", "Z4", "Z6")]
    f.complex = [(0, "Z4"), (0, "Z6"), (1, "Z2")]
    f.meta.update({
        "rank.Q": "5", "rank.C": "8", "counts.n": "8", "counts.c": "5",
        "k1": "0", "h1": "0", "torsion.count": "8",
        "chi": str(Fraction(-1, 12)), "m_gamma": "12",
    })
    x = [1, -1, 1, -1]
    y = [2, 0, -2, 0]
    s = [2, -1, -1, 2, -1, -1]
    t = [1, -1, 1, -1, 1, -1]
    f.images = [
        {"name": "res1(x)", "node": "Z4", "values": x, "sub": "Z2", "sign": 1, "expect": [1, 1]},
        {"name": "res1(y)", "node": "Z4", "values": y, "sub": "Z2", "sign": 1, "expect": [2, -2]},
        {"name": "res2(s)", "node": "Z6", "values": s, "sub": "Z2", "sign": 1, "expect": [2, 2]},
        {"name": "res2(t)", "node": "Z6", "values": t, "sub": "Z2", "sign": 1, "expect": [1, -1]},
    ]
    rels = ["u1^2 - 1", "u2^2 - u2 - 2", "u3^2 - 2*u1 - 2", "u1*u3 - u3", "u1*u2 - 2*u1 - u2 + 2"]
    fixed = ["u1^2 - 1", "u2^2 - u2 - 2", "u3^2 - 2*u1 - u2", "u1*u3 - u3", "u1*u2 - 2*u1 - u2 + 2"]
    f.presentations = [
        _pres("printed-u", "Q", "u1 u2 u3", *rels),
        _pres("corrected-u", "Q", "u1 u2 u3", *fixed),
        _pres("complex-u", "C", "u", "u^8 + u^6 - u^2 - 1"),
    ]
    return f


def sl3z_c2_file() -> DiagramFile:
    f = _base("sl3z-c2", "SL3(Z) with the family of cyclic 2-subgroups: <S>, <T> with Weyl group Z/2")
    f.groups = {"1": _cyclic_spec(1), "S": _cyclic_spec(4), "T": _cyclic_spec(4)}
    f.nodes = {"S": "S", "T": "T", "1": "1"}
    f.res = [("1", "S", [0]), ("1", "T", [0])]
    f.autos = [("S", _inversion(4)), ("T", _inversion(4))]
    f.meta.update({"rank.Q": "5", "rank.C": "5", "counts.n": "5", "counts.c": "5"})
    rels = [
        "x1^2 - 1", "x2^2 - 2*x1 - 2",
        "x3^2 - 1", "x4^2 - 2*x3 - 2",
        "x1*x2 - x2", "x1*x3 - x1 - x3 + 1",
        "x3*x4 - x4", "x2*x4 - 2*x2 - 2*x4 + 4",
        "x1*x4 - 2*x1 - x4 + 2", "x2*x3 - 2*x3 - x2 + 2",
    ]
    f.presentations = [_pres("printed-x", "Q", "x1 x2 x3 x4", *rels), _pres("complex-x", "C", "x1 x2 x3 x4", *rels)]
    return f


def gl_file(p: int, orbit_orders: Sequence[int]) -> DiagramFile:
    """GL_{p-1}(Z) with the family F(p), for a given list of orbit stabilizer orders |S_i|."""
    from .characters import primitive_root

    tag = "-".join(map(str, orbit_orders))
    f = _base(f"gl-p{p}-{tag}", f"GL_{p - 1}(Z), family F({p}), orbit stabilizers of orders {list(orbit_orders)}")
    f.groups = {"1": _cyclic_spec(1), f"Z{p}": _cyclic_spec(p)}
    f.nodes = {"1": "1"}
    root = primitive_root(p)
    for i, s in enumerate(orbit_orders, start=1):
        if (p - 1) % s:
            raise ValueError(f"{s} does not divide {p - 1}")
        label = f"P{i}"
        f.nodes[label] = f"Z{p}"
        f.res.append(("1", label, [0]))
        if s > 1:
            k = pow(root, (p - 1) // s, p)
            f.autos.append((label, [(k * j) % p for j in range(p)]))
    t = len(orbit_orders)
    crank = 1 + sum((p - 1) // s for s in orbit_orders)
    f.meta.update({"rank.Q": str(t + 1), "rank.C": str(crank), "counts.n": str(crank), "counts.c": str(t + 1)})
    return f


# -- Bianchi groups ---------------------------------------------------------------------


def _v4_data():
    V4 = _group(V4_SPEC)
    a, b = 1, 2
    c = V4.mul(a, b)

    def char(minus: set[int]) -> list[int]:
        return [-1 if g in minus else 1 for g in range(4)]

    # x(a) = -1, y(a) = 1 so that the glued involution a has phi(x) = z, phi(y) = 1
    x = char({a, c})
    y = char({b, c})
    cycle = [0, 0, 0, 0]
    cycle[a], cycle[b], cycle[c] = b, c, a
    return V4, a, x, y, cycle


def bianchi_m1_f2_file() -> DiagramFile:
    V4, a, x, y, cycle = _v4_data()
    f = _base("bianchi-m1-f2", "PSL2(Z[i]), family F(2): (Z/2)^2 of Gamma_I, the Klein group of A4, and the glued involution")
    f.groups = {"1": _cyclic_spec(1), "Z2": _cyclic_spec(2), "V4": V4_SPEC}
    f.nodes = {"V": "V4", "K": "V4", "Z2": "Z2", "1": "1"}
    f.res = [("Z2", "V", [0, a]), ("1", "V", [0]), ("1", "K", [0]), ("1", "Z2", [0])]
    f.autos = [("K", cycle)]
    f.meta.update({"rank.C": "5", "counts.n": "5"})
    reg3 = [3, -1, -1, -1]
    f.images = [
        {"name": "phi(x)", "node": "V", "values": x, "sub": "Z2", "sign": 1, "expect": [1, -1]},
        {"name": "phi(y)", "node": "V", "values": y, "sub": "Z2", "sign": 1, "expect": [1, 1]},
        {"name": "phi(u1)", "node": "Z2", "values": [1, -1], "sub": "Z2", "sign": -1, "expect": [-1, 1]},
        {"name": "phi(u2)", "node": "Z2", "values": [3, 3], "sub": "Z2", "sign": -1, "expect": [-3, -3]},
        {"name": "u2 on the Klein group of A4", "node": "K", "values": reg3, "sub": "1", "sign": 1, "expect": [3]},
    ]
    f.presentations = [
        _pres("printed-v123", "C", "v1 v2 v3", "v1^2 - 1", "v2^2 - 1", "v3^2 - 2*v3 - 3", "v2*v3 - 3*v2 - v3 - 3"),
        _pres("corrected-v123", "C", "v1 v2 v3", "v1^2 - 1", "v2^2 - 1", "v3^2 - 2*v3 - 3", "v2*v3 - 3*v2 - v3 + 3"),
    ]
    for p in f.presentations:
        p.require_generation = False
    return f


def bianchi_m1_f3_file() -> DiagramFile:
    f = _base("bianchi-m1-f3", "PSL2(Z[i]), family F(3): the Z/3 of S3 in Gamma_I, of S3 and A4 in Gamma_II, glued along Z/2 * Z/3")
    f.groups = {"1": _cyclic_spec(1), "Z3": _cyclic_spec(3)}
    f.nodes = {"A": "Z3", "B": "Z3", "E": "Z3", "1": "1"}
    f.res = [("E", "A", [0, 1, 2]), ("E", "B", [0, 1, 2]), ("1", "A", [0]), ("1", "B", [0]), ("1", "E", [0])]
    f.autos = [("A", _inversion(3)), ("B", _inversion(3)), ("E", _inversion(3))]
    f.meta.update({"rank.C": "2", "counts.n": "2"})
    f.presentations = [_pres("printed-gamma", "C", "g", "g^2 - g - 2")]
    return f


def bianchi_m3_f2_file() -> DiagramFile:
    V4, a, x, y, cycle = _v4_data()
    f = _base("bianchi-m3-f2", "PSL2 over the Eisenstein integers, family F(2): two Klein groups of A4 glued along Z/2")
    f.groups = {"1": _cyclic_spec(1), "Z2": _cyclic_spec(2), "V4": V4_SPEC}
    f.nodes = {"K1": "V4", "K2": "V4", "Z2": "Z2", "1": "1"}
    f.res = [("Z2", "K1", [0, a]), ("Z2", "K2", [0, a]), ("1", "K1", [0]), ("1", "K2", [0]), ("1", "Z2", [0])]
    f.autos = [("K1", cycle), ("K2", cycle)]
    f.meta.update({"rank.C": "2", "counts.n": "2"})
    ysum = [3, -1, -1, -1]
    f.images = [
        {"name": "rho(y1)", "node": "K1", "values": ysum, "sub": "Z2", "sign": 1, "expect": [3, -1]},
        {"name": "rho(y2)", "node": "K2", "values": ysum, "sub": "Z2", "sign": -1, "expect": [-3, 1]},
    ]
    f.presentations = [_pres("printed-y", "C", "y", "y^2 - 2*y - 3")]
    return f


def bianchi_m3_f3_file() -> DiagramFile:
    f = _base("bianchi-m3-f3", "PSL2 over the Eisenstein integers, family F(3): a Z/3 with trivial Weyl action and one with Weyl group Z/2")
    f.groups = {"1": _cyclic_spec(1), "Z3": _cyclic_spec(3)}
    f.nodes = {"A": "Z3", "B": "Z3", "1": "1"}
    f.res = [("1", "A", [0]), ("1", "B", [0])]
    f.autos = [("B", _inversion(3))]
    f.meta.update({"rank.C": "4", "counts.n": "4"})
    f.presentations = [_pres("printed-alpha-beta", "C", "alpha beta", "alpha^3 - 1", "beta^2 - beta - 2", "alpha^2*beta - 2*alpha^2 - beta + 2")]
    return f


def s3_edge_file() -> DiagramFile:
    S3 = _group(S3_SPEC)
    r = next(g for g in range(S3.order) if S3.element_orders[g] == 3)
    f = _base("s3-edge", "two copies of S3 amalgamated along Z/3")
    f.groups = {"1": _cyclic_spec(1), "Z3": _cyclic_spec(3), "S3": S3_SPEC}
    f.nodes = {"A": "S3", "B": "S3", "E": "Z3", "1": "1"}
    emb = [0, r, S3.mul(r, r)]
    f.res = [("E", "A", emb), ("E", "B", emb), ("1", "A", [0]), ("1", "B", [0]), ("1", "E", [0])]
    f.vertices = ["A", "B"]
    f.edges = [("E", "A", "B")]
    # the centralizer of an order-3 element contains Z/3 x Z, contributing one H^1 dimension
    f.meta.update({
        "rank.Q": "4", "rank.C": "4", "counts.n": "4", "counts.c": "4",
        "k1": "1", "h1": "1", "torsion.count": "4",
    })
    return f


def trivial_file() -> DiagramFile:
    f = _base("trivial", "the trivial family {1}")
    f.groups = {"1": _cyclic_spec(1)}
    f.nodes = {"1": "1"}
    f.meta.update({"rank.Q": "1", "rank.C": "1", "counts.n": "1", "counts.c": "1"})
    f.presentations = [_pres("unit", "Q", "x", "x - 1")]
    return f


BUILDERS: dict[str, Callable[[], DiagramFile]] = {
    "trivial": trivial_file,
    "cyclic-3": lambda: cyclic_file(3),
    "cyclic-4": lambda: cyclic_file(4),
    "cyclic-5": lambda: cyclic_file(5),
    "cyclic-6": lambda: cyclic_file(6),
    "cyclic-7": lambda: cyclic_file(7),
    "z3z5": z3z5_file,
    "zpzq-2-3": lambda: _renamed(zpzq_file(2, 3), "zpzq-2-3"),
    "sl2z": sl2z_file,
    "sl3z-c2": sl3z_c2_file,
    "gl-p3-2": lambda: gl_file(3, [2]),
    "gl-p5-4": lambda: gl_file(5, [4]),
    "gl-p5-2-2": lambda: gl_file(5, [2, 2]),
    "bianchi-m1-f2": bianchi_m1_f2_file,
    "bianchi-m1-f3": bianchi_m1_f3_file,
    "bianchi-m3-f2": bianchi_m3_f2_file,
    "bianchi-m3-f3": bianchi_m3_f3_file,
    "s3-edge": s3_edge_file,
}


def _renamed(f: DiagramFile, name: str) -> DiagramFile:
    f.meta["name"] = name
    return f


def corpus_dir() -> Path:
    return Path(str(resources.files("famring") / "corpus"))


def corpus_names() -> list[str]:
    return sorted(p.stem for p in corpus_dir().glob("*.diagram"))


def load_corpus(name: str) -> DiagramFile:
    return load(corpus_dir() / f"{name}.diagram")


def write_corpus(target: Optional[Path] = None) -> list[Path]:
    target = target or corpus_dir()
    target.mkdir(parents=True, exist_ok=True)
    out = []
    for name, build in BUILDERS.items():
        path = target / f"{name}.diagram"
        path.write_text(serialize(build()))
        out.append(path)
    return out
