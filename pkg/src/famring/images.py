"""Checks of generator images under restriction along a diagram morphism.

An image check names a virtual character on one node (its value at every
element), a smaller node reached by a restriction, a sign, and the expected
values on the smaller node.  The check passes when the values really are a
virtual character and ``sign * res(values)`` equals the expectation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .characters import character_table
from .cyclo import CycloNumber
from .diagram import DiagramError, FamilyDiagram


@dataclass(frozen=True)
class ImageCheck:
    name: str
    node: str
    values: tuple[int, ...]
    sub: str
    sign: int
    expect: tuple[int, ...]

    @classmethod
    def from_dict(cls, obj: dict) -> "ImageCheck":
        return cls(obj["name"], obj["node"], tuple(obj["values"]), obj["sub"], int(obj["sign"]), tuple(obj["expect"]))


@dataclass(frozen=True)
class ImageVerdict:
    check: ImageCheck
    observed: Optional[tuple[int, ...]]
    virtual: bool
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.virtual and self.observed == self.check.expect


def _restriction_images(d: FamilyDiagram, sub: str, node: str) -> Optional[list[int]]:
    """Element map of a chain of restrictions from ``sub`` up to ``node``, if one exists."""
    if sub == node:
        return list(range(d.nodes[node].order))
    frontier = [(sub, list(range(d.nodes[sub].order)))]
    seen = {sub}
    while frontier:
        label, images = frontier.pop(0)
        for m in d.res:
            if m.sub == label and m.sup not in seen:
                composed = [m.hom.images[x] for x in images]
                if m.sup == node:
                    return composed
                seen.add(m.sup)
                frontier.append((m.sup, composed))
    return None


def check_image(d: FamilyDiagram, check: ImageCheck) -> ImageVerdict:
    if check.node not in d.nodes or check.sub not in d.nodes:
        raise DiagramError(f"image check {check.name!r} names an unknown node")
    if check.sign not in (1, -1):
        raise DiagramError(f"image check {check.name!r}: sign must be 1 or -1")
    G = d.nodes[check.node]
    if len(check.values) != G.order:
        raise DiagramError(f"image check {check.name!r}: expected {G.order} values, got {len(check.values)}")
    table = character_table(G)
    cls = G.classes
    for g, v in enumerate(check.values):
        if check.values[cls.representatives[cls.class_of[g]]] != v:
            return ImageVerdict(check, None, False, "values are not constant on conjugacy classes")
    try:
        table.decompose([CycloNumber.rational(check.values[r], table.conductor) for r in cls.representatives])
    except ValueError:
        return ImageVerdict(check, None, False, "values are not a virtual character")
    images = _restriction_images(d, check.sub, check.node)
    if images is None:
        raise DiagramError(f"image check {check.name!r}: no restriction path from {check.sub} to {check.node}")
    observed = tuple(check.sign * check.values[x] for x in images)
    return ImageVerdict(check, observed, True)


def check_images(d: FamilyDiagram, checks: Sequence[dict]) -> list[ImageVerdict]:
    return [check_image(d, ImageCheck.from_dict(c)) for c in checks]
