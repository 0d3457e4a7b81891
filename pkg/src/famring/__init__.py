"""Stable-element rings G_F(K[Γ]) of finite-subgroup diagrams, for K = Q or C."""

from .characters import CharacterTable, character_table, rep_ring_basis, restriction_matrix
from .diagram import FamilyDiagram, cyclic_subdiagram, fused_counts, validate
from .euler import OrbitComplex, StableTuple, brown_integrality, index
from .fileformat import DiagramFile, load, parse, serialize
from .groups import FiniteGroup, make_cyclic, make_from_permutations
from .limit import LimitRing, compute_limit
from .presentation import Presentation, find_presentation_witness, verify_presentation

__version__ = "0.1.0"
