"""GF(2) edge-space algebra of graphs and Monte Carlo experiments on the triangle space of G(n, p)."""

from .gf2 import BitVec, Gf2Basis, orthogonal_complement
from .graph import CutSpec, Graph, TriangleSet, sample_gnp, sample_two_round, triangles
from .spaces import EdgeVector, SpaceBasis, betti1, cycle_space, cut_space, triangle_perp, triangle_space

__version__ = "0.1.0"
