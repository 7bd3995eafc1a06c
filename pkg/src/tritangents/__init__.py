"""Exact-arithmetic engine for counting lines on 2-polarized K3 surfaces.

The package builds Niemeier lattices from their root systems, enumerates
line candidates for a polarization of square 6, decomposes them into orbits,
derives upper bounds, runs symmetry-pruned pattern searches, and classifies
the resulting line sets (Fano graphs, transcendental genus, real structures).
"""

__version__ = "0.1.0"
