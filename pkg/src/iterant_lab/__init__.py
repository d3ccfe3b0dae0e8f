"""Exact-arithmetic workbench for iterant algebras, finite-group matrix
representations, Clifford/Majorana operator algebra, mark-calculus rewriting,
discrete non-commutative calculus, and a staggered lattice wave scheme."""

__version__ = "0.1.0"
