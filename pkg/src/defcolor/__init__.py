"""Defective graph coloring toolkit.

Generators for closures of balanced trees, exact tree-depth and minor
testing, an exact defect-bounded coloring solver, and a certified
elimination-scheme pipeline (build, certify, color).
"""

__version__ = "0.1.0"
