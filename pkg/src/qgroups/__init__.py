"""Exact symbolic engine for q- and h-deformed algebraic structures.

Builds the quantum plane calculus, quantum matrices, the deformed enveloping
algebra of sl(2) with its universal T- and R-matrices, q-oscillators, and the
Jordanian deformation, and verifies their defining identities exactly over
the rational function field.
"""

__version__ = "0.1.0"
