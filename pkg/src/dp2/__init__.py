"""Arithmetic of del Pezzo surfaces of degree 2: w^2 = A x^4 + B y^4 + C z^4.

Picard lattice, Galois action, Brauer group via group cohomology, and
local (Brauer-Manin) obstruction analysis.
"""

__version__ = "0.1.0"
