"""
heunlame - Heun series solutions and associated Lame spectra.

A numerical library that:
- Builds the power-series and hypergeometric-series solutions of the Heun
  equation by the transformation route, with their three-term recurrences
- Finds truncation (finite) and minimal (infinite) solutions of those recurrences
- Classifies the finite eigenfunctions of the associated Lame / Darboux
  problem and computes their energies, parity and period
- Runs acceptance suites from the command line or through MCP
"""

__version__ = "0.1.0"
