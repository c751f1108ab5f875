"""ellspan: exact linear-independence tests for torsion-translate sections
on elliptic curves, and the matching q-expansion toolkit at the cusp.

Everything is computed with exact arithmetic (rationals, cyclotomics,
finite fields); there is no floating point anywhere in the package.
"""

__version__ = "0.1.0"
