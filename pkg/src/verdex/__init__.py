"""Exact deformed Verlinde indices for SU(2).

Two independent routes compute the same index series: the Frobenius-algebra
deformed trace over the regular roots of unity (`verdex.frobenius`) and the
virtual-localization contour/distribution calculus over the torus moduli
(`verdex.localization`).  All arithmetic is exact (rationals, cyclotomic
fields, truncated formal power series).
"""

__version__ = "0.1.0"
