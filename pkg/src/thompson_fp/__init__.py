"""Arithmetic for the generalized Thompson groups F(p).

Elements are handled in three interchangeable guises: words in the infinite
generating set x_0, x_1, ..., reduced tree-pair diagrams, and normal forms.
On top of that sit the caret-weight word metric for positive elements, exact
generating functions for positive and language growth, certified growth-rate
enclosures, and brute-force oracles that cross-validate all of it.
"""

__version__ = "0.1.0"
