"""Exact-arithmetic toolkit for the classification of exceptional roots
(ord(-xi) >= 7) of Alexander polynomials of trigonal curves.

Subpackages cover the pipeline end to end: integer/field arithmetic
(exactalg), the reduced Burau representation (burau), root and type
bookkeeping (typesys), the resultant sieve (sieve), universal-subgroup
coset enumeration and genus (skeleton), pairwise exclusion via fibered
products (intersect), and the command-line front end (cli).
"""

__version__ = "0.1.0"
