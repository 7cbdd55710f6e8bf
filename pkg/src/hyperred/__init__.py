"""Reduction data of hyperelliptic curves over local fields.

Cluster pictures, stable model trees, BY trees, dual graphs of special
fibres, and the recovery of all of these from valuations of a finite list
of absolute invariants, with a complete genus-2 pipeline.
"""

__version__ = "0.1.0"
