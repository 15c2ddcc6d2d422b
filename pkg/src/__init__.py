"""
EI Preprojective

Exact computations with preprojective algebras of finite EI quivers and
verification of their structural properties.
"""

__version__ = "1.0.0"
