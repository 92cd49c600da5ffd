"""Exact-arithmetic toolkit for deciding symmetry and cyclotomicity of
numerical semigroups, with numeric root-location certificates."""

__version__ = "0.1.0"
