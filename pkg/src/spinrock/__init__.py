"""Exact decomposition and Cartan data for RoCK blocks of double covers of symmetric groups."""

__version__ = "0.1.0"
