"""Cluster seeds, monomial liftings and branching seeds for reductive groups."""

__version__ = "0.1.0"
