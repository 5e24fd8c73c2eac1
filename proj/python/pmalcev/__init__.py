"""Exact checks for structure-constant algebras and operator identities."""

from ._pmalcev import fixture, fixtures, run

__all__ = ["fixture", "fixtures", "run"]
