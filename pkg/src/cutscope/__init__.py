"""Monomial cut ideals of finite simple graphs."""

__version__ = "0.1.0"
