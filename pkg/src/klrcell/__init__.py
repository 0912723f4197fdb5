"""Graded cellular bases for cyclotomic KLR algebras at arbitrary weightings."""

__version__ = "0.1.0"
