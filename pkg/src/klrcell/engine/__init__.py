"""Diagrammatic evaluation of weighted KLR algebras."""
