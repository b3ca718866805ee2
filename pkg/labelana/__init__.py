"""Analyzer for finite labeled graphs and their labeled graph algebras."""
from __future__ import annotations

__version__ = "0.1.0"
