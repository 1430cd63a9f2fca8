"""Smell detection, refactoring resource profiling and batch-impact prediction."""

__version__ = "0.1.0"
