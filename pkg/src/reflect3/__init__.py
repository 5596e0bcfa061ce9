"""Exact computation with rank-3 reflection representations: construction,
reducibility, translation lattices, twisted generator systems, and the
replayable verification suites behind the reflect3 CLI."""

__version__ = "0.1.0"
