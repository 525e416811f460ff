"""Exact combinatorics of subregular Harder-Narasimhan classes for simple groups."""

__version__ = "0.1.0"
