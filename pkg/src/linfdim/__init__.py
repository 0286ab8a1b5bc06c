"""Exact tools for the l-infinity dimension of metric graphs."""

__version__ = "0.1.0"
