"""Dual fault-tolerant reachability preservers and closest-fair clustering."""

__version__ = "0.1.0"
