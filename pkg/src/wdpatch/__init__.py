"""Exact Weil-Deligne, GSp(4) and representation-patching calculus."""

__version__ = "0.1.0"
