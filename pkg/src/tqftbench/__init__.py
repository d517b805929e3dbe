"""Exact evaluators and theorem-instance checks for invertible and once-extended 2D field theories."""

__version__ = "0.1.0"
