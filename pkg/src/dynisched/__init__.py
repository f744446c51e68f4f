"""dynisched - dynamic interval scheduling structures with brute-force oracles."""

__version__ = "0.1.0"
