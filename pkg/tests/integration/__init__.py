"""Integration tests for the dynisched CLI."""
