"""CLI module for dynisched."""
