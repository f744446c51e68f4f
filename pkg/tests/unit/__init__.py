"""Unit tests for dynisched."""
