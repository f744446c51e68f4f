"""Tests for dynisched."""
