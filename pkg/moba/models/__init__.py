"""Numeric domain types."""
