"""Integration tests."""

