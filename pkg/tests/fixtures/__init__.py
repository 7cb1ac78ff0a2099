"""Test fixtures and data."""

