"""Test suite for anticanon."""

