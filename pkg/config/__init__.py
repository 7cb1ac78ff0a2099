"""Configuration management for the anticanonical engine."""
