"""End-to-end runs, golden-table checks and rendering."""
