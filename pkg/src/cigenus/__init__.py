"""Exact Hirzebruch genera of complex complete intersections."""
