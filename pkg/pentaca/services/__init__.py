"""Geometry, coordinates, rules, engine and the structures run on them."""
