"""Intersection-space Betti numbers of hypersurfaces with isolated singularities."""
