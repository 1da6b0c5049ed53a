"""Exact computations for divergence-zero vector fields on a torus and their tensor modules."""
