"""Exact trace computations in Hecke and Yokonuma-Hecke algebras, and the
comparison of the HOMFLYPT polynomial with the invariants Delta_S."""
