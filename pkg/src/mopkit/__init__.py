"""Exact type I multiple orthogonal polynomials of Jacobi–Piñeiro and
Laguerre (first kind) type for any number of weights."""
