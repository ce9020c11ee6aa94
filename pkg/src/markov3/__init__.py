"""Exact arithmetic for the Markov and Lagrange spectra below 3 and for
counting rational solutions of |x - p/q| < 1/(3q^2).

Modules: qfield (quadratic surds, continued fractions), words (Christoffel
and mechanical words, the exterior operators), cuts (cut values, lambda_n),
spectra (Markov triples, forms, roots, tilde-m), classify (solution counts
and tail normal forms), corpus (seeded test inputs) and cli.
"""

__version__ = "0.1.0"
