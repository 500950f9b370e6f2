"""Exact Markov traces on cubic braid-group quotients.

Verification engine for the three-strand cubic Hecke algebra, exact
Kauffman/Dubrovnik skein traces, the Ocneanu trace, a central extension of
the (-1)-Hecke algebra for arbitrary Coxeter systems with its exotic Markov
trace, and the resulting x = 2a link invariant tables.
"""

__version__ = "0.1.0"
