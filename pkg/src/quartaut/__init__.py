"""quartaut - exact cyclotomic computer algebra for quartic surfaces and their projective automorphism groups."""

__version__ = "0.1.0"
