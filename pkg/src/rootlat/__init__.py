"""Root lattices over rings of integers of totally real abelian number fields."""

__version__ = "0.1.0"
