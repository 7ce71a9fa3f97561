"""nu-Tamari lattices, nu-brick polyhedra and projected nu-associahedra."""

__version__ = "0.1.0"
