from .vector_field import VectorField, FieldSum, Degree, format_field, parse_field
from .generators import generators, random_divergence_free_field
from .oracle import commutator_on_monomial, monomials, bracket_matches_derivations

__all__ = [
    "VectorField",
    "FieldSum",
    "Degree",
    "format_field",
    "parse_field",
    "generators",
    "random_divergence_free_field",
    "commutator_on_monomial",
    "monomials",
    "bracket_matches_derivations",
]
