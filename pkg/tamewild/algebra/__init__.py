"""Value types: rationals, noncommutative, commutative and nonassociative polynomials, parser."""
