"""Decision engines: derivatives, GE2, automorphisms, metabelian, free nonassociative."""
