"""Size caps for the exhaustive algorithms. Mutate ``LIMITS`` to override."""
from dataclasses import dataclass


@dataclass
class Limits:
    closure: int = 10080        # elements in a permutation-group closure
    aut_search: int = 24        # group order for automorphism search
    isomorphism: int = 120      # group order for isomorphism backtracking
    taut: int = 40320           # (n-1)! for brute-force TAut / Aut
    extension: int = 5040       # |G_S| * |S| for build_extension
    associativity: int = 5040   # group order for exhaustive associativity check
    enumerate: int = 6          # right-loop order for enumeration


LIMITS = Limits()
