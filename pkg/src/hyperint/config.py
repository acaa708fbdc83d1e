"""Tunable search bounds.

Every bounded search in the library reads its limits from a Settings
instance so the CLI can expose them as flags.  Defaults follow the sizes
the algorithms need at desk scale; none of them affect correctness of a
returned answer (all answers are re-verified exactly), only completeness
of the search.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    field_cap: int = 24          # max degree of any constructed number field
    max_num_degree: int = 40     # numerator degree scanned by ansatz solvers
    max_den_power: int = 6       # power of each candidate denominator factor
    express_bound: int = 40      # degree bound for express_in_F scans
    homography_bound: int = 12   # |c0| scanned by the homography search
    reduce_bound: int = 60       # numerator degree bound in univariate_reduce
    factor_size_cap: int = 400   # total-degree guard for factorizations


DEFAULT = Settings()
