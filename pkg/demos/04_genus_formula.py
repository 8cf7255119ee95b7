"""
Genus formula bookkeeping
=========================

The quadratic genus formula gives log2 |(WK+ E)^G| / |WK+ Q| as
r - 1 - log2 [D+ : D+ cap N E^x], and since WK+(Q) = 0 this equals the
2-rank.  The general formula is pure order bookkeeping over supplied
constituents.
"""

from wkplus import genus_ratio_general, genus_ratio_quadratic, norm_index, rank_quadratic
from wkplus.homology import global_h1_order, local_h1_order
from wkplus.quadfield import QuadraticField

for d in (3, 7, 17, 105, -15):
    E = QuadraticField(d)
    rep = rank_quadratic(E, 5)
    local = [local_h1_order(E, 5, p) for p in rep.R]
    print(f"d = {d:>4}: local H_1 orders {local}, global H_1 order {global_h1_order(E, 5).order}, "
          f"norm index {norm_index([2], E)}, genus exponent {genus_ratio_quadratic(E, 5)}, rank {rep.rank}")

# supplying the constituents by hand reproduces d = 7
print("bookkeeping (0, [1, 1], 1, 0) ->", genus_ratio_general(0, [1, 1], 1, 0))
