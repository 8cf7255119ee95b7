"""
Ranks of positive étale wild kernels of quadratic fields
========================================================

For odd i >= 3 and E = Q(sqrt d) the 2-rank of WK+_{2i-2}(E) is r - 1 - t_plus,
except for Q(sqrt 2) which sits in the cyclotomic Z_2-extension and has
rank 0 by codescent.  The vanishing criterion says the kernel is trivial
exactly when E is unramified outside {2, inf, l} with l = +-3 mod 8.  Fields
such as Q(sqrt 17) or Q(sqrt -7), where R is a single prime l with 2 a
residue mod l, get rank 0 from the formula but fail the criterion; the
report flags them instead of choosing a side.
"""

from wkplus import rank_quadratic

print(f"{'d':>4} {'R':<12} {'r':>2} {'t+':>3} {'rank':>5}  criterion  discrepancy")
for d in (2, 3, 5, 7, 11, 13, 17, 23, 31, 41, -1, -7, 15, 105):
    rep = rank_quadratic(d, 3)
    print(f"{d:>4} {str(rep.R):<12} {rep.r:>2} {rep.t_plus:>3} {rep.rank:>5}  "
          f"{str(rep.vanishing_criterion):<9}  {rep.discrepancy}")

# the rank does not depend on the odd twist with the configured D+ = <2>
assert all(rank_quadratic(d, 3).rank == rank_quadratic(d, 7).rank for d in range(3, 60, 2) if d % 9 and d % 25 and d % 49)

flagged = [ell for ell in (17, 41, 73, 89, 97, 113) if rank_quadratic(ell, 3).discrepancy]
print("primes l = 1 mod 8 flagged as discrepancies:", flagged)
