"""
Tate cohomology of finite 2-modules
===================================

For G of order 2 acting on a finite module M, H^0 = ker(sigma - 1)/im(1 + sigma)
and H^-1 = ker(1 + sigma)/im(sigma - 1) have the same order.  The oracle
computes both by enumeration and by Smith normal form.
"""

import numpy as np

from wkplus.homology import Finite2Module, induced_module, random_module, tate_orders, trivial_module

examples = {
    "Z/2, trivial": trivial_module([2]),
    "Z/4, sigma = -1": Finite2Module.from_lists([4], [[-1]]),
    "Z/2 + Z/2, swap": induced_module([2]),
    "Z/8 + Z/8, trivial": trivial_module([8, 8]),
}
for name, M in examples.items():
    print(f"{name:<22} enumeration {tuple(tate_orders(M, 'enumerate'))}  snf {tuple(tate_orders(M, 'snf'))}")

rng = np.random.default_rng(0)
sample = [random_module(rng) for _ in range(200)]
print("Herbrand quotient 1 on", sum(h0 == h1 for h0, h1 in map(tate_orders, sample)), "of", len(sample), "random modules")

# beyond 2^16 elements the Smith-normal-form route takes over
big = induced_module([2**8] * 3)
print("|M| = 2^48 induced module:", tuple(tate_orders(big)))
