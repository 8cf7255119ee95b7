"""
Local square classes and Hilbert symbols
========================================

Every local ingredient of the rank formula reduces to square classes and
quadratic Hilbert symbols over Q_v.  This script walks through them and
checks the closed forms against a direct search for solutions.
"""

from wkplus.padic import (
    INF,
    hilbert,
    hilbert_bruteforce,
    hilbert_product_check,
    is_local_norm,
    square_class_at_2,
    v2_pow_minus_one,
)

# Q_2^x / (Q_2^x)^2 has eight classes; each rational lands on one representative
for q in (17, 3, 2, -6, 40):
    print(f"class of {q:>3} at 2: {square_class_at_2(q).representative}")

# (a, b)_v is +1 exactly when z^2 = a x^2 + b y^2 is solvable over Q_v
for a, b in [(2, 3), (-1, -1), (2, 17)]:
    row = {v: hilbert(a, b, v) for v in (INF, 2, 3, 17)}
    print(f"({a}, {b})_v:", row, "product formula holds:", hilbert_product_check(a, b))

# the closed form agrees with a search for primitive solutions modulo p^3 (2^8 at p = 2)
disagreements = [
    (a, b, p)
    for p in (2, 3, 5, 7)
    for a in range(-10, 11)
    for b in range(-10, 11)
    if a and b and hilbert(a, b, p) != hilbert_bruteforce(a, b, p)
]
print("closed form vs search disagreements:", disagreements)

# x is a local norm from Q_v(sqrt d) iff (x, d)_v = +1
print("2 is a norm from Q_17(sqrt 17):", is_local_norm(2, 17, 17))
print("2 is a norm from Q_5(sqrt 5):", is_local_norm(2, 5, 5))

# 2-parts of l^k - 1 by lifting the exponent
print("v2(7^2 - 1) =", v2_pow_minus_one(7, 2), " v2(5^4 - 1) =", v2_pow_minus_one(5, 4))
