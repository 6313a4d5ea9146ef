# The Debarre-Manivel coefficient as an oracle, and what truncation buys.
#
# The degree is the coefficient of x_0^n x_1^(n-1) ... x_k^(n-k) in a product
# of linear forms. Capping exponents at the target keeps the intermediate
# polynomials small.

import time

from fanodeg import ProblemInstance, expected_dimension, fano_degree_bott
from fanodeg.oracle import dm_degree, dm_product

p = ProblemInstance(k=2, d=3, n=8)
target = tuple(p.n - i for i in range(p.k + 1))
t0 = time.perf_counter()
print("truncated product terms:", len(dm_product(p.k, p.d, p.n, p.delta, target)),
      f"({time.perf_counter() - t0:.3f}s)")
print("dm degree:", dm_degree(p), " bott degree:", fano_degree_bott(p))

# A small table of Fano degrees over the acceptance grid.
for k in range(3):
    row = []
    for n in range(k + 1, 9):
        for d in (1, 3, 4, 5, 6):
            if expected_dimension(k, d, n) >= 0:
                row.append(f"(d={d},n={n}):{dm_degree(ProblemInstance(k, d, n))}")
    print(f"k={k}:", " ".join(row))
