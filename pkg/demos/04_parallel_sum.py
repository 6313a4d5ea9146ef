# Splitting the sum over fixed points across processes.
#
# Terms are independent, so the index sets are cut into lexicographic rank
# ranges and each worker returns an exact partial sum. The result does not
# depend on the partition.

import time

from fanodeg import ProblemInstance, bott_sum

p = ProblemInstance(k=3, d=3, n=14)
print(f"{p.num_fixed_points} fixed points, delta = {p.delta}")

for workers in (1, 2, 4):
    t0 = time.perf_counter()
    value = bott_sum(p, workers=workers)
    print(f"workers={workers}: {value}  ({time.perf_counter() - t0:.2f}s)")
