# Lines on general hypersurfaces of degree 2n-3 in P^n.
#
# For these (k=1, d=2n-3) the expected dimension is zero, so the Fano degree
# is an honest count. Three unrelated formulas should give the same integer.

from fanodeg import ProblemInstance, dm_degree, fano_degree_bott, lines_on_hypersurface, vdw_lines

for n in range(3, 9):
    p = ProblemInstance(k=1, d=2 * n - 3, n=n)
    bott = fano_degree_bott(p)
    print(f"n={n}  d={p.d:2d}  lines={bott}")
    assert bott == dm_degree(p) == vdw_lines(n) == lines_on_hypersurface(n)

# 27 lines on a cubic surface, 2875 on a quintic threefold, ...
