# The residue sum is a rational function of the weights h_1..h_{n+1} that
# happens to be constant. Evaluate the individual terms at a few points to
# see the terms move while the total stays put.

from fanodeg import ProblemInstance, bott_terms, fano_degree_bott, random_weights, sequential_weights

p = ProblemInstance(k=1, d=3, n=4)   # lines on a cubic threefold, delta = 2
print("delta =", p.delta)

for w in [sequential_weights(5), random_weights(5, 1, 100), random_weights(5, 2, 100), (-7, 0, 3, 12, 40)]:
    terms = [t.term for t in bott_terms(p, w)]
    print(w, "first terms:", [str(t) for t in terms[:3]], "-> degree", fano_degree_bott(p, w))

# Scaling every weight by c leaves each term unchanged, not only the sum.
w = sequential_weights(5)
for c in (2, -3, 7):
    same = [t.term for t in bott_terms(p, w)] == [t.term for t in bott_terms(p, [c * h for h in w])]
    print(f"scale by {c:2d}: terms unchanged = {same}")
