# Bott's formula on P^2: the self-intersection of a hyperplane class is 1,
# and localization writes it as three fractions in the weights.

from fanodeg import p2_localization_identity

for w in [(1, 2, 3), (0, 1, -1), (5, 11, -7), (10**20, -3, 17)]:
    print(w, "->", p2_localization_identity(w))
