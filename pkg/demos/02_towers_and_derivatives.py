# Canonical towers, realizations and their transfinite derivatives.
from fractions import Fraction

from cbrank import Interval, canonical_tower, cb_characteristic, derivative, derivative_upto, points, realize
from cbrank.notation import parse_ordinal

unit = Interval(0, 1)

t1 = canonical_tower(1, unit)
print("rank-1 tower, depth 3:", [str(q) for q in points(t1, 3).points])
print("its derived set      :", derivative(t1))

t2 = canonical_tower(2, unit)
for d in range(1, 4):
    print(f"rank-2 tower, depth {d}: {len(points(t2, d))} points")
print("first derivative CB  :", cb_characteristic(derivative(t2)))

# rank w: every finite derivative keeps infinitely many points, the w-th leaves the top
tw = canonical_tower(parse_ordinal("w"), unit)
for beta in ["1", "5", "w"]:
    print(f"CB of tower(w)^({beta}) :", cb_characteristic(derivative_upto(tw, parse_ordinal(beta))))

# a realization has exactly p points left after alpha derivatives
alpha = parse_ordinal("w*2+1")
k = realize(alpha, 4, Interval(Fraction(-3), Fraction(5, 2)))
print("realize(w*2+1, 4)    :", cb_characteristic(k))
print("alpha-th derivative  :", [str(q) for q in points(derivative_upto(k, alpha), 1).points])

print()
print(points(t1, 3).to_csv(), end="")
