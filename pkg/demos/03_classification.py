# Homeomorphism classification through ordinal addresses.
from cbrank import Interval, equivalent, homeo_map, ordinal_of_point, point_of_ordinal, points, realize, tau_of
from cbrank.notation import parse_ordinal

alpha = parse_ordinal("w+1")
k1 = realize(alpha, 3, Interval(0, 1))
k2 = realize(alpha, 3, Interval(-5, 2))

print("tau(k1)            :", tau_of(k1))
print("k1 ~ k2            :", equivalent(k1, k2))
print("k1 ~ realize(w+1,2):", equivalent(k1, realize(alpha, 2, Interval(0, 1))))

print("\naddresses of a few points of k1:")
for q in points(k1, 2).points:
    print(f"  {str(q):>8}  ->  {ordinal_of_point(k1, q)}")

print("\npoint at address w^(w+1)*2 in k2:", point_of_ordinal(k2, parse_ordinal("w^(w+1)*2")))

h = homeo_map(k1, k2)
print("\nhomeomorphism k1 -> k2 on depth-2 points:")
for q in points(k1, 2).points:
    print(f"  {str(q):>8}  ->  {h(q)}")
