# Primitives: a compact set whose alpha-th derivative is a given finite set.
from fractions import Fraction

from cbrank import cb_characteristic, derivative_upto, isolated_points, points, primitive_of
from cbrank.notation import parse_ordinal

F = [Fraction(0), Fraction(1, 3), Fraction(2)]
for cert in isolated_points(F):
    print(f"x_{cert.index} = {cert.point}, radius {cert.radius}, certificate ok: {cert.verify(F)}")

for text in ["1", "3", "w", "w^2+1"]:
    alpha = parse_ordinal(text)
    g = primitive_of(F, alpha)
    back = points(derivative_upto(g, alpha), 4).points
    print(f"alpha = {text:6} CB(G) = {cb_characteristic(g)!s:12} G^(alpha) = {[str(q) for q in back]}")
