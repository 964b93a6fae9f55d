# Ordinal arithmetic below epsilon_0 in Cantor normal form.
from cbrank import parse_ordinal, print_ordinal, add, mul, left_subtract, compare
from cbrank.ordinal import OMEGA, fundamental_sequence, divides_omega_pow

w = OMEGA
print("1 + w     =", add(1, w))           # the 1 is absorbed
print("w + 1     =", add(w, 1))
print("2 * w     =", mul(2, w))
print("w * 2     =", mul(w, 2))

a = parse_ordinal("w^(w*2)*3 + w + 4")
print("parsed    :", a, "  terms:", [(str(e), c) for e, c in a.terms])

# left subtraction solves b + x = a
b, target = parse_ordinal("w^2+w"), parse_ordinal("w^2+w*4")
x = left_subtract(b, target)
print(f"({b}) + x = {target}  ->  x = {x}")

# fundamental sequences climb to a limit
lam = parse_ordinal("w^w")
print("w^w [n]   :", [print_ordinal(fundamental_sequence(lam, n)) for n in range(5)])

print("w^2 | w^3*2 + w^2*5 :", divides_omega_pow(2, parse_ordinal("w^3*2+w^2*5")))
print("w^2 | w^2 + w       :", divides_omega_pow(2, parse_ordinal("w^2+w")))
print("compare(w^2+w, w^2+5):", compare(parse_ordinal("w^2+w"), parse_ordinal("w^2+5")).name)
