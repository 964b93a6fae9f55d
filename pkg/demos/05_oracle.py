# The ordinal-space oracle: first validated by brute force, then used to
# cross-check the structural derivative engine.
from cbrank import Interval, realize
from cbrank.notation import parse_ordinal
from cbrank.oracle import OrdinalSpace, brute_force_derivatives, cross_check, member_after, survivor_count, validate_closed_form

elements, stages = brute_force_derivatives(2, 1, width=5)
print("truncated [0, w^2]:", len(elements), "elements;", "stage sizes", [len(s) for s in stages])
print("closed form vs brute force mismatches:", len(validate_closed_form()))

space = OrdinalSpace(2, 3)
print("w^2*2 survives 2 derivatives:", member_after(space, parse_ordinal("w^2*2"), 2))
print("w*5 survives 2 derivatives  :", member_after(space, parse_ordinal("w*5"), 2))
print("survivors of 1 / 2 / 3 derivatives:", [survivor_count(space, b) for b in (1, 2, 3)])

for text in ["3", "w+1", "w^2+w*3+1", "w^w"]:
    result = cross_check(realize(parse_ordinal(text), 2, Interval(0, 1)), 4)
    print(f"engine vs oracle, alpha={text:10} checks={result.checks:5}  agree={result.ok}")
