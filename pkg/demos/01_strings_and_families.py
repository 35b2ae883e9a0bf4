"""Tour of the ternary-string algebra and family verification.

Strings over {0, 1, *} stand for boxes built from the intervals [-1, 0],
[0, 1] and [-1, 1]: the joker * marks a coordinate spanning the full
interval.  Two boxes are k-neighborly when their strings conflict (0
against 1) on one to k coordinates.
"""

from nbx import Family, parse, verify_neighborly

x = parse("01*")
y = parse("10*")
print(f"x = {x}, y = {y}")
print(f"  jokers(x) = {x.jokers}, non-joker coordinates = {sorted(x.prop_set())}")
print(f"  distance(x, y) = {x.distance(y)}   # coordinates with a 0/1 conflict")
print(f"  subcube of x = {[str(v) for v in x.subcube()]}")

a, b = parse("000"), parse("001")
print(f"\n{a} and {b} twins? {a.is_twin(b)} -> union {a.twin_union(b)}")

print("\nThe chain family in dimension 3:")
c3 = Family.of(["000", "001", "01*", "1**"])
report = verify_neighborly(c3, 1)
print(c3.to_nbx(), end="")
print(f"1-neighborly: {report.is_valid} "
      f"(pairwise distances in [{report.min_distance}, {report.max_distance}])")

print("\nA failing family:")
bad = Family.of(["00", "11"])
report = verify_neighborly(bad, 1)
print(f"{bad.texts()} at k=1 -> valid={report.is_valid}, violations={list(report.violations)}")
