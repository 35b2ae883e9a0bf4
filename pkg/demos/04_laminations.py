"""Partitions, signed sums, laminations, and twin-merge reduction.

A partition is a family of pairwise disjoint subcubes covering the whole
cube (volumes summing to 2^d).  Every at-most-2-neighborly partition
splits coordinate by coordinate all the way down (a total lamination),
and can be merged twin by twin into the all-joker string.
"""

from nbx import (
    Family,
    is_lamination,
    is_partition,
    is_total_lamination,
    reduce_to_trivial,
    sgn_sum,
    volume,
)

F = Family.of(["001", "101", "*11", "**0"])
G = Family.of(["0*1", "1*1", "*00", "*10"])

for name, fam in (("F", F), ("G", G)):
    print(f"{name} = {fam.texts()}")
    print(f"  volume {volume(fam)} = 2^{fam.dimension}: partition {is_partition(fam)}")
    print(f"  splits at coordinate {is_lamination(fam)}; total lamination: "
          f"{is_total_lamination(fam)}")
    print(f"  signed sum over the least-joker layer: {sgn_sum(fam)}")

print("\nTwin-merge reduction of the chain family:")
for step in reduce_to_trivial(Family.of(["000", "001", "01*", "1**"])):
    print(f"  {step.texts()}")

print("\nA partition that is NOT a lamination (no common split coordinate):")
pinwheel = Family.of(["*00", "01*", "1*1", "001", "110"])
print(f"  {pinwheel.texts()}")
print(f"  partition: {is_partition(pinwheel)}, lamination: {is_lamination(pinwheel)}, "
      f"total: {is_total_lamination(pinwheel)}")
print(f"  signed sum still vanishes: {sgn_sum(pinwheel)}")
print("  (its distances reach 3, so the twin-merge guarantee does not apply)")
