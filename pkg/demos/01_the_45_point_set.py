#!/usr/bin/env python3
"""The 45-point two-distance set, from explicit rational coordinates.

Nine simplex points -e_i + (1/3) sum(e_k) and thirty-six pair points
e_i + e_j live on the hyperplane sum(x) = 2 in R^9 (affine dimension 8).
Everything below is exact: distances come out as the fractions 2 and 4
when squared, never as floats.
"""

from collections import Counter
from fractions import Fraction

from twodist.geometry import (
    centroid,
    configuration_distance_classes,
    lisonek_coordinates,
    origin_norm_sq,
    squared_distance,
)

config = lisonek_coordinates()
points = config.all_points
print(f"points: {len(points)}  (= C(10, 2), the two-distance maximum in R^8)")
print(f"first simplex point: {config.simplex_points[0]}")
print(f"first pair point:    {config.block_points[0]}  from pair {config.blocks[0]}")

# the full multiset of squared distances
counter = Counter()
for i in range(len(points)):
    for j in range(i + 1, len(points)):
        counter[squared_distance(points[i], points[j])] += 1
print("\nsquared distance multiset:")
for value, count in sorted(counter.items()):
    print(f"  {value}: {count} pairs")
assert set(counter) == {Fraction(2), Fraction(4)}

# distances organized by pair class: the two-distance structure is visible
classes = configuration_distance_classes(config)
print("\nsquared distance per pair class:")
for name, value in classes.items():
    print(f"  {name:10s} {value}")

# two concentric spheres about the origin ...
print("\norigin radius^2:",
      {origin_norm_sq(p) for p in config.simplex_points},
      {origin_norm_sq(p) for p in config.block_points})
# ... and two concentric spheres about the common centroid
c = centroid(points)
print("centroid:", c[0], "* (1,...,1)")
print("centroid radius^2:",
      {squared_distance(p, c) for p in config.simplex_points},
      {squared_distance(p, c) for p in config.block_points})
print("\nthe centroid radii squared (8/9, 14/9) are exactly R1^2 and R2^2")
print("of the abstract embedding that demo 02 rebuilds from the design alone")
