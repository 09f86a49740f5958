"""Local mirror symmetry of the canonical bundle of P^1 x P^1.

The classical pairing here needs an auxiliary six-class ring with a free
parameter k.  The parameter survives only in the affine (classical) part
of each series; mirror map and transformed coefficients are k-free, which
is exactly why the construction is well defined.
"""

from resmirror import build_generating_function, geometry, mirror_map, transform

D = 3

for k in (1, 7):
    s = build_generating_function(geometry("kf0", k=k), "z", "z", D)
    print("k=%d:  w(O_z O_z) = %s" % (k, s.pretty()))
print("quantum parts agree, affine parts scale with k\n")

g = geometry("kf0", k=1)
m = mirror_map(g, D)
print("mirror map (both components share one series):")
print("  t1 = %s" % m.forward[0].pretty())
print("  t2 = %s" % m.forward[1].pretty())

print("\ntransformed series, the local Gromov-Witten generating functions:")
for a, b in (("z", "z"), ("z", "w")):
    out = transform(build_generating_function(g, a, b, D), m)
    print("  (%s,%s): %s" % (a, b, out.pretty(names=("t1", "t2"))))

print("\nclassical-only insertion (z^2 vanishes in the true ring):")
s = build_generating_function(g, "1", "z2", D)
print("  w(O_1 O_{z^2}) = %s   (no quantum part, by construction)" % s.pretty())
