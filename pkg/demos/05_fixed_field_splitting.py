"""The fixed field behind the construction, made computable.

A matrix of order m generates a cyclic group of automorphisms of the
rational function field; the invariant functions again form a rational
field, generated by a single function z of degree m (the trace, norm, or
second power sum of the images of x - whichever first comes out
nondegenerate).

z organizes the projective line into fibers: over a value t, each
irreducible factor of the fiber polynomial is a place, its degree is the
inertia degree f, its multiplicity the ramification index e, and always
sum(e * f) = m.  Orbits of the map are exactly the rational parts of
fibers, with uniform e * f = m / n.
"""

from agcyclic import (
    GF,
    INF,
    MobiusMap,
    fiber_decomposition,
    find_element_of_order,
    invariant_generator,
    splitting_report,
)

F5 = GF(5)
F7 = GF(7)

# Translations: the norm works (the trace collapses in odd characteristic).
shift = MobiusMap.from_string(F5, "1,1;0,1")
gen = invariant_generator(shift)
print(f"x -> x+1 over GF(5): z = {gen.z} (degree {gen.m}, via {gen.method})")
for t in [F5.zero, F5.one, INF]:
    fiber = fiber_decomposition(gen, t)
    pretty = ", ".join(f"{p} (e={e}, f={p.degree})" for p, e in fiber)
    print(f"    fiber over {t}: {pretty}")
print("    note the degree-5 places: values outside the image ramify nowhere,")
print("    they sit under a single place of full inertia degree.")
print()

# Scalings: z is a pure power.
omega = find_element_of_order(F7, 6)
gen6 = invariant_generator(MobiusMap.scaling(omega))
print(f"x -> {omega}x over GF(7): z = {gen6.z} (via {gen6.method})")
for t in [F7.zero, F7.one, INF]:
    fiber = fiber_decomposition(gen6, t)
    pretty = ", ".join(f"{p} (e={e})" for p, e in fiber)
    print(f"    fiber over {t}: {pretty}")
print("    the two fixed points 0 and inf are totally ramified (e = 6);")
print("    the orbit of 1 is the whole fiber over 1.")
print()

# The inversion: the norm is constant, the trace saves the day.
swap = MobiusMap.from_string(F5, "0,1;1,0")
gen2 = invariant_generator(swap)
print(f"x -> 1/x over GF(5): z = {gen2.z} (via {gen2.method})")
print()

# Splitting reports tie orbits to fibers.
report = splitting_report(MobiusMap.from_string(F7, "1,0;0,3"), F7.one)
print("orbit of 1 under x -> 3x over GF(7):",
      ", ".join(str(t) for t in report.orbit))
print("    common z-value:", report.value)
print("    fiber matches orbit:", report.fiber_matches_orbit,
      "| uniform e*f:", report.ramification_uniform)
print()

# Order q+1 maps have no rational fixed points; their z still has full degree
# and the whole projective line splits into fibers of size dividing q+1.
F4 = GF(2, 2)
wild = MobiusMap.from_string(F4, "1,1;b,0")
report = splitting_report(wild, F4.one)
print("order-5 map over GF(4): z =", report.generator.z)
print("    orbit:", ", ".join(str(t) for t in report.orbit))
print("    all checks pass:", report.all_ok)
