"""Three classical families, and the MDS parameter law.

Evaluating L(r*P_0 + s*P_inf) along the n-th roots of unity (the orbit of a
scaling of order n) gives cyclic codes meeting the Singleton bound: for
0 < r+s <= n-2 the dimension is r+s+1 and the exact minimum distance is
n-(r+s).  The Artin-Schreier variant evaluates along the roots of
x^p - x - a (the orbit of x -> x-1), giving cyclic codes of prime length.

The Frobenius-conjugate family is different in kind: its rotation comes from
a -> a^p, which moves constants.  The shift test is the only authority
there, and it genuinely fails outside the repetition/full-space regimes.
"""

from agcyclic import GF, artin_schreier_code, frobenius_code, roots_of_unity_code

print("roots-of-unity codes over GF(7), n = 6  (k = r+s+1, d = n-(r+s)):")
F7 = GF(7)
for r, s in ((1, 0), (1, 1), (2, 1), (2, 2)):
    code, report = roots_of_unity_code(F7, 6, r, s)
    d = code.min_distance()
    mds = "MDS" if code.is_mds() else "not MDS"
    print(f"    r={r}, s={s}: [{code.n},{code.dimension()},{d}] {mds}, "
          f"cyclic={report.code_cyclic}")
print()

print("the same law over GF(9), n = 8:")
F9 = GF(3, 2)
for r, s in ((1, 1), (3, 2), (2, 4)):
    code, _ = roots_of_unity_code(F9, 8, r, s)
    print(f"    r={r}, s={s}: [{code.n},{code.dimension()},{code.min_distance()}]")
print()

print("Artin-Schreier lengths are the characteristic:")
for q, (p, m) in ((9, (3, 2)), (8, (2, 3))):
    field = GF(p, m)
    code, report = artin_schreier_code(field, 1)
    print(f"    over GF({q}): [{code.n},{code.dimension()},{code.min_distance()}], "
          f"cyclic={report.code_cyclic}")
print()

print("Frobenius conjugates (semilinear rotation) - the honest verdicts:")
for p, m, r, s in ((2, 2, 1, 0), (2, 3, 1, 1), (2, 3, 1, 0)):
    code, report = frobenius_code(p, m, r, s)
    shape = "full space" if report.full_space else f"k={code.dimension()}"
    print(f"    GF({p**m}), r={r}, s={s}: length {code.n}, {shape}, "
          f"cyclic={report.code_cyclic}")
print()
print("the last line is the boundary: a [3,2] evaluation code over GF(8)")
print("whose rotation would need the row space to be Frobenius-stable, and")
print("it is not - the automorphism guarantee only covers maps that fix the")
print("constant field pointwise.")
