"""Tour of the special-function layer.

Principal logarithm, dilogarithm with its cut, the Rogers dilogarithm and
its functional equations, simplex volumes, and the branch-decorated lift.
"""

import cmath
import math

from extbloch import CutSide, chi_hat, lhat, li2, plog, rogers, rogers_real, vol
from extbloch.dilog import PI2_6, TWO_PI_SQ, lifted_rogers

print("= principal logarithm =")
print("plog(-1)      =", plog(-1))          # +i pi, by convention
print("plog(e*1j)    =", plog(math.e * 1j))

print()
print("= dilogarithm =")
print("li2(1)   =", li2(1), "   (pi^2/6 =", math.pi ** 2 / 6, ")")
print("li2(1/2) =", li2(0.5))
print("li2(2.5) needs a side flag on the cut:")
print("  above:", li2(2.5, CutSide.ABOVE))
print("  below:", li2(2.5, CutSide.BELOW))

print()
print("= Rogers dilogarithm =")
print("rogers(1/2)          =", rogers(0.5), "  (-pi^2/12)")
x = 0.3
print("reflection residual  =", rogers(x) + rogers(1 - x) + PI2_6)
x, y = 0.5, 0.25
tup = (x, y, y / x, (1 - 1 / x) / (1 - 1 / y), (1 - x) / (1 - y))
s = sum((-1) ** i * rogers_real(v) for i, v in enumerate(tup))
print("five-term residual   =", s, " on", tup)

print()
print("= ideal simplex volume =")
w = cmath.exp(1j * math.pi / 3)
print("vol at the regular simplex parameter:", vol(w))
print("conjugation flips orientation:       ", vol(w.conjugate()))
print("flat (real) parameters have volume 0:", vol(0.5))

print()
print("= the lifted Rogers function =")
z = 2 + 1j
for (p, q) in ((0, 0), (2, 0), (0, 2)):
    print(f"  lifted_rogers(z; {p}, {q}) =", lifted_rogers(z, p, q))
print("different branch decorations are different covering points, and the")
print("value genuinely depends on them (that is the extra information):")
bump = lifted_rogers(z, 0, 2) - lifted_rogers(z, 0, 0)
print("  the q-bump equals pi*i*Log(z):", bump, "=", 1j * math.pi * plog(z))

print()
print("= rational torsion detection =")
from fractions import Fraction
for r in (Fraction(1, 4), Fraction(1, 3), Fraction(5, 12)):
    e = chi_hat(r)
    val = -sum(c * lhat(pt) for c, pt in e) / TWO_PI_SQ
    print(f"  two-term element at r={r}: value mod 1 = {val.real % 1.0:.12f}")
