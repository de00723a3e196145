"""Straightening composition-indexed Schur functions.

A Schur function indexed by a weak composition is either zero or plus/minus
a partition-indexed Schur function.  The closed form reads this off from the
shifted exponent vector; the determinant ratio confirms it the long way.
"""

from quasischur import schur_bialternant, schur_ssyt, straighten

for gamma in [(3, 1), (1, 3), (1, 2), (0, 2, 4), (2, 3, 2, 1, 0, 0, 0, 0)]:
    print(f"s_{gamma} straightens to {straighten(gamma)}")

print()
print("Checking (1,3) against the bialternant ratio in 2 variables:")
normal = straighten((1, 3))
print("  ratio      :", schur_bialternant((1, 3)))
print("  ssyt oracle:", schur_ssyt(normal.shape, 2).scalar_mul(normal.sign))
