"""The Schensted leftover experiment and its unique small counterexample.

Each inversion-free filling contributes a straightened Schur term that is
zero, negative, or positive.  Keeping only the positive fillings whose
Schensted insertion shape matches the straightened shape reproduces the
whole expansion for every shape of weight up to 8 -- and fails, by exactly
one term, at (3,3,3).
"""

from quasischur import leftover_experiment, partitions_of

print("weight 6 sweep:")
for mu in partitions_of(6):
    report = leftover_experiment(mu)
    status = "exact" if report.discrepancy.is_zero() else str(report.discrepancy)
    print(
        f"  {str(tuple(mu)):15} fillings={report.filling_count:4} "
        f"kept={report.kept_count:4}  {status}"
    )

print()
report = leftover_experiment((3, 3, 3))
print("the counterexample shape (3,3,3):")
print(f"  fillings    : {report.filling_count}")
print(f"  zero/minus/plus: {report.zero_count}/{report.minus_count}/{report.plus_count}")
print(f"  kept        : {report.kept_count}")
print(f"  discrepancy : {report.discrepancy}")
