"""Why the LP relaxation alone is not enough for hard load caps.

Relaxing the 0/1 nomination variables to [0, 1] gives a linear program that
is easy to solve but may answer with fractions: "paper 1 nominates half of
author 1 and half of author 2" is not actionable.  This script exhibits an
instance whose relaxed optimum is a whole segment of solutions, fractional
ones included, and contrasts it with the flow solver's guaranteed-integral
answer of the same value.
"""

from deskrisk import Instance, build_hard_lp, solve_hard, solve_lp

# Two papers, two authors, everyone on everything, equal risk 1/6, cap 1.
instance = Instance.from_rows([[1, 2], [1, 2]], p=[1 / 6, 1 / 6])
lp, pair_vars = build_hard_lp(instance, b=1)

solution = solve_lp(lp)
print(f"relaxed optimum: {solution.objective:.6f} (= 1/3)")
print("solver returned:")
for (i, j), k in sorted(pair_vars.items()):
    print(f"  x[paper {i}, author {j}] = {solution.values[k] + 0.0:.3f}")

# Every point of the family x = [[t, 1-t], [1-t, t]] is feasible with the
# same objective, so the optimum is a segment; t = 0.5 is fully fractional.
print("\nthe whole family x = [[t, 1-t], [1-t, t]] is optimal:")
for t in (0.0, 0.5, 1.0):
    x = {**{(1, 1): t, (1, 2): 1 - t}, **{(2, 1): 1 - t, (2, 2): t}}
    value = sum(instance.p[j - 1] * v for (_, j), v in x.items())
    print(f"  t = {t:.1f}: objective {value:.6f}, integral = {t in (0.0, 1.0)}")

# The flow reduction sidesteps rounding entirely: integral data in, integral
# optimum out, same value.
assignment, report = solve_hard(instance, b=1)
print(f"\nflow solver: nominees {assignment.nominee}, objective {report.objective:.6f}")
assert abs(report.objective - solution.objective) <= 1e-7
