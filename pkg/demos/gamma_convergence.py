"""
How fast do the digit series for Euler's constant converge?
===========================================================

Euler's constant can be written as a sum over k of a digit-counting
coefficient times a small rational kernel.  The plain (Vacca) kernel gives
an error of order log N / N; the averaged (Addison) kernel gains a factor
of N.  This script sums both side by side and prints the error at a few
checkpoints next to the tail estimate the engine reports.
"""
from eulerseries import evaluate_constant
from eulerseries.oracles import literal

marks = [10, 100, 1000, 10**4, 10**5]
exact = literal("euler_gamma", 30).to_fraction()

# one run per method; the checkpoints are recorded on the way
for method in ("vacca", "complement", "addison"):
    value, report = evaluate_constant("gamma", N=marks[-1], precision=25, method=method,
                                      checkpoints=marks, reference=False)
    print(f"\n{method}")
    print(f"{'terms':>8} {'error':>12} {'est. tail':>12}")
    for c in report.checkpoints:
        err = abs(c.partial.to_fraction() - exact)
        print(f"{c.terms:>8} {float(err):12.3e} {float(c.estimated_tail.to_fraction()):12.3e}")

# the base is a free parameter: B = 3 and B = 10 land on the same constant
for B in (3, 10):
    value, _ = evaluate_constant("gamma", B=B, N=10**4, precision=15, reference=False)
    print(f"\nB = {B:2d}: {value}")
