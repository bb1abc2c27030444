"""
Three independent ways to the same number
=========================================

The series engines are checked against oracles that share no code with
them: the defining series summed directly with a remainder correction, a
double-exponential quadrature of an integral representation, and closed
forms built from log Gamma and digamma.  For a few parameter sets we print
all of them with their error bounds.
"""
from fractions import Fraction

from eulerseries import SeriesParams
from eulerseries.oracles import QuadratureSpec, closed_form, definition_sum, quadrature

cases = {
    "gamma_{1,1}(1)": SeriesParams(1, 1, 0, 1),
    "gamma_{1,1}(-1)": SeriesParams(1, 1, 0, -1),
    "gamma_{2,1}(-1)": SeriesParams(2, 1, 0, -1),
    "gamma'_{2,1}(-1)": SeriesParams(2, 1, 1, -1),
    "gamma_{1,2}(1/2)": SeriesParams(1, 2, 0, Fraction(1, 2)),
}

for label, p in cases.items():
    print(f"\n{label}")
    print(f"  definition sum      {definition_sum(p, precision=15)}")
    for kind in ("DefinitionSingle", "CatalanType", "RamanujanType", "Averaged"):
        v = quadrature(QuadratureSpec(kind, p.with_base(2), 10))
        print(f"  {kind:19} {v}  (+- {float(v.error_bound):.1e})")

# two entries have closed forms in terms of Gamma values
print("\nclosed forms")
print(f"  gamma_{{2,1}}(-1) = {closed_form('Gamma21AtMinusOne', 20)}")
print(f"  gamma_{{1,1}}(1)  = {closed_form('GammaAB1', 20, a=1, b=1)}")
