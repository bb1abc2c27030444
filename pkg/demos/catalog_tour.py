"""
A tour of the constants catalog
===============================

Every catalog entry maps a named constant to a coefficient sequence, a
kernel family and a leading term.  Here we walk the whole registry,
evaluate each entry with its default series, and compare against the
independent reference the catalog keeps for it.
"""
from eulerseries import evaluate_constant, list_constants

# entries with an extra argument need a value for it
extras = {"b": 3, "t": 2, "word": "11"}

print(f"{'constant':24} {'method':9} {'value':>24} {'deviation':>10} {'est. tail':>10}")
for name, description, needs, _ in list_constants():
    kw = {k: extras[k] for k in needs}
    value, report = evaluate_constant(name, N=10**4, precision=20, **kw)
    final = report.final
    print(f"{name:24} {report.family.value:9} {str(value):>24} "
          f"{float(final.reference_error.to_fraction()):10.2e} {float(final.estimated_tail.to_fraction()):10.2e}")

# the B = 2 folded forms are the same series with a shifted coefficient
for name, kw in (("somos_t", {"t": 2, "method": "vacca"}), ("glaisher_logA", {}), ("catalan_over_pi", {})):
    plain, _ = evaluate_constant(name, N=5000, **kw)
    folded, _ = evaluate_constant(name, N=5000, folded=True, **kw)
    print(f"{name:16} general {plain}  folded {folded}")
