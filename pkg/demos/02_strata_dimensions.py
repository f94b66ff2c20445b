"""The combinatorial skeleton: partition labels, dominance, dimensions.

A curvilinear scheme of degree t is labelled by the partition of t into its
connected component degrees.  Each label names a stratum with a closed
dimension formula, and the union of spans over a stratum has its own.
"""

from veronese.strata import (
    StratumLabel,
    closure_relation,
    dominance_compare,
    hilb_stratum_dim,
    partitions_enumerate,
    sigma_stratum_dim,
    stratification_report,
)

m, d, t = 2, 9, 4
print(f"labels for t = {t} (descending lex):")
for lab in partitions_enumerate(t):
    print(
        f"  {str(lab):10s} scheme family dim {hilb_stratum_dim(m, lab):2d}   "
        f"span union dim {sigma_stratum_dim(m, lab):2d}"
    )

print("\ndominance comparisons:")
pairs = [((2, 1, 1), (2, 2)), ((2, 2), (3, 1)), ((3, 1, 1, 1), (2, 2, 2))]
for a, b in pairs:
    rel = dominance_compare(StratumLabel.make(a), StratumLabel.make(b))
    print(f"  {a} vs {b}: {rel}")

print("\nproven degenerations (everything else reported unknown):")
for a, b in [((2, 1, 1, 1), (3, 2)), ((3, 1, 1), (4, 1)), ((2, 2, 1), (3, 2))]:
    fact = closure_relation(StratumLabel.make(a), StratumLabel.make(b))
    print(f"  stratum {b} inside closure of {a}? {fact.status} ({fact.rule})")

rep = stratification_report(m, d, t)
print(f"\nreport at (m, d, t) = ({m}, {d}, {t}):")
print(f"  true stratification (2t <= d+1): {rep['true_stratification']}")
print(f"  uniqueness regime (t <= (d-1)/2): {rep['uniqueness_regime']}")
print(f"  codimension-1 strata in the curvilinear locus: {rep['codim1_strata_in_dagger']}")
