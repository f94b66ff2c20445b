"""Join dimensions by interpolation on infinitesimal schemes.

The tangent space to a join at a general point is spanned by the tangent
spaces of the factors, so join dimensions reduce to h1 computations:
degree of the infinitesimal scheme, minus one, minus the superabundance.
"""

from veronese.construct import construct_conic_double, gamma_dims, terracini_dim

m, d = 2, 6
for t in (2, 3, 4):
    dim, _ = terracini_dim(m, d, "secant", t, seed=0)
    print(f"secant variety sigma_{t} at (m, d) = ({m}, {d}): dim {dim}")

dim, cert = terracini_dim(m, d, "tau", 3, seed=0)
print(f"\njoin of the tangent developable with sigma_1: dim {dim} = t(m+1) - 2")

dim, cert = terracini_dim(2, 7, "osculating2", 2, seed=0)
print(f"join of the second osculating variety with sigma_1 at d = 7: dim {dim}")

rep = gamma_dims(2, 6, 4, seed=0)
print(f"\nspecial families inside sigma_4 at (2, 6) (dim {rep['dim_sigma']}):")
for name, fam in rep["families"].items():
    if "dim" in fam:
        print(f"  {name}: dim {fam['dim']}, codim {fam['codim_in_sigma']}")

# A point lying in two different quasi-strata: two divisors of degree 6 on
# a conic whose spans at d = 5 meet in exactly one point.
A, B, P, cert = construct_conic_double(5, [6], [6], seed=0)
print(f"\nconic double point: border rank {cert.value}, all claims passed: {cert.all_passed}")
