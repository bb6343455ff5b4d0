#!/usr/bin/env python3
"""Two independent routes to the normalized Laplacian spectrum of a blowup.

Route 1 eigendecomposes the explicitly constructed graph. Route 2 never
builds the graph: eigenvalue 0 persists, every other base eigenvalue except
2 is divided by n-1, the value 2/(n-1) enters with multiplicity E-N (plus
one when the base graph is bipartite), and n/(n-1) enters with multiplicity
(n-3)E+N. The two must agree to floating-point accuracy.
"""

from fractions import Fraction

from clique_blowup import (
    BlowupParams,
    SpectrumMultiset,
    bipartition,
    blowup_iterate,
    gen_family,
    laplacian_spectrum,
    multiset_match,
    spectrum_by_theorem,
    spectrum_iterated,
)

square = gen_family("cycle", 4)
sigma = laplacian_spectrum(square)
print("spectrum of the 4-cycle (bipartite, so symmetric about 1 with top value 2):")
for value, mult in sigma.entries:
    print(f"  {float(value):.6f}  x{mult}")

n = 3
blown = blowup_iterate(square, BlowupParams(n, 1))
numeric = laplacian_spectrum(blown)
mapped = spectrum_by_theorem(sigma, 4, 4, n, bipartition(square).is_bipartite)

print(f"\nblowup with n={n}: {blown.vertex_count} vertices")
print("eigensolver route:   ", [(round(float(v), 6), m) for v, m in numeric.entries])
print("mapping route:       ", [(round(float(v), 6), m) for v, m in mapped.entries])
print("verdict:", multiset_match(mapped, numeric, 1e-7).detail)

# with exact rational input the mapping stays exact at every level
exact_sigma = SpectrumMultiset(((Fraction(0), 1), (Fraction(1), 2), (Fraction(2), 1)))
exact_two_levels = spectrum_iterated(exact_sigma, 4, 4, BlowupParams(3, 2), bipartite=True)
print("\ntwo exact mapping levels (r=2):")
for value, mult in exact_two_levels.entries:
    print(f"  {str(value):>5}  x{mult}")

deep = blowup_iterate(square, BlowupParams(3, 2))
print("against the eigensolver on the explicit 20-vertex graph:")
print("verdict:", multiset_match(exact_two_levels, laplacian_spectrum(deep), 1e-7).detail)

# spectra serialize to a deterministic JSON document
print("\nJSON form of the mapped spectrum:")
print(mapped.to_json())
