# The Petersen graph under all 2^15 edge signings: every signing is
# geodetic hence compatible, and exactly six distance characteristic
# polynomials occur, one per switching isomorphism type.

import numpy as np

import sgdist as sg

p = sg.petersen_graph()
preds = sg.structural_predicates(p)
print("Petersen:", preds)
assert preds.is_geodetic  # unique shortest paths make every signing compatible

# The all-positive and all-negative signings have closed-form distance
# matrices and integral spectra.
j, i = np.ones((10, 10), dtype=np.int64), np.eye(10, dtype=np.int64)
assert np.array_equal(sg.distance_matrix(p), 2 * j - 2 * i - sg.adjacency_matrix(p))
pminus = sg.petersen_graph(-1)
assert np.array_equal(sg.distance_matrix(pminus), 2 * j - 2 * i + 3 * sg.adjacency_matrix(pminus))
print("spectrum(+P):", sg.eig_symmetric(sg.distance_matrix(p)))
print("spectrum(-P):", sg.eig_symmetric(sg.distance_matrix(pminus)))

# Census of all 32768 signings, grouped by exact characteristic polynomial.
table = sg.enumerate_petersen_signings()
print(f"{table.total} signings fall into {len(table.classes)} classes:")
for c in table.classes:
    negs = sum(1 for *_, s in c.representative.edges if s < 0)
    print(f"  {c.label:5s} size {c.size:6d} minimal negatives {negs}  {c.char_poly}")

# Class membership is a switching invariant: conjugating the distance
# matrix by any vertex signing preserves the polynomial.
rep = table.by_label("P2,3").representative
switched = sg.switch(rep, [1, -1, 1, 1, -1, 1, -1, 1, 1, -1])
assert sg.char_poly(sg.distance_matrix(switched)).coeffs == table.by_label("P2,3").char_poly.coeffs

# Only the all-positive and all-negative classes have integral spectra.
for c in table.classes:
    spec = sg.eig_symmetric(sg.distance_matrix(c.representative))
    integral = all(abs(v - round(v)) < 1e-6 for v, _ in spec.entries)
    print(f"  {c.label:5s} integral spectrum: {integral}")
