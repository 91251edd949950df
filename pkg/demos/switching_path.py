"""Walking from a random tournament to a transitive one.

Each step re-orients the edges at one vertex, so the count of any fixed
pattern moves by at most h * n^(h-1). We track the cyclic-triangle count
exactly and with a Monte Carlo estimate.
"""

from fractions import Fraction

from tourforce import Tournament, count_embeddings, mc_estimate_embeddings
from tourforce.generators import sample_cliq, switching_path

C3 = Tournament.cyclic_triangle()
n = 60
path = list(switching_path(sample_cliq(n, Fraction(1, 2), 60)))
print(f"step  exact  estimate  (bound per step {3 * n * n})")
for i, T in enumerate(path):
    if i % 5 and i != len(path) - 1:
        continue
    est = mc_estimate_embeddings(T, C3, samples=20000, seed=i)
    print(f"{i:4d}  {count_embeddings(T, C3).value:6d}  {float(est.estimate):8.0f} +- {est.std_error:.0f}")
