"""Random tournament models and what they say about counts.

In T(n, alpha) the expected labelled count of H is (n)_h * p_H(alpha).
Here we sample, count exactly, and compare; then look at triangle-model
tournaments built from the Fano plane.
"""

import math
from fractions import Fraction

import numpy as np

from tourforce import Tournament, count_embeddings, counting_polynomial, rescaled_q
from tourforce.designs import steiner_triple_system
from tourforce.generators import sample_cliq, sample_triangle_tournament
from tourforce.poly import RationalPolynomial
from tourforce.tournament import degree_imbalance_sum, falling_factorial

C3 = Tournament.cyclic_triangle()
alpha, n = Fraction(7, 10), 12

counts = np.array([count_embeddings(sample_cliq(n, alpha, s), C3).value for s in range(500)])
expected = falling_factorial(n, 3) * counting_polynomial(C3)(alpha)
se = counts.std(ddof=1) / math.sqrt(len(counts))
print(f"C3 in T({n}, {alpha}): sample mean {counts.mean():.1f} +- {se:.1f}, exact expectation {expected} = {float(expected):.1f}")

imb = [degree_imbalance_sum(sample_cliq(15, Fraction(1, 2), s)) for s in range(2000)]
print(f"T(15, 1/2): {sum(v > 210 for v in imb)} of 2000 samples have imbalance sum above 210")

fano = steiner_triple_system(7)
H = sample_triangle_tournament(fano, 42)
x = RationalPolynomial.x()
quotient, rest = divmod(rescaled_q(H), (1 - x * x) ** 7)
print(f"Fano sample {H.code}: out-degrees {H.out_degrees()}")
print(f"  q_H = (1 - x^2)^7 * ({quotient.to_text()}), remainder zero: {rest.is_zero()}")
