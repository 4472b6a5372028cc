"""Dimension of the limit-disc set when all generators share a fixed point.

The tangency graph is then complete and the dimension is the minimum over
s >= 0 of log(sum gamma^-s) / log(#generators).
"""

import math

from limitdisc import GeneratorSet, build_tangency_graph, dim_theorem4, make_tangent_generator


def pair(big, small):
    return GeneratorSet([("a", make_tangent_generator(big, 1.0, 1.0)),
                         ("b", make_tangent_generator(small, 2.0, 1.0))])


F = pair(4.0, 0.5)
rep = dim_theorem4(F, build_tangency_graph(F))
print(f"gammas 4 and 1/2: dim = {rep.value:.12f} at s* = {rep.s_star:.12f}")
print(f"   closed form log2(3) - 2/3 = {math.log2(3) - 2 / 3:.12f}")
for c in (2.0, 5.0, 10.0):
    F = pair(c, 1 / c)
    print(f"gammas {c:g} and 1/{c:g}: dim = {dim_theorem4(F, build_tangency_graph(F)).value:.12f}")
