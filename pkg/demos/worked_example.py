"""The three-generator example {g, h, k} end to end.

g(z) = (1/2)/(3/2 + z), h(z) = (1/2)/(-3/2 + z), k(z) = (-1/2)/(-3/2 + z).
Each maps the unit disc onto a disc touching the unit circle at one point.
"""

from limitdisc import build_tangency_graph, dim_upper_bound, ghk, spectral_radius

F = ghk()
print("Each generator sends the circle point alpha to the circle point beta,")
print("and gamma = 1/|f'(alpha)| measures how hard it pushes into the disc there.\n")
for name, f, d in F:
    print(f"  {name}: alpha = {d.alpha.real:+.0f}  beta = {d.beta.real:+.0f}  gamma = {d.gamma:.3f}"
          f"  image = disc({d.image.center.real:.2f}, r={d.image.radius:.2f})")

G = build_tangency_graph(F)
print("\nf -> f' is an edge when f' touches the circle at alpha_f (beta_f' = alpha_f):")
print("  " + ", ".join(f"{a}->{b}" for a, b in G.edges()))
rho = spectral_radius(G)
print(f"\nLimit-disc words are eventually walks in this graph; it has spectral radius {rho:.12f},")
print("the golden ratio.")

rep = dim_upper_bound(F, G)
print("\nEvery gamma is below one, so the dimension of the set of limit-disc words is")
print(f"log(rho)/log(3) = {rep.value:.10f}   [{rep.method.value}]")
