"""Where do the points F_n(x) go along the limit-disc word (g,h)?

Interior points all converge to one boundary point q of the limit disc.
The point x = 1 is exceptional: it is fixed by every F_{2m}, so it sits at
z0 = 1 on the even steps instead of approaching q.
"""

from limitdisc import WordSpec, ghk, pointwise_convergence

F = ghk()
w = WordSpec.from_names(F, [], ["g", "h"])
rep = pointwise_convergence(F, w, 300, [0j, 0.5 + 0.5j, -0.9, 0.8j, 1.0])
print(f"q = {rep.q.real:.12f}{rep.q.imag:+.1e}i\n")
for p in rep.per_point:
    x = complex(p.point)
    status = "converges to q" if p.converged and p.distance_to_q < 1e-9 else "no limit"
    extra = f", equals z0 at n = {p.witness[:4]}..." if p.witness else ""
    print(f"  x = {x.real:+.2f}{x.imag:+.2f}i: {status}{extra}")
