"""Closed-form limit disc against a 400-step simulation, and a limit-point word for contrast."""

from limitdisc import WordSpec, classify_word, ghk, iterate_orbit, limit_disc_exact

F = ghk()
for period in (["g", "h"], ["h", "k", "g"], ["g", "g"], ["k", "h"]):
    w = WordSpec.from_names(F, [], period)
    verdict = classify_word(F, w).verdict.value
    final = iterate_orbit(F, w, 400).discs[-1]
    line = f"period {''.join(period):4s} {verdict:12s} simulated radius {final.radius:.3e}"
    if verdict == "limit-disc":
        exact = limit_disc_exact(F, w)
        line += (f"   exact disc({exact.full_disc.center.real:.6f}, r={exact.full_disc.radius:.6f}),"
                 f" |error| {abs(exact.full_disc.radius - final.radius):.1e}")
    print(line)

print("\nAlong (g,h) every F_n(D) touches the circle at z0 = 1. The discs stop")
print("shrinking because the running products of gamma along the word have a finite sum.")
