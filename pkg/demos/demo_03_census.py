"""
Census of every self-map on small spaces
========================================

Classify all n**n maps of a space and count how the three classes overlap.
Banach maps always land in the path-averaged class; the converse fails.
"""

from pacontract import GeneratorSpec, census, make_space

specs = [
    GeneratorSpec(3, "discrete"),
    GeneratorSpec(4, "discrete"),
    GeneratorSpec(4, "power_metric", p=2.0),
    GeneratorSpec(5, "random_perturbed", p=2.0, seed=7),
]

for spec in specs:
    space = make_space(spec)
    rep = census(space)
    c = rep.counts
    print(f"{spec.kind:17s} n={spec.n} s={space.s:.4f}: {rep.total} maps")
    print(f"   banach={c['banach']} kannan={c['kannan']} pa={c['pa']}")
    print(f"   pa_not_banach={c['pa_not_banach']} (e.g. {rep.witnesses.get('pa_not_banach')})"
          f"  banach_not_pa={c['banach_not_pa']}")
    print(f"   pa_not_kannan={c['pa_not_kannan']}  kannan_not_pa={c['kannan_not_pa']}")
    # the uniqueness argument needs only alpha < 1, not s * alpha < 1
    print(f"   PA maps with s*alpha_min >= 1: {rep.pa_without_s_alpha}, "
          f"of which unique fixed point: {rep.unique_without_s_alpha}")
    print(f"   theorem violations: {len(rep.theorem_violations)}")
