"""
Birational maps between del Pezzo fibrations
============================================

Each example is a fixture: two hypersurface models over a disc, a monomial
map, and optionally a divisor whose image is followed to the special fiber.
"""

from dp_rigidity.fibrations import EXAMPLES, load_examples, verify_example

examples = load_examples()
for name in EXAMPLES:
    spec = examples[name]
    for k in ((1, 2, 3) if spec.params else (None,)):
        params = {p: k for p in spec.params}
        r = verify_example(name, params)
        head = f"{name} {params or ''}".strip()
        print(f"{head}: map valid={r.map_valid}, t-power {r.t_power}")
        if r.local_equation:
            print(f"    image {r.transformed_divisor}; fiber: {r.fiber_configuration}")
            print(f"    local equation {r.local_equation}, lct {r.local_lct}, lc={r.is_lc}")
