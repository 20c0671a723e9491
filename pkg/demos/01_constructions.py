"""Tour of the four graph families and what makes each one tick.

Every graph here is a complete graph with coloured edges, and the point of
each construction is that every vertex sits inside a reasonably large
single-coloured clique of every colour, on as few vertices as possible.
"""

import json
import tempfile

from enabling import (
    multicolour_blocks,
    p4_blowup,
    prime_slope,
    two_colour_extremal,
    two_colour_lower,
    verify_enabling,
)
from enabling.cli import main as cli_main


def colour_census(g):
    counts = [0] * g.r
    for c in g.colours:
        counts[c] += 1
    return counts


print("== blown-up path ==")
g = p4_blowup(10)
print(f"n={g.n}, colours={g.r}, edge census={colour_census(g)}")
rep = verify_enabling(g, ((0, 2), (1, 2)))
print(f"every vertex in an edge of each colour: {rep.ok}")

print()
print("== two-colour extremal, targets (3, 9) ==")
g = two_colour_extremal(3, 9)
print(f"n={g.n}, lower bound n(3,9)={two_colour_lower(3, 9)}")
rep = verify_enabling(g, ((0, 3), (1, 9)))
print(f"verified at (3, 9): {rep.ok}  (the construction meets the bound exactly)")

print()
print("== block construction, 3 colours at level 4 ==")
g = multicolour_blocks(3, 4)
rep = verify_enabling(g, tuple((c, 4) for c in range(3)))
print(f"n={g.n} = 2*3*(4-1), verified: {rep.ok}")

print()
print("== slope construction over GF(5) ==")
g = prime_slope(5)
rep = verify_enabling(g, tuple((c, 5) for c in range(6)))
print(f"n={g.n} = 5^2 with {g.r} colours, verified: {rep.ok}")
print("each colour class is a parallel family of lines, so the colour")
print("classes partition the edges into 6 perfect matchings of 5-cliques")

print()
print("== DOT export through the command line ==")
g = p4_blowup(4)
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(g.to_json_dict(), fh)
    path = fh.name
cli_main(["export-dot", "--graph", path])
