"""Certify a graph's measures and see the tamper detection catch a lie.

A certificate packages, per colour, a clique family together with two exact
rational measures: one on cliques witnessing the max-min vertex mass delta,
and one on vertices witnessing that the family cannot be packed below total
mass 1.  Third parties can re-check the whole thing without touching an LP
solver, which is what check_certificate does below.
"""

import json

from enabling import certify, check_certificate, two_colour_extremal

g = two_colour_extremal(3, 9)
res = certify(g, ((0, 3), (1, 9)))

print(f"graph on n={res.n} vertices, {res.r} colours")
for cert in res.certificates:
    print(
        f"  colour {cert.colour}: target {cert.k}, "
        f"delta={cert.delta}, alpha=1/delta={cert.alpha}, "
        f"family of {len(cert.family.cliques)} cliques"
    )
print(f"pairwise delta sums: {[str(p.delta_sum) for p in res.pairwise]}")
print(f"lower bound from the measures: {res.bound} (ceiling {res.bound_ceiling})")
print(f"graph order: {g.n}, so the certificate is tight here")

doc = res.to_json_dict()
print()
print(f"serialized certificate: {len(json.dumps(doc))} bytes of JSON")
issues = check_certificate(g, doc)
print(f"independent re-check: {'clean' if not issues else issues}")

# Overstate one delta and watch the re-check object.
doc_bad = json.loads(json.dumps(doc))
doc_bad["certificates"][0]["delta"] = {"num": "1", "den": "2"}
issues = check_certificate(g, doc_bad)
print()
print(f"after tampering with delta, {len(issues)} issue(s):")
for line in issues:
    print(f"  - {line}")
