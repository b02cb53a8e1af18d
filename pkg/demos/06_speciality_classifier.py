"""The asymptotic-speciality classifier, all three outcomes.

1. D = H on two points: no effective class of genus >= 1 is orthogonal to
   D, so all large multiples have vanishing h^1.
2. D = 10H - 3 sum(E_i) on ten points of a cubic: the anticanonical cubic
   lies in D-perp with genus exactly 1, which is the undecidable boundary
   case (parity of the restriction decides, not the lattice).
3. A big nef class orthogonal to a genus-2 curve: blow up the node and 13
   more points of a nodal quartic; the strict transform has C^2 = -1 and
   genus 2, and the orthogonal witness class is asymptotically special.
"""

from fatpoints import (
    BlowupContext, DivisorClass, OracleBudget, arithmetic_genus,
    classify_asymptotic, hyperplane, pair, sample_cubic_torsion,
    sample_nodal_quartic, speciality_witness,
)

print("1) D = H on Bl_2 P^2")
verdict = classify_asymptotic(hyperplane(BlowupContext(2, 2)), degree_bound=5)
print(f"   {verdict.tag.value}; genus bound {verdict.evidence.upper} on D-perp\n")

print("2) D = 10H - 3*sum(E) on ten points of a smooth cubic")
config = sample_cubic_torsion(65537, seed=1)
verdict = classify_asymptotic(
    DivisorClass(BlowupContext(2, 10), 10, (3,) * 10),
    degree_bound=5, budget=OracleBudget(config=config))
print(f"   {verdict.tag.value}; certified genus {verdict.evidence.lower} via "
      f"{verdict.evidence.witnesses[0].text()}\n")

print("3) witness orthogonal to a genus-2 negative class (nodal quartic, r = 14)")
ctx = BlowupContext(2, 14)
C = DivisorClass(ctx, 4, (2,) + (1,) * 13)
print(f"   C = {C.text()[:44]}..., C^2 = {pair(C, C)}, genus {arithmetic_genus(C)}")
D = speciality_witness(C, degree_bound=5)
print(f"   witness D = {D.text()[:44]}..., D^2 = {pair(D, D)}, D.C = {pair(D, C)}")
config = sample_nodal_quartic(65537, seed=3)
verdict = classify_asymptotic(D, degree_bound=5, budget=OracleBudget(config=config))
report = verdict.evidence.witness_reports[0]
print(f"   {verdict.tag.value}; witness genus {verdict.evidence.lower}")
print(f"   effectivity route: {report.route}")
print(f"   caveat: {report.caveat}")
