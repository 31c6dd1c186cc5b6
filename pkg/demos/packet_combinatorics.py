"""The combinatorial layer: packets, inner forms, and predicate disjointness.

The two-element packet comes out of a double-coset count in the type-D
signed-permutation group; the explorer then checks that the model-level
supports of the two members never overlap on a target grid.
"""

from hypbranch import arthur_packet, conjecture_explore, pure_inner_forms, relevant_pairs
from hypbranch.numerics import HalfInt
from hypbranch.packets import RealForm, WeylGroup, double_cosets, double_cosets_brute

H = HalfInt.from_twice

print("== double cosets behind the packet size ==")
for p, q in ((4, 4), (4, 6), (6, 6)):
    m = (p + q) // 2
    left = (WeylGroup("D", p // 2), WeylGroup("D", q // 2))
    mid, right = WeylGroup("D", m), WeylGroup("D", m - 1)
    fast = double_cosets(left, mid, right)
    brute = double_cosets_brute(left, mid, right)
    print(
        f"  (p, q) = ({p}, {q}):  orbit count = {fast.count}  "
        f"(brute force over all {mid.order()} elements: {brute});  "
        f"coset space size = {fast.coset_space_size}"
    )

print()
print("== the packet at (4, 4) ==")
packet = arthur_packet(4, 4, HalfInt(2))
for member in packet["members"]:
    print(f"  {member['tag']:>2}: levi {member['levi']}, lives in {member['discrete_spectrum_of']}")

print()
print("== pure inner forms and relevant pairs of SO(3,3) ==")
form = RealForm(3, 3)
print(f"  inner forms: {[(f.p_sig, f.q_sig) for f in pure_inner_forms(form)]}")
for sub, amb in relevant_pairs(form, "drop_p"):
    print(f"  relevant pair: SO{(sub.p_sig, sub.q_sig)} inside SO{(amb.p_sig, amb.q_sig)}")

print()
print("== disjointness of the two member supports (model-level predicates) ==")
grid = [H(t) for t in range(1, 16)]
for subgroup in ("g1", "g2"):
    report = conjecture_explore(4, 4, HalfInt(2), subgroup, grid)
    print(
        f"  {subgroup}: support_s = {[str(t) for t in report.support_s]}, "
        f"support_as = {[str(t) for t in report.support_as]}, disjoint = {report.disjoint}"
    )
