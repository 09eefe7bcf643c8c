"""Tau functions of a rigged configuration against energies of its path, before and after the flow."""
from dncrystal import data_file
from dncrystal.automaton import evolve
from dncrystal.rigged import check_conjecture, conjecture_sides, linear_flow, parse_pair, regime

p, rc = parse_pair(data_file("mixed_capacity.pair").read_text())
print("regime:", regime(rc))

sides, phi = conjecture_sides(p, rc)
for d, (ta, rh) in sides.items():
    print(f"d={d}  tau {ta[1:10]}")
    print(f"      rhs {rh[1:10]}")
print("phi0", phi[1:10])

rep = check_conjecture(p, rc)
for note in rep.notes:
    print("note:", note)
print(f"{len(rep.rows)} equalities, {len(rep.failures())} failures")

# one step by hand, on a path long enough for the carrier to empty out
q, _ = evolve(p, 1)
s = linear_flow(rc, 1)
print("first k after T_1:", conjecture_sides(q, s)[0][0][0][:5])
