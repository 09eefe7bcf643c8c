"""Energies and counting functions on the mixed-capacity trace, then the path rebuilt from them."""
from dncrystal import data_file
from dncrystal.automaton import reconstruct_path, rho_table
from dncrystal.crystal import format_path, parse_path
from dncrystal.energies import energy_report
from dncrystal.kinds import main_kinds

N = 4
p = parse_path(data_file("mixed_capacity.trace").read_text().splitlines()[0], N)[:9]
kinds = main_kinds(N)

rho = rho_table(p, kinds)
en = energy_report(p, kinds)
print("kind     k=1..9")
for g in kinds:
    same = "ok" if rho[g] == en[g] else "MISMATCH"
    print(f"{str(g):8s} {' '.join(f'{x:3d}' for x in rho[g][1:])}   {same}")

back = reconstruct_path([b.capacity for b in p], rho, N)
print()
print("original:", format_path(p))
print("rebuilt: ", format_path(back))
