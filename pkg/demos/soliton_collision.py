"""A fast soliton overtakes a slow one under T_inf. Lengths survive; the letters inside get reshuffled.

Run: python demos/soliton_collision.py
"""
from dncrystal.automaton import trace
from dncrystal.crystal import format_box, parse_path

N = 4
# length-4 soliton of 2s behind a length-2 soliton of 3s
boxes = ["1"] * 2 + ["2"] * 4 + ["1"] * 6 + ["3"] * 2 + ["1"] * 44
p = parse_path(" | ".join(boxes), N)

for t, row in enumerate(trace(p, 10).rows):
    cells = ["." if b.zeta[0] == 1 else format_box(b).replace("-", "~") for b in row]
    print(f"t={t:2d}  {''.join(cells)}")
