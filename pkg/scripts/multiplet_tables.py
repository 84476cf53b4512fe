"""Print the bosonic three-mode multiplets as triangles on the t3-y plane.

Each n-photon multiplet is the triangular (n, 0) pattern; rows share a
hypercharge value y and run left to right in t3.  Also walks one state
around a triangle with the ladder operators to show the moves they make.
"""

import sys

import numpy as np

from fewphoton import enumerate_multiplet, su3_generators, t3_y_label


def print_triangle(n: int):
    rows = enumerate_multiplet(n)
    print(f"\n(n,0) = ({n},0) multiplet, {len(rows)} states:")
    current_y = None
    line = []
    for occ, lab in rows:
        if lab.y != current_y:
            if line:
                print("   " + "   ".join(line))
            current_y = lab.y
            line = [f"y={str(lab.y):>5}:"]
        line.append(f"|{occ[0]}{occ[1]}{occ[2]}> t3={str(lab.t3)}")
    if line:
        print("   " + "   ".join(line))


def ladder_walk(n: int):
    g = su3_generators(n)
    index = {occ: i for i, occ in enumerate(g.basis)}
    start = (n, 0, 0)
    print(f"\nladder walk from |{start[0]}{start[1]}{start[2]}>:")
    state = start
    for name in ("t_minus", "u_plus", "v_minus"):
        mat = getattr(g, name)
        col = index[state]
        hits = [(row, mat[row, col]) for row in range(len(g.basis)) if abs(mat[row, col]) > 1e-12]
        if not hits:
            print(f"  {name}: annihilates |{state[0]}{state[1]}{state[2]}>")
            continue
        row, amp = hits[0]
        nxt = g.basis[row]
        src, dst = t3_y_label(state), t3_y_label(nxt)
        print(f"  {name}: |{state[0]}{state[1]}{state[2]}> -> |{nxt[0]}{nxt[1]}{nxt[2]}>"
              f"  (t3: {src.t3} -> {dst.t3}, y: {src.y} -> {dst.y}, amp {amp:.4f})")
        state = nxt


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for n in range(1, n_max + 1):
        print_triangle(n)
    ladder_walk(2)
    g = su3_generators(2)
    comm = g.t_plus @ g.t_minus - g.t_minus @ g.t_plus
    print(f"\n[T+, T-] = 2 T3 check: max deviation {np.max(np.abs(comm - 2 * g.t3)):.2e}")


if __name__ == "__main__":
    main()
