"""Print the exceptional-sphere invariant tables for a blown-up K3-type form.

    python scripts/reproduce_values.py --kmax 10
"""

import argparse

from gwzero import GWQuery, Manifold4, blow_up, eval_4, eval_6, moduli_dim, parse_form, pushforward, reduce_via_axioms, stabilize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=10)
    args = ap.parse_args()

    x = blow_up(Manifold4.create("K3", parse_form("3H+2E8-"), [0] * 22), "E")
    e = x.exceptional_class()
    s = stabilize(x)
    print(f"{x.name}: rank {x.rank}, signature {x.signature()}")
    print(f"{'k':>3} {'dim4':>5} {'GW4':>5} {'oracle':>7} | {'dim6':>5} {'GW6':>5} {'oracle':>7}")
    for k in range(args.kmax + 1):
        q4 = GWQuery(x, e, [x.pd(e)] * k)
        ins6 = [s.pd_of_pushforward(e)] + [s.pd_of_sweep(e)] * (k - 1) if k else []
        q6 = GWQuery(s, pushforward(e), ins6)
        print(f"{k:>3} {moduli_dim(x, e, k):>5} {str(eval_4(q4)):>5} {str(reduce_via_axioms(q4)):>7} | "
              f"{moduli_dim(s, q6.cls, k):>5} {str(eval_6(q6)):>5} {str(reduce_via_axioms(q6)):>7}")


if __name__ == "__main__":
    main()
