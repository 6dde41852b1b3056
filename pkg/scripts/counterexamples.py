"""Smallest counterexamples to the two characterizations, re-checked by brute force."""

import argparse

from covpack.families import counterexample_hatted, upper_extremal_sandwich
from covpack.graph import is_complete, parse_graph6, to_graph6
from covpack.harness import build_universe, run_suite
from covpack.solvers import brute_force_beta, brute_force_nu2, min_component_max_2packing
from covpack.structure import decompose


def describe(g):
    beta, nu2 = brute_force_beta(g), brute_force_nu2(g)
    return f"{to_graph6(g):<10} n={g.n} m={g.m} beta={beta} nu2={nu2} edges={sorted(g.edges)}"


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--limit", type=int, default=5)
    args = p.parse_args(argv)

    rep = run_suite(build_universe(args.max_n), ["upper-char", "lower-char"])

    print("# beta = nu2 - 1 but neither complete nor sandwich")
    for v in [v for v in rep.failures if v.theorem_id == "upper-char"][: args.limit]:
        g = parse_graph6(v.graph6)
        print(describe(g), f"complete={is_complete(g)} sandwich={upper_extremal_sandwich(g) is not None}")

    print("# beta = sum beta(R_i) on a minimal-component packing but beta > ceil(nu2/2)")
    for v in [v for v in rep.failures if v.theorem_id == "lower-char"][: args.limit]:
        g = parse_graph6(v.graph6)
        comps = decompose(g, min_component_max_2packing(g)).components
        print(describe(g), "components=" + ",".join(str(c.shape) for c in comps))

    print("# unhatted odd-cycle member with nu2 = k + 1")
    for k in (5, 7):
        print(describe(counterexample_hatted(k)))


if __name__ == "__main__":
    main()
