"""Smoke test for the _polycut extension module."""

import json
import math

import _polycut as pc


def main():
    net_json = pc.random_network_json(7, 5, 9)
    net = json.loads(net_json)
    assert len(net["vertices"]) == 5

    brute = pc.brute_sparsest(net_json)
    approx = pc.sparsest_cut(net_json, seed=7, max_iters=6000)
    assert approx["objective"] >= brute["objective"] - 1e-9
    assert approx["objective"] <= 4 * brute["objective"] + 1e-9
    assert approx["sdp_objective"] <= brute["objective"] + 1e-3

    cond = pc.conductance(net_json, symmetric=True, seed=7, retries=8,
                          max_iters=6000)
    brute_cond = pc.brute_conductance(net_json, symmetric=True)
    assert cond["objective"] >= brute_cond["objective"] - 1e-9

    gap = pc.gamma2(net_json, restarts=2, seed=7)
    direct = pc.brute_conductance(net_json, symmetric=False)
    assert gap["upper"] <= 2 * direct["objective"] + 1e-6
    assert direct["objective"] <= 32 * math.sqrt(gap["upper"]) + 1e-9

    h_json = pc.random_hypergraph_json(7, 4, 3)
    hs = pc.h_sparsest(h_json)
    assert hs["objective"] > 0

    ev = pc.eval_cut(net_json, [net["vertices"][0]["id"]])
    assert ev["cutval"] >= 0

    print("smoke test passed")


if __name__ == "__main__":
    main()
