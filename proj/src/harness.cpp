#include "polycut/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>

#include "polycut/errors.hpp"

namespace polycut {

namespace {

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s.push_back(i);
  return s;
}

double uni(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uni_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

SubmodularFn random_submodular(std::mt19937_64& rng,
                               std::vector<std::string> ground, int family) {
  const int n = static_cast<int>(ground.size());
  if (family < 0) family = uni_int(rng, 0, 4);
  switch (family) {
    case 0: {
      std::vector<double> w(n);
      for (double& x : w) x = uni(rng, 0.2, 2.0);
      return SubmodularFn::modular(std::move(ground), std::move(w));
    }
    case 1: {
      std::vector<double> w(n);
      double sum = 0;
      for (double& x : w) {
        x = uni(rng, 0.2, 2.0);
        sum += x;
      }
      return SubmodularFn::capped_additive(std::move(ground), std::move(w),
                                           uni(rng, 0.3, 0.9) * sum);
    }
    case 2:
      return SubmodularFn::uniform_rank(std::move(ground), uni(rng, 0.3, 1.5),
                                        uni_int(rng, 1, std::max(1, n)));
    case 3: {
      const int u = uni_int(rng, std::max(1, n), 2 * std::max(1, n));
      std::vector<double> uw(u);
      for (double& x : uw) x = uni(rng, 0.2, 1.5);
      std::vector<std::vector<int>> covers(n);
      for (auto& c : covers) {
        const int sz = uni_int(rng, 1, std::max(1, u / 2));
        std::set<int> picks;
        while (static_cast<int>(picks.size()) < sz)
          picks.insert(uni_int(rng, 0, u - 1));
        c.assign(picks.begin(), picks.end());
      }
      return SubmodularFn::coverage(std::move(ground), std::move(covers),
                                    std::move(uw));
    }
    default: {
      std::vector<double> vals(n + 1, 0.0);
      double inc = uni(rng, 0.5, 2.0);
      for (int k = 1; k <= n; ++k) {
        vals[k] = vals[k - 1] + inc;
        inc *= uni(rng, 0.4, 1.0);
      }
      return SubmodularFn::concave_cardinality(std::move(ground),
                                               std::move(vals));
    }
  }
}

PolyNetwork random_network(std::mt19937_64& rng, int n, int m,
                           bool ensure_cycle, bool random_capacities) {
  if (n < 2) throw InputError("random_network: need two vertices");
  std::vector<Vertex> vertices;
  for (int v = 0; v < n; ++v)
    vertices.push_back({"v" + std::to_string(v), uni(rng, 0.5, 2.0)});
  std::vector<Edge> edges;
  if (ensure_cycle && m >= n) {
    for (int v = 0; v < n; ++v)
      edges.push_back({"e" + std::to_string(v), v, (v + 1) % n});
  }
  while (static_cast<int>(edges.size()) < m) {
    const int a = uni_int(rng, 0, n - 1);
    int b = uni_int(rng, 0, n - 2);
    if (b >= a) ++b;
    edges.push_back({"e" + std::to_string(edges.size()), a, b});
  }
  std::vector<std::vector<std::string>> out_ids(n), in_ids(n);
  for (const Edge& e : edges) {
    out_ids[e.tail].push_back(e.id);
    in_ids[e.head].push_back(e.id);
  }
  std::vector<std::optional<SubmodularFn>> cap_in(n), cap_out(n);
  if (random_capacities) {
    for (int v = 0; v < n; ++v) {
      cap_out[v] = random_submodular(rng, out_ids[v]);
      cap_in[v] = random_submodular(rng, in_ids[v]);
    }
  }
  return PolyNetwork(std::move(vertices), std::move(edges), std::move(cap_in),
                     std::move(cap_out));
}

PolyHypergraph random_hypergraph(std::mt19937_64& rng, int n, int k,
                                 int max_size) {
  std::vector<Vertex> vertices;
  for (int v = 0; v < n; ++v)
    vertices.push_back({"v" + std::to_string(v), uni(rng, 0.5, 2.0)});
  std::vector<Hyperedge> edges;
  std::vector<SubmodularFn> fp, fm;
  for (int e = 0; e < k; ++e) {
    const int sz = uni_int(rng, 2, std::min(max_size, n));
    std::set<int> members;
    while (static_cast<int>(members.size()) < sz)
      members.insert(uni_int(rng, 0, n - 1));
    Hyperedge he;
    he.id = "h" + std::to_string(e);
    he.members.assign(members.begin(), members.end());
    std::vector<std::string> ground;
    for (int v : he.members) ground.push_back(vertices[v].id);
    fp.push_back(random_submodular(rng, ground));
    fm.push_back(random_submodular(rng, ground));
    edges.push_back(std::move(he));
  }
  return PolyHypergraph(std::move(vertices), std::move(edges), std::move(fp),
                        std::move(fm));
}

PolyHypergraph random_uniform_hypergraph(std::mt19937_64& rng, int n, int k,
                                         std::vector<double>* weights_out) {
  // covering edges need k >= n; weights in [0.5, 1] need k >= 7 so that no
  // single weight exceeds a quarter of the total
  k = std::max({k, n, 7});
  std::vector<Vertex> vertices;
  for (int v = 0; v < n; ++v)
    vertices.push_back({"v" + std::to_string(v), uni(rng, 0.5, 2.0)});
  std::vector<Hyperedge> edges;
  std::vector<double> weights;
  for (int e = 0; e < k; ++e) {
    const int sz = uni_int(rng, 2, std::min(4, n));
    std::set<int> members;
    if (e < n) members.insert(e);  // leaves no vertex isolated when k >= n
    while (static_cast<int>(members.size()) < sz)
      members.insert(uni_int(rng, 0, n - 1));
    Hyperedge he;
    he.id = "h" + std::to_string(e);
    he.members.assign(members.begin(), members.end());
    edges.push_back(std::move(he));
    weights.push_back(uni(rng, 0.5, 1.0));
  }
  if (weights_out) *weights_out = weights;
  return PolyHypergraph::uniform(std::move(vertices), std::move(edges),
                                 std::move(weights));
}

void random_graph(std::mt19937_64& rng, int n, std::vector<Vertex>* vertices,
                  std::vector<std::vector<int>>* adjacency) {
  vertices->clear();
  for (int v = 0; v < n; ++v)
    vertices->push_back({"v" + std::to_string(v), uni(rng, 0.5, 2.0)});
  adjacency->assign(n, {});
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) {  // spanning cycle avoids isolated vertices
    adj[v].insert((v + 1) % n);
    adj[(v + 1) % n].insert(v);
  }
  const int extra = uni_int(rng, 0, n * (n - 1) / 2 - n >= 0 ? n : 0);
  for (int t = 0; t < extra; ++t) {
    const int a = uni_int(rng, 0, n - 1);
    int b = uni_int(rng, 0, n - 2);
    if (b >= a) ++b;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  for (int v = 0; v < n; ++v)
    (*adjacency)[v].assign(adj[v].begin(), adj[v].end());
}

BruteCut brute_sparsest(const PolyNetwork& net) {
  BruteCut best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint32_t full = (1u << net.n()) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::vector<int> s = mask_to_set(mask, net.n());
    try {
      const double v = net.sparsity(s);
      if (v < best.value) {
        best.value = v;
        best.side = s;
      }
    } catch (const DegenerateCut&) {
    }
  }
  if (!std::isfinite(best.value))
    throw DegenerateCut("brute_sparsest: no balanced cut");
  return best;
}

BruteCut brute_conductance(const PolyNetwork& net) {
  BruteCut best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint32_t full = (1u << net.n()) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::vector<int> s = mask_to_set(mask, net.n());
    try {
      const double v = net.conductance(s);
      if (v < best.value) {
        best.value = v;
        best.side = s;
      }
    } catch (const DegenerateCut&) {
    }
  }
  if (!std::isfinite(best.value))
    throw DegenerateCut("brute_conductance: no balanced cut");
  return best;
}

BruteCut brute_sym_conductance(const PolyNetwork& net) {
  BruteCut best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint32_t full = (1u << net.n()) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::vector<int> s = mask_to_set(mask, net.n());
    try {
      const double v = net.sym_conductance(s);
      if (v < best.value) {
        best.value = v;
        best.side = s;
      }
    } catch (const DegenerateCut&) {
    }
  }
  if (!std::isfinite(best.value))
    throw DegenerateCut("brute_sym_conductance: no balanced cut");
  return best;
}

BruteCut brute_h_sparsest(const PolyHypergraph& h) {
  BruteCut best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint32_t full = (1u << h.n()) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::vector<int> s = mask_to_set(mask, h.n());
    try {
      const double v = h.sparsity(s);
      if (v < best.value) {
        best.value = v;
        best.side = s;
      }
    } catch (const DegenerateCut&) {
    }
  }
  if (!std::isfinite(best.value))
    throw DegenerateCut("brute_h_sparsest: no balanced cut");
  return best;
}

BruteHCut brute_h_sym_conductance(const PolyHypergraph& h) {
  BruteHCut best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint32_t vfull = (1u << h.n()) - 1u;
  const std::uint32_t efull =
      h.k() == 0 ? 0u : ((1u << h.k()) - 1u);
  for (std::uint32_t vmask = 1; vmask < vfull; ++vmask) {
    const std::vector<int> vset = mask_to_set(vmask, h.n());
    for (std::uint32_t emask = 0; emask <= efull; ++emask) {
      const std::vector<int> eset = mask_to_set(emask, h.k());
      double vol = 0;
      for (int e : eset) vol += h.edge_degree(e);
      if (vol <= 0 || vol > h.total_volume() / 2 + 1e-12) continue;
      // Symmetric conductance sums the boundary charges of the set and of its
      // complement, so both must be admissible for the ratio to be defined.
      if (!h.admissible(vset, eset)) continue;
      const std::vector<int> cvset = mask_to_set(vfull & ~vmask, h.n());
      const std::vector<int> ceset = mask_to_set(efull & ~emask, h.k());
      if (!h.admissible(cvset, ceset)) continue;
      const double v = h.sym_conductance(vset, eset);
      if (v < best.value) {
        best.value = v;
        best.vset = vset;
        best.eset = eset;
      }
      if (h.k() == 0) break;
    }
  }
  if (!std::isfinite(best.value))
    throw DegenerateCut("brute_h_sym_conductance: no admissible set");
  return best;
}

BruteCut brute_psi(const PolyHypergraph& h,
                   const std::vector<double>& edge_weights) {
  BruteCut best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint32_t full = (1u << h.n()) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::vector<int> t = mask_to_set(mask, h.n());
    try {
      const double v = psi(h, edge_weights, t);
      if (v < best.value) {
        best.value = v;
        best.side = t;
      }
    } catch (const DegenerateCut&) {
    }
  }
  if (!std::isfinite(best.value)) throw DegenerateCut("brute_psi: degenerate");
  return best;
}

BruteCut brute_sym_vertex_expansion(
    const std::vector<Vertex>& vertices,
    const std::vector<std::vector<int>>& adjacency) {
  BruteCut best;
  best.value = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(vertices.size());
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::vector<int> s = mask_to_set(mask, n);
    try {
      const double v = sym_vertex_expansion(vertices, adjacency, s);
      if (v < best.value) {
        best.value = v;
        best.side = s;
      }
    } catch (const DegenerateCut&) {
    }
  }
  if (!std::isfinite(best.value))
    throw DegenerateCut("brute_sym_vertex_expansion: degenerate");
  return best;
}

}  // namespace polycut
