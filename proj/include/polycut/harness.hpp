#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "polycut/hypergraph.hpp"
#include "polycut/network.hpp"

namespace polycut {

// Random monotone submodular capacity over the given ground ids. family < 0
// picks one at random; otherwise 0 modular, 1 capped additive, 2 uniform rank,
// 3 coverage, 4 concave cardinality.
SubmodularFn random_submodular(std::mt19937_64& rng,
                               std::vector<std::string> ground,
                               int family = -1);

// Random directed network with distinct endpoints; with ensure_cycle the edge
// set starts from a spanning cycle so every cut has both boundaries nonempty.
PolyNetwork random_network(std::mt19937_64& rng, int n, int m,
                           bool ensure_cycle = true,
                           bool random_capacities = true);

PolyHypergraph random_hypergraph(std::mt19937_64& rng, int n, int k,
                                 int max_size = 4);

// Random weighted hypergraph with uniform splitting functions; every weight is
// at most a quarter of the total.
PolyHypergraph random_uniform_hypergraph(std::mt19937_64& rng, int n, int k,
                                         std::vector<double>* weights_out);

// Random undirected graph as adjacency lists (no isolated vertices).
void random_graph(std::mt19937_64& rng, int n, std::vector<Vertex>* vertices,
                  std::vector<std::vector<int>>* adjacency);

struct BruteCut {
  std::vector<int> side;
  double value = 0;
};

BruteCut brute_sparsest(const PolyNetwork& net);
BruteCut brute_conductance(const PolyNetwork& net);
BruteCut brute_sym_conductance(const PolyNetwork& net);

BruteCut brute_h_sparsest(const PolyHypergraph& h);

struct BruteHCut {
  std::vector<int> vset, eset;
  double value = 0;
};

// Minimum symmetric conductance over admissible sets whose vertex part is a
// proper nonempty subset and whose volume does not exceed half the total.
BruteHCut brute_h_sym_conductance(const PolyHypergraph& h);

BruteCut brute_psi(const PolyHypergraph& h,
                   const std::vector<double>& edge_weights);
BruteCut brute_sym_vertex_expansion(
    const std::vector<Vertex>& vertices,
    const std::vector<std::vector<int>>& adjacency);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Runs the full acceptance suite; prints one line per criterion to `log` when
// given. `only` restricts to a single criterion id (0 = all).
std::vector<CriterionResult> run_suite(unsigned seed = 1,
                                       std::ostream* log = nullptr,
                                       int only = 0);

}  // namespace polycut
