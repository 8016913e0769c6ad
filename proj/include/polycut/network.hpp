#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polycut/submodular.hpp"

namespace polycut {

struct Vertex {
  std::string id;
  double weight = 1.0;
};

struct Edge {
  std::string id;
  int tail = -1;
  int head = -1;
};

enum class CutSide { Plus, Minus };

// Cost-optimal endpoint assignment for one boundary: edge index -> vertex
// index it is charged to.
struct CutAssignment {
  std::map<int, int> owner;
  double value = 0;
};

// Directed network with a monotone submodular capacity per vertex side.
// cap_out(v) is defined over the ids of delta_out(v), cap_in(v) over
// delta_in(v), in incidence order.
class PolyNetwork {
 public:
  PolyNetwork(std::vector<Vertex> vertices, std::vector<Edge> edges,
              std::vector<std::optional<SubmodularFn>> cap_in,
              std::vector<std::optional<SubmodularFn>> cap_out);

  int n() const { return static_cast<int>(vertices_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }
  const SubmodularFn& cap_out(int v) const { return cap_out_[v]; }
  const SubmodularFn& cap_in(int v) const { return cap_in_[v]; }
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  double weight(int v) const { return vertices_[v].weight; }
  double total_weight() const { return total_weight_; }
  double degree(int v) const { return deg_[v]; }
  double volume(const std::vector<int>& s) const;
  double total_volume() const { return total_volume_; }

  std::vector<int> boundary(const std::vector<int>& s, CutSide side) const;

  // Minimum-cost endpoint assignment for an arbitrary edge set.
  CutAssignment cut_cost(const std::vector<int>& edge_set) const;

  double cutval(const std::vector<int>& s) const;     // min over both sides
  double symcutval(const std::vector<int>& s) const;  // sum over both sides

  double sparsity(const std::vector<int>& s) const;
  double conductance(const std::vector<int>& s) const;
  double sym_conductance(const std::vector<int>& s) const;

  static PolyNetwork from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<SubmodularFn> cap_in_, cap_out_;
  std::vector<std::vector<int>> out_edges_, in_edges_;
  std::vector<int> out_pos_, in_pos_;  // position of edge in its endpoint lists
  std::vector<double> deg_;
  std::map<std::string, int> vindex_, eindex_;
  double total_weight_ = 0, total_volume_ = 0;
};

// Undirected input: per-vertex capacity over incident undirected edge ids.
// Produces the bidirected network: each edge {u,v} becomes arcs id+">" (u->v)
// and id+"<" (v->u); each side capacity is the undirected rho renamed to the
// matching arc ids.
PolyNetwork bidirect(std::vector<Vertex> vertices,
                     const std::vector<std::array<std::string, 3>>& und_edges,
                     const std::vector<std::optional<SubmodularFn>>& rho);

std::vector<int> complement_set(int n, const std::vector<int>& s);

}  // namespace polycut
