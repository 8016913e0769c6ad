#include "polycut/submodular.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "polycut/errors.hpp"

namespace polycut {

namespace {

constexpr int kMaxGround = 31;
constexpr int kMaxExplicit = 16;

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

void SubmodularFn::finish_ground() {
  require(ground_.size() <= kMaxGround, "ground set larger than 31 elements");
  index_.clear();
  for (int i = 0; i < static_cast<int>(ground_.size()); ++i) {
    auto [it, fresh] = index_.emplace(ground_[i], i);
    (void)it;
    require(fresh, "duplicate ground element: " + ground_[i]);
  }
}

int SubmodularFn::index_of(const std::string& id) const {
  auto it = index_.find(id);
  require(it != index_.end(), "unknown ground element: " + id);
  return it->second;
}

SubmodularFn SubmodularFn::modular(std::vector<std::string> ground,
                                   std::vector<double> weights) {
  require(ground.size() == weights.size(), "modular: weight count mismatch");
  for (double w : weights) require(w >= 0, "modular: negative weight");
  SubmodularFn f;
  f.kind_ = FnKind::Modular;
  f.ground_ = std::move(ground);
  f.weights_ = std::move(weights);
  f.finish_ground();
  return f;
}

SubmodularFn SubmodularFn::capped_additive(std::vector<std::string> ground,
                                           std::vector<double> weights,
                                           double cap) {
  require(ground.size() == weights.size(),
          "capped_additive: weight count mismatch");
  for (double w : weights) require(w >= 0, "capped_additive: negative weight");
  require(cap >= 0, "capped_additive: negative cap");
  SubmodularFn f;
  f.kind_ = FnKind::CappedAdditive;
  f.ground_ = std::move(ground);
  f.weights_ = std::move(weights);
  f.cap_ = cap;
  f.finish_ground();
  return f;
}

SubmodularFn SubmodularFn::uniform_rank(std::vector<std::string> ground,
                                        double scale, int rank) {
  require(scale >= 0, "uniform_rank: negative scale");
  require(rank >= 0, "uniform_rank: negative rank");
  SubmodularFn f;
  f.kind_ = FnKind::UniformRank;
  f.ground_ = std::move(ground);
  f.scale_ = scale;
  f.rank_ = rank;
  f.finish_ground();
  return f;
}

SubmodularFn SubmodularFn::coverage(std::vector<std::string> ground,
                                    std::vector<std::vector<int>> covers,
                                    std::vector<double> universe_weights) {
  require(ground.size() == covers.size(), "coverage: cover count mismatch");
  require(universe_weights.size() <= 64, "coverage: universe larger than 64");
  for (double w : universe_weights) require(w >= 0, "coverage: negative weight");
  SubmodularFn f;
  f.kind_ = FnKind::Coverage;
  f.ground_ = std::move(ground);
  f.universe_weights_ = std::move(universe_weights);
  f.covers_ = std::move(covers);
  f.cover_masks_.assign(f.covers_.size(), 0);
  for (size_t i = 0; i < f.covers_.size(); ++i) {
    for (int u : f.covers_[i]) {
      require(u >= 0 && u < static_cast<int>(f.universe_weights_.size()),
              "coverage: universe index out of range");
      f.cover_masks_[i] |= std::uint64_t{1} << u;
    }
  }
  f.finish_ground();
  return f;
}

SubmodularFn SubmodularFn::concave_cardinality(std::vector<std::string> ground,
                                               std::vector<double> values) {
  require(values.size() == ground.size() + 1,
          "concave_cardinality: need g(0)..g(n)");
  require(values[0] == 0, "concave_cardinality: g(0) must be 0");
  for (size_t k = 1; k < values.size(); ++k)
    require(values[k] >= values[k - 1] - 1e-12,
            "concave_cardinality: g must be nondecreasing");
  for (size_t k = 2; k < values.size(); ++k)
    require(values[k] - values[k - 1] <= values[k - 1] - values[k - 2] + 1e-12,
            "concave_cardinality: g must be concave");
  SubmodularFn f;
  f.kind_ = FnKind::ConcaveCardinality;
  f.ground_ = std::move(ground);
  f.concave_values_ = std::move(values);
  f.finish_ground();
  return f;
}

SubmodularFn SubmodularFn::explicit_table(std::vector<std::string> ground,
                                          std::vector<double> table) {
  require(ground.size() <= kMaxExplicit, "explicit_table: ground larger than 16");
  const int n = static_cast<int>(ground.size());
  require(table.size() == (std::size_t{1} << n),
          "explicit_table: table size must be 2^n");
  require(table[0] == 0, "explicit_table: f(empty) must be 0");
  const std::uint32_t full = (n == 0) ? 0u : ((std::uint32_t{1} << n) - 1u);
  for (std::uint32_t m = 0; m <= full && n > 0; ++m) {
    for (int i = 0; i < n; ++i) {
      if (m & (1u << i)) continue;
      const std::uint32_t mi = m | (1u << i);
      require(table[mi] >= table[m] - 1e-12, "explicit_table: not monotone");
      for (int j = i + 1; j < n; ++j) {
        if (m & (1u << j)) continue;
        const std::uint32_t mj = m | (1u << j);
        const std::uint32_t mij = mi | (1u << j);
        require(table[mi] + table[mj] >= table[mij] + table[m] - 1e-12,
                "explicit_table: not submodular");
      }
    }
    if (m == full) break;
  }
  SubmodularFn f;
  f.kind_ = FnKind::ExplicitTable;
  f.ground_ = std::move(ground);
  f.table_ = std::move(table);
  f.finish_ground();
  return f;
}

SubmodularFn SubmodularFn::renamed(std::vector<std::string> new_ground) const {
  require(new_ground.size() == ground_.size(), "renamed: size mismatch");
  SubmodularFn f = *this;
  f.ground_ = std::move(new_ground);
  f.finish_ground();
  return f;
}

double SubmodularFn::eval_mask(std::uint32_t mask) const {
  require((mask & ~full_mask()) == 0, "eval_mask: mask outside ground set");
  switch (kind_) {
    case FnKind::Modular: {
      double s = 0;
      for (int i = 0; i < size(); ++i)
        if (mask & (1u << i)) s += weights_[i];
      return s;
    }
    case FnKind::CappedAdditive: {
      double s = 0;
      for (int i = 0; i < size(); ++i)
        if (mask & (1u << i)) s += weights_[i];
      return std::min(s, cap_);
    }
    case FnKind::UniformRank:
      return scale_ * std::min(std::popcount(mask), rank_);
    case FnKind::Coverage: {
      std::uint64_t covered = 0;
      for (int i = 0; i < size(); ++i)
        if (mask & (1u << i)) covered |= cover_masks_[i];
      double s = 0;
      while (covered) {
        const int u = std::countr_zero(covered);
        s += universe_weights_[u];
        covered &= covered - 1;
      }
      return s;
    }
    case FnKind::ConcaveCardinality:
      return concave_values_[std::popcount(mask)];
    case FnKind::ExplicitTable:
      return table_[mask];
  }
  throw InputError("eval_mask: bad kind");
}

double SubmodularFn::eval(const std::vector<std::string>& subset) const {
  std::uint32_t mask = 0;
  for (const auto& id : subset) mask |= 1u << index_of(id);
  return eval_mask(mask);
}

double SubmodularFn::lovasz(std::span<const double> x) const {
  require(static_cast<int>(x.size()) == size(), "lovasz: dimension mismatch");
  for (double xi : x)
    require(xi >= 0 && std::isfinite(xi), "lovasz: needs finite x >= 0");
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (x[a] != x[b]) return x[a] > x[b];
    return a < b;
  });
  double value = 0;
  std::uint32_t prefix = 0;
  for (int j = 0; j < size(); ++j) {
    prefix |= 1u << order[j];
    const double next = (j + 1 < size()) ? x[order[j + 1]] : 0.0;
    const double gap = x[order[j]] - next;
    if (gap != 0) value += gap * eval_mask(prefix);
  }
  return value;
}

std::vector<double> SubmodularFn::greedy_vertex(
    std::span<const double> direction) const {
  require(static_cast<int>(direction.size()) == size(),
          "greedy_vertex: dimension mismatch");
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (direction[a] != direction[b]) return direction[a] > direction[b];
    return a < b;
  });
  std::vector<double> y(size(), 0.0);
  std::uint32_t prefix = 0;
  double prev = 0;
  for (int j = 0; j < size(); ++j) {
    prefix |= 1u << order[j];
    const double cur = eval_mask(prefix);
    y[order[j]] = cur - prev;
    prev = cur;
  }
  return y;
}

SubmodularFn SubmodularFn::from_json(const nlohmann::json& j) {
  require(j.is_object(), "capacity: expected object");
  require(j.contains("ground") && j.contains("kind"), "capacity: need ground, kind");
  std::vector<std::string> ground = j.at("ground").get<std::vector<std::string>>();
  const std::string kind = j.at("kind").get<std::string>();
  const nlohmann::json params =
      j.contains("params") ? j.at("params") : nlohmann::json::object();
  auto weights_param = [&](const char* key) {
    require(params.contains(key), std::string("capacity: missing params.") + key);
    const auto& w = params.at(key);
    if (w.is_array()) return w.get<std::vector<double>>();
    require(w.is_object(), "capacity: weights must be array or object");
    std::vector<double> out(ground.size(), 0.0);
    for (size_t i = 0; i < ground.size(); ++i) {
      require(w.contains(ground[i]), "capacity: weight missing for " + ground[i]);
      out[i] = w.at(ground[i]).get<double>();
    }
    return out;
  };
  if (kind == "modular")
    return modular(std::move(ground), weights_param("weights"));
  if (kind == "capped_additive")
    return capped_additive(std::move(ground), weights_param("weights"),
                           params.at("cap").get<double>());
  if (kind == "uniform_rank")
    return uniform_rank(std::move(ground), params.at("scale").get<double>(),
                        params.at("rank").get<int>());
  if (kind == "coverage")
    return coverage(std::move(ground),
                    params.at("covers").get<std::vector<std::vector<int>>>(),
                    params.at("universe_weights").get<std::vector<double>>());
  if (kind == "concave_cardinality")
    return concave_cardinality(std::move(ground),
                               params.at("values").get<std::vector<double>>());
  if (kind == "explicit_table")
    return explicit_table(std::move(ground),
                          params.at("table").get<std::vector<double>>());
  throw InputError("capacity: unknown kind " + kind);
}

nlohmann::json SubmodularFn::to_json() const {
  nlohmann::json j;
  j["ground"] = ground_;
  nlohmann::json p = nlohmann::json::object();
  switch (kind_) {
    case FnKind::Modular:
      j["kind"] = "modular";
      p["weights"] = weights_;
      break;
    case FnKind::CappedAdditive:
      j["kind"] = "capped_additive";
      p["weights"] = weights_;
      p["cap"] = cap_;
      break;
    case FnKind::UniformRank:
      j["kind"] = "uniform_rank";
      p["scale"] = scale_;
      p["rank"] = rank_;
      break;
    case FnKind::Coverage:
      j["kind"] = "coverage";
      p["covers"] = covers_;
      p["universe_weights"] = universe_weights_;
      break;
    case FnKind::ConcaveCardinality:
      j["kind"] = "concave_cardinality";
      p["values"] = concave_values_;
      break;
    case FnKind::ExplicitTable:
      j["kind"] = "explicit_table";
      p["table"] = table_;
      break;
  }
  j["params"] = std::move(p);
  return j;
}

std::pair<std::uint32_t, double> sfm_min(std::span<const SfmTerm> terms,
                                         int nbits) {
  if (nbits < 0 || nbits > 31) throw CapacityError("sfm_min: too many bits");
  // Union-find over bits that co-occur inside one term.
  std::vector<int> parent(nbits);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const SfmTerm& t : terms) {
    int first = -1;
    for (const SfmLit& l : t.lits) {
      if (l.bit < 0) continue;
      if (l.bit >= nbits) throw InputError("sfm_min: bit out of range");
      if (first < 0)
        first = l.bit;
      else
        parent[find(l.bit)] = find(first);
    }
  }
  std::vector<std::vector<int>> comp_bits(nbits);
  for (int b = 0; b < nbits; ++b) comp_bits[find(b)].push_back(b);
  std::vector<std::vector<int>> comp_terms(nbits);
  double base = 0;  // terms with no live bits evaluate at the empty set
  for (size_t ti = 0; ti < terms.size(); ++ti) {
    int root = -1;
    for (const SfmLit& l : terms[ti].lits)
      if (l.bit >= 0) {
        root = find(l.bit);
        break;
      }
    if (root < 0)
      base += terms[ti].fn->eval_mask(0);
    else
      comp_terms[root].push_back(static_cast<int>(ti));
  }
  auto term_value = [&](const SfmTerm& t, std::uint32_t assignment) {
    std::uint32_t mask = 0;
    for (size_t k = 0; k < t.lits.size(); ++k) {
      const SfmLit& l = t.lits[k];
      if (l.bit < 0) continue;
      const bool bit = (assignment >> l.bit) & 1u;
      if (bit == l.sense) mask |= 1u << k;
    }
    return t.fn->eval_mask(mask);
  };
  std::uint32_t best_assignment = 0;
  double total = base;
  for (int root = 0; root < nbits; ++root) {
    const auto& bits = comp_bits[root];
    if (bits.empty()) continue;
    if (bits.size() > 24) throw CapacityError("sfm_min: component exceeds 24 bits");
    double best = 0;
    std::uint32_t best_local = 0;
    bool have = false;
    for (std::uint32_t local = 0; local < (std::uint32_t{1} << bits.size());
         ++local) {
      std::uint32_t assignment = 0;
      for (size_t k = 0; k < bits.size(); ++k)
        if (local & (1u << k)) assignment |= 1u << bits[k];
      double v = 0;
      for (int ti : comp_terms[root]) v += term_value(terms[ti], assignment);
      if (!have || v < best) {
        have = true;
        best = v;
        best_local = assignment;
      }
    }
    total += best;
    best_assignment |= best_local;
  }
  return {best_assignment, total};
}

}  // namespace polycut
