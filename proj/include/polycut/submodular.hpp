#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace polycut {

enum class FnKind {
  Modular,
  CappedAdditive,
  UniformRank,
  Coverage,
  ConcaveCardinality,
  ExplicitTable,
};

// Monotone, normalized submodular function over a small named ground set.
// Subsets are bitmasks in ground-list order (bit i <-> ground()[i]).
class SubmodularFn {
 public:
  static SubmodularFn modular(std::vector<std::string> ground,
                              std::vector<double> weights);
  static SubmodularFn capped_additive(std::vector<std::string> ground,
                                      std::vector<double> weights, double cap);
  static SubmodularFn uniform_rank(std::vector<std::string> ground,
                                   double scale, int rank);
  // covers[i] lists universe indices covered by ground element i.
  static SubmodularFn coverage(std::vector<std::string> ground,
                               std::vector<std::vector<int>> covers,
                               std::vector<double> universe_weights);
  // values[k] = g(k) for k = 0..n; g must be normalized, nondecreasing, concave.
  static SubmodularFn concave_cardinality(std::vector<std::string> ground,
                                          std::vector<double> values);
  // table[mask] over all 2^n masks; validated for the three defining laws.
  static SubmodularFn explicit_table(std::vector<std::string> ground,
                                     std::vector<double> table);

  // Rebuilds the same function with renamed ground elements (order preserved).
  SubmodularFn renamed(std::vector<std::string> new_ground) const;

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  FnKind kind() const { return kind_; }
  int index_of(const std::string& id) const;  // InputError if absent

  double eval_mask(std::uint32_t mask) const;
  double eval(const std::vector<std::string>& subset) const;
  double total() const { return eval_mask(full_mask()); }
  std::uint32_t full_mask() const {
    return size() == 0 ? 0u : ((std::uint32_t{1} << size()) - 1u);
  }

  // Lovasz extension at x >= 0 (indexed in ground order). Ties in the sorted
  // order are broken by ground position.
  double lovasz(std::span<const double> x) const;

  // Greedy vertex of the base polytope maximizing <direction, y>.
  std::vector<double> greedy_vertex(std::span<const double> direction) const;

  static SubmodularFn from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  SubmodularFn() = default;
  void finish_ground();

  std::vector<std::string> ground_;
  std::unordered_map<std::string, int> index_;
  FnKind kind_ = FnKind::Modular;
  std::vector<double> weights_;
  double cap_ = 0;
  double scale_ = 0;
  int rank_ = 0;
  std::vector<std::uint64_t> cover_masks_;
  std::vector<double> universe_weights_;
  std::vector<std::vector<int>> covers_;
  std::vector<double> concave_values_;
  std::vector<double> table_;
};

// One term of a decomposable minimization instance: the function evaluated on
// {ground element k : lits[k].bit >= 0 and bit lits[k].bit of the assignment
// equals lits[k].sense}. lits[k].bit < 0 means element k is never included.
struct SfmLit {
  int bit = -1;
  bool sense = false;
};

struct SfmTerm {
  const SubmodularFn* fn = nullptr;
  std::vector<SfmLit> lits;  // aligned with fn->ground()
};

// Exact minimization of sum of terms over assignments in {0,1}^nbits, by
// exhaustive search decomposed over connected components of shared bits.
// CapacityError if any component exceeds 24 bits.
std::pair<std::uint32_t, double> sfm_min(std::span<const SfmTerm> terms,
                                         int nbits);

}  // namespace polycut
