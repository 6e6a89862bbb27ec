#ifndef H6_OUTER_S6_HPP
#define H6_OUTER_S6_HPP

#include <array>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "h6/perm.hpp"
#include "h6/report.hpp"

namespace h6 {

/// The 720 elements of S6 in sorted order.
const std::vector<Permutation>& s6_elements();

/// A map S6 -> S6 stored as a full table.
class AutoTable {
 public:
  AutoTable() = default;
  explicit AutoTable(std::unordered_map<Permutation, Permutation, PermutationHash> table);

  const Permutation& operator()(const Permutation& g) const;
  std::size_t size() const { return table_.size(); }

  bool is_bijective() const;
  /// T(g s) = T(g) T(s) for every g and s in {(1,2), (1,2,3,4,5,6)}; with
  /// T(id) = id this is equivalent to full multiplicativity.
  bool is_multiplicative() const;
  /// All 720 x 720 products.
  bool is_multiplicative_exhaustive() const;

 private:
  std::unordered_map<Permutation, Permutation, PermutationHash> table_;
};

/// The automorphism with (2,3,4,5,6) -> (2,3,4,5,6) and
/// (1,2) -> (1,2)(3,6)(4,5), read off the two projections of Y.
AutoTable build_outer();
AutoTable identity_table();
/// g -> h^-1 g h
AutoTable inner_table(const Permutation& h);
/// g -> second(first(g))
AutoTable compose(const AutoTable& first, const AutoTable& second);

/// Some h with T(g) = h^-1 g h for all g, if T is inner. Throws
/// NotAHomomorphism if T is not multiplicative.
std::optional<Permutation> is_inner(const AutoTable& t);
/// Some h with t1(g) = h^-1 t2(g) h for all g.
std::optional<Permutation> compare_up_to_inner(const AutoTable& t1, const AutoTable& t2);

using Duad = std::pair<int, int>;         // 1-based, first < second
using Syntheme = std::array<Duad, 3>;     // sorted
struct SynthematicTotal {
  std::array<Syntheme, 5> synthemes;      // sorted
  friend auto operator<=>(const SynthematicTotal&, const SynthematicTotal&) = default;
};

/// The 15 perfect matchings of {1..6}, sorted.
std::vector<Syntheme> all_synthemes();
/// The 6 synthematic totals, sorted lexicographically.
std::vector<SynthematicTotal> sylvester_totals();
/// Action of S6 on the six totals in the order of sylvester_totals().
AutoTable totals_outer();

/// {"generator_images": {...}, "table": [[g, sigma(g)], ...]}
nlohmann::json outer_to_json(const AutoTable& t);

Report verify_outer();

}  // namespace h6

#endif  // H6_OUTER_S6_HPP
