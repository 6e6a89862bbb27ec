#ifndef H6_GROUPTHEORY_HPP
#define H6_GROUPTHEORY_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "h6/perm.hpp"

namespace h6 {

/// Anything with a right-action-compatible product, inverse and identity test.
template <class G>
concept GroupElement = std::equality_comparable<G> && requires(const G& a, const G& b) {
  { a * b } -> std::convertible_to<G>;
  { a.inverse() } -> std::convertible_to<G>;
  { a.is_identity() } -> std::convertible_to<bool>;
};

/// a^b = b^-1 a b
template <GroupElement G>
G conjugate(const G& a, const G& b) {
  return b.inverse() * a * b;
}

/// [a,b] = a^-1 b^-1 a b
template <GroupElement G>
G commutator(const G& a, const G& b) {
  return a.inverse() * b.inverse() * a * b;
}

template <GroupElement G>
G power(const G& a, int n) {
  G base = n < 0 ? a.inverse() : a;
  G result = a * a.inverse();
  for (int k = 0; k < (n < 0 ? -n : n); ++k) result = result * base;
  return result;
}

/// Base and strong generating set, built by deterministic Schreier-Sims.
///
/// Level i holds the strong generators fixing base[0..i-1], the orbit of
/// base[i] under them (FIFO order, generators in insertion order) and a
/// transversal u with base[i]^u[p] = p for every orbit point p.
class BSGS {
 public:
  using Point = Permutation::Point;

  explicit BSGS(std::size_t degree = 0) : degree_(degree) {}

  /// base_prefix points come first in the base (orbits of length one are
  /// allowed); further base points are the smallest point moved by the
  /// generator that needs them.
  static BSGS build(std::span<const Permutation> gens, std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  const std::vector<Permutation>& strong_generators() const { return strong_gens_; }
  /// Strong generators fixing the first `level` base points.
  const std::vector<Permutation>& level_generators(std::size_t level) const;
  std::size_t levels() const { return levels_.size(); }

  /// Product of the fundamental orbit lengths; throws std::overflow_error
  /// beyond 64 bits.
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;

  /// Strips g through levels start.. and returns the residue and the level
  /// where stripping stopped (levels() if it went all the way down).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start = 0) const;

  /// Adds g to the group if it is not already a member; true iff the group grew.
  bool extend(const Permutation& g);

 private:
  struct Level {
    Point point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> slot;  // point -> index into orbit/reps, -1 if outside
    std::vector<Permutation> reps;
  };

  void add_level(Point point);
  void add_generator(const Permutation& h, std::size_t through_level);
  void recompute_orbit(std::size_t level);
  void complete(std::size_t from_level);

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_gens_;
};

inline BSGS bsgs_build(std::span<const Permutation> gens) { return BSGS::build(gens); }
inline std::uint64_t group_order(const BSGS& b) { return b.order(); }
inline bool membership(const BSGS& b, const Permutation& g) { return b.contains(g); }
std::uint64_t group_order(std::span<const Permutation> gens);

/// All elements of <gens> by breadth-first closure. Throws std::length_error
/// if more than `cap` elements are found.
std::vector<Permutation> enumerate_elements(std::span<const Permutation> gens, std::size_t cap = 1'000'000);

/// Generators of the normal closure of `seeds` in <gens>.
std::vector<Permutation> normal_closure(std::span<const Permutation> gens, std::span<const Permutation> seeds);
std::vector<Permutation> derived_subgroup(std::span<const Permutation> gens);
/// Generators of the center, by enumeration (at most 10^6 elements).
std::vector<Permutation> center_of(std::span<const Permutation> gens);
/// True iff <gens> is nontrivial and has no proper nontrivial normal subgroup.
bool is_simple_small(std::span<const Permutation> gens);

/// Right regular-style action of <gens> on the right cosets of `normal`
/// (which must be normal in <gens>); one permutation per generator.
std::vector<Permutation> quotient_action(std::span<const Permutation> gens, std::span<const Permutation> normal);

// Words: a letter is a generator, its upper-case form the inverse.
// "tsTS" is t s t^-1 s^-1.
using Word = std::string;
Word word_power(std::string_view w, int n);
Word word_inverse(std::string_view w);
/// [a,b] = a^-1 b^-1 a b
Word word_commutator(std::string_view a, std::string_view b);

template <GroupElement G>
G evaluate_word(std::string_view word, const std::map<char, G>& assignment) {
  if (assignment.empty()) throw std::invalid_argument("evaluate_word: empty assignment");
  const G& any = assignment.begin()->second;
  G result = any * any.inverse();
  for (char c : word) {
    bool inverse = c >= 'A' && c <= 'Z';
    char letter = inverse ? static_cast<char>(c - 'A' + 'a') : c;
    auto it = assignment.find(letter);
    if (it == assignment.end()) throw std::invalid_argument(std::string("evaluate_word: unknown letter '") + c + "'");
    result = result * (inverse ? it->second.inverse() : it->second);
  }
  return result;
}

/// True iff every word evaluates to the identity.
template <GroupElement G>
bool check_relations(std::span<const Word> words, const std::map<char, G>& assignment) {
  bool all = true;
  for (const Word& w : words) all = evaluate_word(w, assignment).is_identity() && all;
  return all;
}

struct KernelResult {
  std::uint64_t group_order = 0;
  std::uint64_t image_order = 0;
  std::uint64_t kernel_order = 0;
  std::vector<Permutation> kernel_gens;
};

/// Kernel of the action of <gens> on blocks, block_of[p] naming the block
/// of point p (ids 0..nblocks-1). Throws std::invalid_argument if a
/// generator does not map blocks to blocks.
KernelResult action_kernel(std::span<const Permutation> gens, std::span<const std::size_t> block_of);
inline std::uint64_t action_kernel_order(std::span<const Permutation> gens, std::span<const std::size_t> block_of) {
  return action_kernel(gens, block_of).kernel_order;
}
/// Induced permutation of blocks.
Permutation block_image(const Permutation& g, std::span<const std::size_t> block_of, std::size_t nblocks);

/// Raised when generator images do not extend to a homomorphism.
class NotAHomomorphism : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct GroupHom {
  std::vector<Permutation> domain_gens;
  std::vector<Permutation> image_gens;
  std::unordered_map<Permutation, Permutation, PermutationHash> table;
  /// Domain elements in breadth-first discovery order.
  std::vector<Permutation> elements;

  const Permutation& operator()(const Permutation& g) const;
};

/// Extends generator images over the Cayley graph of the domain. Every edge
/// g -> g*s is checked against T(g)*T(s), so a returned table is a
/// homomorphism.
GroupHom hom_closure(std::span<const std::pair<Permutation, Permutation>> pairs, std::size_t cap = 100'000);

template <GroupElement G>
struct OrbitStabilizer {
  std::size_t orbit_size = 0;
  std::vector<G> stabilizer_gens;
};

/// Breadth-first orbit of `seed` under <gens> with states identified by
/// key(state). The stabilizer is generated by the Schreier generators
/// u_s * g * u_{s^g}^-1; nontrivial ones are offered to `keep` in discovery
/// order and returned if it accepts them.
///
/// act(act(s, g), h) must equal act(s, g*h); this is spot-checked on the
/// seed and all generator pairs, std::logic_error on failure.
template <GroupElement G, class State, class Act, class Key>
OrbitStabilizer<G> orbit_stabilizer(std::span<const G> gens, const State& seed, Act act, Key key,
                                    const std::function<bool(const G&)>& keep = {}) {
  if (gens.empty()) throw std::invalid_argument("orbit_stabilizer: no generators");
  for (const G& g : gens)
    for (const G& h : gens)
      if (key(act(act(seed, g), h)) != key(act(seed, g * h)))
        throw std::logic_error("orbit_stabilizer: not a right action");

  const G identity = gens[0] * gens[0].inverse();
  OrbitStabilizer<G> result;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<G> transversal;
  index.emplace(key(seed), 0);
  transversal.push_back(identity);

  for (std::size_t head = 0; head < transversal.size(); ++head) {
    const G u = transversal[head];
    const State state = head == 0 ? seed : act(seed, u);
    for (const G& g : gens) {
      State image = act(state, g);
      auto [it, inserted] = index.emplace(key(image), transversal.size());
      if (inserted) {
        transversal.push_back(u * g);
        continue;
      }
      G schreier = u * g * transversal[it->second].inverse();
      if (schreier.is_identity()) continue;
      if (!keep || keep(schreier)) result.stabilizer_gens.push_back(std::move(schreier));
    }
  }
  result.orbit_size = transversal.size();
  return result;
}

}  // namespace h6

#endif  // H6_GROUPTHEORY_HPP
