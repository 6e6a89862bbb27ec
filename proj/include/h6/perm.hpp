#ifndef H6_PERM_HPP
#define H6_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace h6 {

/// Malformed cycle text, out-of-range or repeated points.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Permutation of {0, ..., n-1} acting on the right: i^(g*h) = (i^g)^h.
/// Text I/O is 1-based cycle notation, e.g. "(2,3,4,5,6)" or "id".
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// images[i] = i^g, 0-based. Throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Multiset of cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type() const;
  std::size_t order() const;
  int sign() const;
  /// Smallest moved point, or degree() if identity.
  std::size_t first_moved() const;

  std::string str() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  Permutation& operator*=(const Permutation& h) { return *this = *this * h; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

Permutation parse_cycles(std::string_view text, std::size_t degree);
Permutation p_compose(const Permutation& g, const Permutation& h);
inline Permutation p_inverse(const Permutation& g) { return g.inverse(); }
inline std::vector<int> cycle_type(const Permutation& g) { return g.cycle_type(); }

/// h^-1 g h
inline Permutation conjugate(const Permutation& g, const Permutation& h) { return h.inverse() * g * h; }
/// g^-1 h^-1 g h
inline Permutation commutator(const Permutation& g, const Permutation& h) {
  return g.inverse() * h.inverse() * g * h;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

}  // namespace h6

#endif  // H6_PERM_HPP
