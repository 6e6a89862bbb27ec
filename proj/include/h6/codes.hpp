#ifndef H6_CODES_HPP
#define H6_CODES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "h6/report.hpp"

namespace h6 {

/// Element of GF(4) = {0, 1, x, x^2} with x^2 = x + 1, stored as 0, 1, 2, 3.
class GF4 {
 public:
  constexpr GF4() = default;
  constexpr explicit GF4(std::uint8_t v) : v_(v & 3u) {}

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 x() { return GF4(2); }
  static constexpr GF4 x2() { return GF4(3); }
  /// x^k for any integer k.
  static GF4 power_of_x(int k);

  std::uint8_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  GF4 inverse() const;

  friend GF4 operator+(GF4 a, GF4 b) { return GF4(static_cast<std::uint8_t>(a.v_ ^ b.v_)); }
  friend GF4 operator-(GF4 a, GF4 b) { return a + b; }
  friend GF4 operator*(GF4 a, GF4 b);
  friend bool operator==(GF4, GF4) = default;

 private:
  std::uint8_t v_ = 0;
};

using Word4 = std::vector<GF4>;

class LinearCode {
 public:
  LinearCode(std::size_t length, std::vector<Word4> generators);

  std::size_t length() const { return length_; }
  const std::vector<Word4>& generators() const { return generators_; }
  /// Rank of the generator rows.
  std::size_t dimension() const { return basis_.size(); }
  /// Linearly independent rows spanning the code.
  const std::vector<Word4>& basis() const { return basis_; }
  /// All 4^dimension codewords.
  std::vector<Word4> codewords() const;

 private:
  std::size_t length_;
  std::vector<Word4> generators_;
  std::vector<Word4> basis_;
};

std::size_t weight(const Word4& w);

/// Rows of H6 read over GF(4) with w -> omega_image (x or x^2).
LinearCode h6_code(GF4 omega_image = GF4::x());
LinearCode repetition_code(std::size_t length);

/// Throws std::domain_error on the zero code.
std::size_t min_distance(const LinearCode& c);
/// Deletes coordinate `coord` (1-based); throws std::out_of_range.
LinearCode puncture(const LinearCode& c, std::size_t coord);
/// Entry w is the number of codewords of weight w.
std::vector<std::size_t> weight_distribution(const LinearCode& c);

/// {"length", "dimension", "min_distance", "codewords", "weight_distribution"}
nlohmann::json hexacode_json();

Report verify_codes();

}  // namespace h6

#endif  // H6_CODES_HPP
