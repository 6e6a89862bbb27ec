// Shared generators for the property tests. Everything is seeded so a
// failure reproduces.
#ifndef H6_TESTS_SUPPORT_HPP
#define H6_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "h6/exactnum.hpp"
#include "h6/hadamard_aut.hpp"
#include "h6/linalg.hpp"
#include "h6/monomial.hpp"
#include "h6/perm.hpp"

namespace h6::test {

constexpr std::uint64_t kSeed = 0x5eed'1234'abcdULL;

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return Rational(num(rng), den(rng));
}

inline EisensteinRational random_eis(std::mt19937_64& rng) {
  return EisensteinRational(small_rational(rng), small_rational(rng));
}

inline EisensteinRational random_nonzero_eis(std::mt19937_64& rng) {
  EisensteinRational x;
  do x = random_eis(rng);
  while (x.is_zero());
  return x;
}

inline SplitQuaternion random_sq(std::mt19937_64& rng) { return {random_eis(rng), random_eis(rng)}; }

inline EisMatrix random_eis_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  EisMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_eis(rng);
  return m;
}

inline SqMatrix random_sq_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  SqMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_sq(rng);
  return m;
}

inline Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Permutation::Point> images(n);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

inline MonomialMatrix random_monomial(std::mt19937_64& rng, std::size_t n = 6) {
  std::uniform_int_distribution<int> phase(0, 2);
  std::vector<CubeRoot> units(n);
  for (CubeRoot& u : units) u = CubeRoot::make(phase(rng));
  return MonomialMatrix(std::move(units), random_perm(rng, n));
}

inline MonomialBMatrix random_monomial_b(std::mt19937_64& rng, std::size_t n = 6) {
  std::uniform_int_distribution<int> phase(0, 2), beta(0, 1);
  std::vector<SplitUnit> units(n);
  for (SplitUnit& u : units) u = SplitUnit::make(phase(rng), beta(rng));
  return MonomialBMatrix(std::move(units), random_perm(rng, n));
}

inline XElement random_x(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  return {random_monomial(rng), random_monomial(rng), static_cast<std::uint8_t>(bit(rng))};
}

}  // namespace h6::test

#endif  // H6_TESTS_SUPPORT_HPP
