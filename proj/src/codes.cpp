#include "h6/codes.hpp"

#include <string>

#include "h6/linalg.hpp"

namespace h6 {

namespace {

// log table over the cyclic group {1, x, x^2}
constexpr int kLog[4] = {-1, 0, 1, 2};
constexpr std::uint8_t kExp[3] = {1, 2, 3};

std::string params(const LinearCode& c) {
  return "(" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "," +
         std::to_string(min_distance(c)) + ")";
}

}  // namespace

GF4 GF4::power_of_x(int k) { return GF4(kExp[((k % 3) + 3) % 3]); }

GF4 GF4::inverse() const {
  if (is_zero()) throw std::domain_error("GF4: inverse of zero");
  return power_of_x(-kLog[v_]);
}

GF4 operator*(GF4 a, GF4 b) {
  if (a.is_zero() || b.is_zero()) return GF4::zero();
  return GF4::power_of_x(kLog[a.v_] + kLog[b.v_]);
}

LinearCode::LinearCode(std::size_t length, std::vector<Word4> generators)
    : length_(length), generators_(std::move(generators)) {
  for (const Word4& g : generators_)
    if (g.size() != length_) throw std::invalid_argument("LinearCode: generator of wrong length");
  // row reduce a copy; the nonzero rows that survive form the basis
  std::vector<Word4> rows = generators_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length_ && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const GF4 inv = rows[rank][col].inverse();
    for (GF4& e : rows[rank]) e = e * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const GF4 f = rows[r][col];
      for (std::size_t k = 0; k < length_; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  basis_ = std::move(rows);
}

std::vector<Word4> LinearCode::codewords() const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < dimension(); ++i) count *= 4;
  std::vector<Word4> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Word4 w(length_);
    std::size_t digits = n;
    for (const Word4& row : basis_) {
      const GF4 c(static_cast<std::uint8_t>(digits % 4));
      digits /= 4;
      for (std::size_t k = 0; k < length_; ++k) w[k] = w[k] + c * row[k];
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t weight(const Word4& w) {
  std::size_t n = 0;
  for (GF4 e : w) n += e.is_zero() ? 0 : 1;
  return n;
}

LinearCode h6_code(GF4 omega_image) {
  if (omega_image.is_zero() || omega_image == GF4::one())
    throw std::invalid_argument("h6_code: w must map to a generator of GF(4)*");
  const EisMatrix h = h6();
  std::vector<Word4> rows;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    Word4 row;
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      int k = 0;
      while (k < 3 && !(h(i, j) == EisensteinRational::root(k))) ++k;
      if (k == 3) throw std::logic_error("h6_code: entry is not a cube root of unity");
      GF4 e = GF4::one();
      for (int m = 0; m < k; ++m) e = e * omega_image;
      row.push_back(e);
    }
    rows.push_back(std::move(row));
  }
  return LinearCode(static_cast<std::size_t>(h.cols()), std::move(rows));
}

LinearCode repetition_code(std::size_t length) { return LinearCode(length, {Word4(length, GF4::one())}); }

std::size_t min_distance(const LinearCode& c) {
  if (c.dimension() == 0) throw std::domain_error("min_distance: zero code");
  std::size_t best = c.length() + 1;
  for (const Word4& w : c.codewords()) {
    const std::size_t wt = weight(w);
    if (wt > 0 && wt < best) best = wt;
  }
  return best;
}

LinearCode puncture(const LinearCode& c, std::size_t coord) {
  if (coord < 1 || coord > c.length())
    throw std::out_of_range("puncture: coordinate " + std::to_string(coord) + " outside 1.." +
                            std::to_string(c.length()));
  std::vector<Word4> rows;
  for (const Word4& g : c.generators()) {
    Word4 r = g;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(coord - 1));
    rows.push_back(std::move(r));
  }
  return LinearCode(c.length() - 1, std::move(rows));
}

std::vector<std::size_t> weight_distribution(const LinearCode& c) {
  std::vector<std::size_t> out(c.length() + 1, 0);
  for (const Word4& w : c.codewords()) ++out[weight(w)];
  return out;
}

nlohmann::json hexacode_json() {
  const LinearCode c = h6_code();
  return {{"length", c.length()},
          {"dimension", c.dimension()},
          {"min_distance", min_distance(c)},
          {"codewords", c.codewords().size()},
          {"weight_distribution", weight_distribution(c)}};
}

Report verify_codes() {
  Report r;
  r.suite = "codes";
  const LinearCode hexa = h6_code();
  r.check("hexacode", "rows of H6 over GF(4) span a (6,3,4) code", "(6,3,4)", params(hexa));
  r.check("codewords", "number of codewords", "64", std::to_string(hexa.codewords().size()));
  for (std::size_t k = 1; k <= 6; ++k)
    r.check("puncture_" + std::to_string(k), "hexacode punctured at coordinate " + std::to_string(k), "(5,3,3)",
            params(puncture(hexa, k)));
  r.check("omega_to_x2", "w -> x^2 gives the same parameters", "(6,3,4)", params(h6_code(GF4::x2())));
  return r;
}

}  // namespace h6
