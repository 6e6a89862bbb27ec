#include "h6/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace h6 {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > 0xFFFF) throw std::invalid_argument("Permutation: degree too large");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw std::invalid_argument("Permutation: images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation g(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cycle notation \"" + std::string(text) + "\": " + why);
  };

  skip_ws();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw fail("trailing characters after id");
    return g;
  }
  if (pos == text.size()) throw fail("empty");

  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw fail("expected a point");
      unsigned long value = std::stoul(std::string(text.substr(start, pos - start)));
      if (value < 1 || value > degree) throw fail("point " + std::to_string(value) + " out of range");
      if (used[value - 1]) throw fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value - 1));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) g.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return g;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (int len : cycle_type()) result = std::lcm(result, static_cast<std::size_t>(len));
  return result;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::size_t Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  Permutation r;
  r.images_.resize(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) r.images_[i] = h.images_[g.images_[i]];
  return r;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) { return Permutation::from_cycles(text, degree); }

Permutation p_compose(const Permutation& g, const Permutation& h) { return g * h; }

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto p : g.images()) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace h6
