#ifndef H6_MONOMIAL_HPP
#define H6_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "h6/exactnum.hpp"
#include "h6/linalg.hpp"
#include "h6/perm.hpp"

namespace h6 {

/// w^phase, phase in Z/3.
struct CubeRoot {
  using Scalar = EisensteinRational;
  std::uint8_t phase = 0;

  static CubeRoot one() { return {}; }
  static CubeRoot make(int k) { return {static_cast<std::uint8_t>(((k % 3) + 3) % 3)}; }

  CubeRoot operator*(CubeRoot o) const { return make(phase + o.phase); }
  CubeRoot inverse() const { return make(-phase); }
  CubeRoot conj() const { return inverse(); }
  Scalar scalar() const { return EisensteinRational::root(phase); }
  bool is_one() const { return phase == 0; }
  int code() const { return phase; }
  std::string str() const;
  static CubeRoot parse(std::string_view text);

  friend bool operator==(CubeRoot, CubeRoot) = default;
  friend auto operator<=>(CubeRoot, CubeRoot) = default;
};

/// w^phase * B^beta, a unit of the split quaternions. (w^a B)^2 = 1.
struct SplitUnit {
  using Scalar = SplitQuaternion;
  std::uint8_t phase = 0;
  std::uint8_t beta = 0;

  static SplitUnit one() { return {}; }
  static SplitUnit make(int k, int b) {
    return {static_cast<std::uint8_t>(((k % 3) + 3) % 3), static_cast<std::uint8_t>(((b % 2) + 2) % 2)};
  }

  // B w^a = w^-a B
  SplitUnit operator*(SplitUnit o) const { return make(phase + (beta ? -o.phase : o.phase), beta + o.beta); }
  SplitUnit inverse() const { return beta ? *this : make(-phase, 0); }
  Scalar scalar() const;
  bool is_one() const { return phase == 0 && beta == 0; }
  int code() const { return phase * 2 + beta; }
  std::string str() const;
  static SplitUnit parse(std::string_view text);

  friend bool operator==(SplitUnit, SplitUnit) = default;
  friend auto operator<=>(SplitUnit, SplitUnit) = default;
};

/// Monomial matrix P = D*K: D = diag(units), K the permutation matrix with
/// K[i][i^k] = 1. Row i of P carries units[i] in column i^k.
template <class Unit>
class Monomial {
 public:
  using Scalar = typename Unit::Scalar;

  Monomial() = default;
  explicit Monomial(std::size_t degree) : units_(degree, Unit::one()), k_(degree) {}
  Monomial(std::vector<Unit> units, Permutation k) : units_(std::move(units)), k_(std::move(k)) {
    if (units_.size() != k_.degree()) throw std::invalid_argument("Monomial: diagonal and permutation differ in degree");
  }

  static Monomial identity(std::size_t degree) { return Monomial(degree); }
  static Monomial diagonal(std::vector<Unit> units) {
    auto n = units.size();
    return Monomial(std::move(units), Permutation(n));
  }
  /// `[e1,...,en](cycles)`; the cycle part may be omitted for a diagonal.
  static Monomial parse(std::string_view text);

  std::size_t degree() const { return units_.size(); }
  std::span<const Unit> units() const { return units_; }
  const Unit& unit(std::size_t i) const { return units_[i]; }
  const Permutation& perm() const { return k_; }

  bool is_identity() const {
    for (const Unit& u : units_)
      if (!u.is_one()) return false;
    return k_.is_identity();
  }
  bool is_diagonal() const { return k_.is_identity(); }

  // Row i: u_i e_{i^k1}, then row i^k1 of the right factor.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Monomial: degree mismatch");
    std::vector<Unit> units(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) units[i] = a.units_[i] * b.units_[a.k_[i]];
    return Monomial(std::move(units), a.k_ * b.k_);
  }

  Monomial inverse() const {
    std::vector<Unit> units(degree());
    for (std::size_t i = 0; i < degree(); ++i) units[k_[i]] = units_[i].inverse();
    return Monomial(std::move(units), k_.inverse());
  }

  ExactMatrix<Scalar> to_matrix() const {
    ExactMatrix<Scalar> m = ExactMatrix<Scalar>::Zero(degree(), degree());
    for (std::size_t i = 0; i < degree(); ++i) m(i, k_[i]) = units_[i].scalar();
    return m;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < degree(); ++i) {
      if (i) s += ',';
      s += units_[i].str();
    }
    s += ']';
    if (!k_.is_identity()) s += k_.str();
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Unit> units_;
  Permutation k_;
};

using MonomialMatrix = Monomial<CubeRoot>;
using MonomialBMatrix = Monomial<SplitUnit>;

template <class Unit>
Monomial<Unit> Monomial<Unit>::parse(std::string_view text) {
  auto open = text.find('[');
  auto close = text.find(']');
  if (open != 0 || close == std::string_view::npos) throw ParseError("monomial \"" + std::string(text) + "\": expected [..]");
  std::vector<Unit> units;
  std::string_view body = text.substr(1, close - 1);
  while (!body.empty()) {
    auto comma = body.find(',');
    units.push_back(Unit::parse(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  std::string_view rest = text.substr(close + 1);
  Permutation k = rest.empty() ? Permutation(units.size()) : Permutation::from_cycles(rest, units.size());
  return Monomial(std::move(units), std::move(k));
}

inline MonomialMatrix mono_compose(const MonomialMatrix& a, const MonomialMatrix& b) { return a * b; }
inline MonomialMatrix mono_inverse(const MonomialMatrix& a) { return a.inverse(); }
inline EisMatrix mono_to_matrix(const MonomialMatrix& a) { return a.to_matrix(); }
inline MonomialBMatrix monoB_compose(const MonomialBMatrix& a, const MonomialBMatrix& b) { return a * b; }
inline SqMatrix monoB_to_matrix(const MonomialBMatrix& a) { return a.to_matrix(); }

template <class Unit>
const Permutation& pi(const Monomial<Unit>& a) {
  return a.perm();
}

/// Entrywise complex conjugation: phases negated, K unchanged.
MonomialMatrix mono_conj_entries(const MonomialMatrix& a);

/// det(D K) = sign(K) * w^(sum of phases).
EisensteinRational determinant(const MonomialMatrix& a);

/// A with every unit multiplied on the right by B^beta_power.
MonomialBMatrix times_beta(const MonomialBMatrix& a, int beta_power = 1);
MonomialBMatrix to_split(const MonomialMatrix& a);

template <class Unit>
struct MonomialHash {
  std::size_t operator()(const Monomial<Unit>& a) const noexcept {
    std::size_t h = PermutationHash{}(a.perm());
    for (const Unit& u : a.units()) h = h * 31 + static_cast<std::size_t>(u.code());
    return h;
  }
};

}  // namespace h6

#endif  // H6_MONOMIAL_HPP
