#ifndef H6_EXACTNUM_HPP
#define H6_EXACTNUM_HPP

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include <Eigen/Core>

namespace h6 {

using Rational = mpq_class;

/// Element a + b*w of the field Q(w), where w is a primitive cube root of
/// unity (w^2 = -1 - w). Components are kept in lowest terms by GMP.
class EisensteinRational {
 public:
  EisensteinRational() = default;
  EisensteinRational(int a) : a_(a) {}  // NOLINT: implicit from integers, needed by Eigen
  EisensteinRational(Rational a, Rational b);

  static EisensteinRational omega();
  static EisensteinRational omega_bar();
  /// w^k for any integer k.
  static EisensteinRational root(int k);

  const Rational& re_part() const { return a_; }  // coefficient of 1
  const Rational& w_part() const { return b_; }   // coefficient of w

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  /// Field norm x * conj(x) = a^2 - ab + b^2, always rational.
  Rational norm() const;

  EisensteinRational conj() const;
  EisensteinRational inverse() const;  // throws std::domain_error on zero
  /// Multiply by w^k; a rotation of the coefficients, no general product.
  EisensteinRational times_root(int k) const;

  EisensteinRational& operator+=(const EisensteinRational& o);
  EisensteinRational& operator-=(const EisensteinRational& o);
  EisensteinRational& operator*=(const EisensteinRational& o);
  EisensteinRational& operator/=(const EisensteinRational& o);

  friend EisensteinRational operator+(EisensteinRational x, const EisensteinRational& y) { return x += y; }
  friend EisensteinRational operator-(EisensteinRational x, const EisensteinRational& y) { return x -= y; }
  friend EisensteinRational operator*(EisensteinRational x, const EisensteinRational& y) { return x *= y; }
  friend EisensteinRational operator/(EisensteinRational x, const EisensteinRational& y) { return x /= y; }
  friend EisensteinRational operator-(const EisensteinRational& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const EisensteinRational& x, const EisensteinRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const EisensteinRational& x, const EisensteinRational& y) { return !(x == y); }

  /// Text form `a+b*w` (or `a-c*w` for negative b), rationals as `p/q`.
  std::string str() const;
  /// Canonical bytes of the reduced components; equal values give equal bytes.
  void append_key(std::string& out) const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const EisensteinRational& x);

inline EisensteinRational conj(const EisensteinRational& x) { return x.conj(); }

// Free-function spellings of the field operations.
inline EisensteinRational eis_add(const EisensteinRational& x, const EisensteinRational& y) { return x + y; }
inline EisensteinRational eis_mul(const EisensteinRational& x, const EisensteinRational& y) { return x * y; }
inline EisensteinRational eis_conj(const EisensteinRational& x) { return x.conj(); }

/// Element z + w*B of the exact split-quaternion subalgebra, B^2 = 1 and
/// B*u = conj(u)*B for u in Q(w). B is always written on the right.
class SplitQuaternion {
 public:
  SplitQuaternion() = default;
  SplitQuaternion(int z) : z_(z) {}  // NOLINT: implicit, needed by Eigen
  explicit SplitQuaternion(EisensteinRational z) : z_(std::move(z)) {}
  SplitQuaternion(EisensteinRational z, EisensteinRational w) : z_(std::move(z)), w_(std::move(w)) {}

  static SplitQuaternion beta() { return {EisensteinRational(0), EisensteinRational(1)}; }

  const EisensteinRational& z() const { return z_; }
  const EisensteinRational& w() const { return w_; }

  bool is_zero() const { return z_.is_zero() && w_.is_zero(); }

  SplitQuaternion& operator+=(const SplitQuaternion& o);
  SplitQuaternion& operator-=(const SplitQuaternion& o);
  SplitQuaternion& operator*=(const SplitQuaternion& o);

  friend SplitQuaternion operator+(SplitQuaternion x, const SplitQuaternion& y) { return x += y; }
  friend SplitQuaternion operator-(SplitQuaternion x, const SplitQuaternion& y) { return x -= y; }
  friend SplitQuaternion operator*(SplitQuaternion x, const SplitQuaternion& y) { return x *= y; }
  friend SplitQuaternion operator-(const SplitQuaternion& x) { return {-x.z_, -x.w_}; }

  friend bool operator==(const SplitQuaternion& x, const SplitQuaternion& y) {
    return x.z_ == y.z_ && x.w_ == y.w_;
  }
  friend bool operator!=(const SplitQuaternion& x, const SplitQuaternion& y) { return !(x == y); }

  /// `(z)+(w)*B`
  std::string str() const;
  void append_key(std::string& out) const;

 private:
  EisensteinRational z_;
  EisensteinRational w_;
};

std::ostream& operator<<(std::ostream& os, const SplitQuaternion& x);

/// (z1 + w1 B)(z2 + w2 B) = (z1 z2 + w1 conj(w2)) + (z1 w2 + w1 conj(z2)) B
inline SplitQuaternion sq_mul(const SplitQuaternion& p, const SplitQuaternion& q) { return p * q; }

}  // namespace h6

template <>
struct std::hash<h6::EisensteinRational> {
  std::size_t operator()(const h6::EisensteinRational& x) const noexcept;
};

template <>
struct std::hash<h6::SplitQuaternion> {
  std::size_t operator()(const h6::SplitQuaternion& x) const noexcept;
};

namespace Eigen {

template <>
struct NumTraits<h6::EisensteinRational> : GenericNumTraits<h6::EisensteinRational> {
  using Real = h6::EisensteinRational;
  using NonInteger = h6::EisensteinRational;
  using Literal = h6::EisensteinRational;
  using Nested = h6::EisensteinRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<h6::SplitQuaternion> : GenericNumTraits<h6::SplitQuaternion> {
  using Real = h6::SplitQuaternion;
  using NonInteger = h6::SplitQuaternion;
  using Literal = h6::SplitQuaternion;
  using Nested = h6::SplitQuaternion;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // H6_EXACTNUM_HPP
