#include "h6/exactnum.hpp"

#include <cstring>
#include <stdexcept>

namespace h6 {

namespace {

void append_rational_key(std::string& out, const Rational& q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_fits_slong_p(num.get_mpz_t()) && mpz_fits_slong_p(den.get_mpz_t())) {
    long parts[2] = {num.get_si(), den.get_si()};
    char buf[1 + sizeof parts];
    buf[0] = 's';
    std::memcpy(buf + 1, parts, sizeof parts);
    out.append(buf, sizeof buf);
    return;
  }
  out.push_back('b');
  out += q.get_str(62);
  out.push_back('\0');
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

EisensteinRational::EisensteinRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

EisensteinRational EisensteinRational::omega() { return {Rational(0), Rational(1)}; }

EisensteinRational EisensteinRational::omega_bar() { return {Rational(-1), Rational(-1)}; }

EisensteinRational EisensteinRational::root(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return 1;
    case 1:
      return omega();
    default:
      return omega_bar();
  }
}

Rational EisensteinRational::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

// a + b*conj(w) = a + b*(-1 - w)
EisensteinRational EisensteinRational::conj() const { return {a_ - b_, -b_}; }

EisensteinRational EisensteinRational::inverse() const {
  if (is_zero()) throw std::domain_error("EisensteinRational: inverse of zero");
  Rational n = norm();
  EisensteinRational c = conj();
  return {c.a_ / n, c.b_ / n};
}

EisensteinRational EisensteinRational::times_root(int k) const {
  EisensteinRational r = *this;
  for (int i = ((k % 3) + 3) % 3; i > 0; --i) {
    // w*(a + b w) = -b + (a - b) w
    Rational na = -r.b_;
    r.b_ = r.a_ - r.b_;
    r.a_ = std::move(na);
  }
  return r;
}

EisensteinRational& EisensteinRational::operator+=(const EisensteinRational& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EisensteinRational& EisensteinRational::operator-=(const EisensteinRational& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

EisensteinRational& EisensteinRational::operator*=(const EisensteinRational& o) {
  // (a1 + b1 w)(a2 + b2 w) = (a1 a2 - b1 b2) + (a1 b2 + b1 a2 - b1 b2) w
  // In place, with o possibly aliasing *this.
  Rational bb = b_ * o.b_;
  Rational ab = a_ * o.b_;
  b_ *= o.a_;
  b_ += ab;
  b_ -= bb;
  a_ *= o.a_;
  a_ -= bb;
  return *this;
}

EisensteinRational& EisensteinRational::operator/=(const EisensteinRational& o) { return *this *= o.inverse(); }

std::string EisensteinRational::str() const {
  std::string s = rational_str(a_);
  if (sgn(b_) < 0) {
    s += "-";
    s += rational_str(-b_);
  } else {
    s += "+";
    s += rational_str(b_);
  }
  s += "*w";
  return s;
}

void EisensteinRational::append_key(std::string& out) const {
  append_rational_key(out, a_);
  append_rational_key(out, b_);
}

std::ostream& operator<<(std::ostream& os, const EisensteinRational& x) { return os << x.str(); }

SplitQuaternion& SplitQuaternion::operator+=(const SplitQuaternion& o) {
  z_ += o.z_;
  w_ += o.w_;
  return *this;
}

SplitQuaternion& SplitQuaternion::operator-=(const SplitQuaternion& o) {
  z_ -= o.z_;
  w_ -= o.w_;
  return *this;
}

SplitQuaternion& SplitQuaternion::operator*=(const SplitQuaternion& o) {
  // B u = conj(u) B and B^2 = 1
  EisensteinRational nz = z_ * o.z_ + w_ * o.w_.conj();
  EisensteinRational nw = z_ * o.w_ + w_ * o.z_.conj();
  z_ = std::move(nz);
  w_ = std::move(nw);
  return *this;
}

std::string SplitQuaternion::str() const { return "(" + z_.str() + ")+(" + w_.str() + ")*B"; }

void SplitQuaternion::append_key(std::string& out) const {
  z_.append_key(out);
  w_.append_key(out);
}

std::ostream& operator<<(std::ostream& os, const SplitQuaternion& x) { return os << x.str(); }

}  // namespace h6

std::size_t std::hash<h6::EisensteinRational>::operator()(const h6::EisensteinRational& x) const noexcept {
  std::string key;
  x.append_key(key);
  return std::hash<std::string>{}(key);
}

std::size_t std::hash<h6::SplitQuaternion>::operator()(const h6::SplitQuaternion& x) const noexcept {
  std::string key;
  x.append_key(key);
  return std::hash<std::string>{}(key);
}
