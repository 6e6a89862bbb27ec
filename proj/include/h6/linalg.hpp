#ifndef H6_LINALG_HPP
#define H6_LINALG_HPP

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "json.hpp"

#include "h6/exactnum.hpp"

namespace h6 {

/// Dense matrix over an exact ring. Indices are 0-based here; anything
/// printed for humans is 1-based.
template <class Scalar>
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using EisMatrix = ExactMatrix<EisensteinRational>;
using SqMatrix = ExactMatrix<SplitQuaternion>;

/// Rings with an entrywise complex conjugation. SplitQuaternion is
/// deliberately not one of them.
template <class Scalar>
concept Conjugable = requires(const Scalar& x) {
  { conj(x) } -> std::convertible_to<Scalar>;
};

/// Thrown by is_hadamard when an entry is not of absolute value one.
class NotUnimodular : public std::domain_error {
 public:
  NotUnimodular(Eigen::Index row, Eigen::Index col)
      : std::domain_error("entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                          ") is not unimodular"),
        row_(row),
        col_(col) {}
  Eigen::Index row() const { return row_; }
  Eigen::Index col() const { return col_; }

 private:
  Eigen::Index row_;
  Eigen::Index col_;
};

/// The complex Hadamard matrix of order six with entries in {1, w, conj(w)}.
EisMatrix h6();

template <class Scalar>
ExactMatrix<Scalar> identity(Eigen::Index n) {
  return ExactMatrix<Scalar>::Identity(n, n);
}

template <class Scalar>
ExactMatrix<Scalar> mat_mul(const ExactMatrix<Scalar>& a, const ExactMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  // Coefficient-wise product keeps the left factor on the left, which the
  // non-commutative split quaternions need.
  return a.lazyProduct(b);
}

template <class Scalar>
  requires Conjugable<Scalar>
ExactMatrix<Scalar> conj_entries(const ExactMatrix<Scalar>& a) {
  return a.unaryExpr([](const Scalar& x) -> Scalar { return conj(x); });
}

template <class Scalar>
  requires Conjugable<Scalar>
ExactMatrix<Scalar> dagger(const ExactMatrix<Scalar>& a) {
  return conj_entries(a).transpose();
}

/// True iff A A^dagger = n I exactly. Non-square input throws
/// std::invalid_argument, a non-unimodular entry throws NotUnimodular.
bool is_hadamard(const EisMatrix& a);

/// Embed a matrix over Q(w) into the split quaternions.
SqMatrix lift(const EisMatrix& a);

/// Canonical byte string (dimensions then row-major entries); equal
/// matrices and only equal matrices share a key.
template <class Scalar>
std::string canonical_key(const ExactMatrix<Scalar>& a) {
  std::string key;
  key.reserve(static_cast<std::size_t>(a.size()) * 40 + 8);
  key += std::to_string(a.rows());
  key += 'x';
  key += std::to_string(a.cols());
  key += ':';
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j).append_key(key);
  return key;
}

struct MatrixKeyHash {
  template <class Scalar>
  std::size_t operator()(const ExactMatrix<Scalar>& a) const {
    return std::hash<std::string>{}(canonical_key(a));
  }
};

template <class Scalar>
bool equal(const ExactMatrix<Scalar>& a, const ExactMatrix<Scalar>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

/// Rank over a field by exact Gaussian elimination.
template <class Scalar>
Eigen::Index exact_rank(ExactMatrix<Scalar> m) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(rank).swap(m.row(pivot));
    Scalar inv = m(rank, col).inverse();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      Scalar f = m(r, col) * inv;
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

/// Array of arrays of entry strings.
template <class Scalar>
nlohmann::json matrix_to_json(const ExactMatrix<Scalar>& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace h6

#endif  // H6_LINALG_HPP
