#include "h6/linalg.hpp"

namespace h6 {

EisMatrix h6() {
  // Exponents of w; row 1 and column 1 are constant, the trailing 5x5 block
  // is circulant on (0, 1, 2, 2, 1).
  static constexpr int kPhase[6][6] = {
      {0, 0, 0, 0, 0, 0}, {0, 0, 1, 2, 2, 1}, {0, 1, 0, 1, 2, 2},
      {0, 2, 1, 0, 1, 2}, {0, 2, 2, 1, 0, 1}, {0, 1, 2, 2, 1, 0},
  };
  EisMatrix h(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) h(i, j) = EisensteinRational::root(kPhase[i][j]);
  return h;
}

bool is_hadamard(const EisMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("is_hadamard: matrix is not square");
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j).norm() != 1) throw NotUnimodular(i, j);
  const auto n = static_cast<int>(a.rows());
  EisMatrix expected = EisensteinRational(n) * identity<EisensteinRational>(a.rows());
  return equal(mat_mul(a, dagger(a)), expected);
}

SqMatrix lift(const EisMatrix& a) {
  return a.unaryExpr([](const EisensteinRational& x) { return SplitQuaternion(x); });
}

}  // namespace h6
