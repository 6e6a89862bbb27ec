#include "h6/splitquat_rep.hpp"

#include <random>

namespace h6 {

BRepElement b_rep(const XElement& g) {
  const EisMatrix h = h6();
  if (!equal(x_act(g, h), h)) throw NotInStabilizer("b_rep: " + g.str() + " does not fix H6");
  return {times_beta(to_split(g.p), g.eps), times_beta(to_split(g.q), g.eps)};
}

bool intertwines(const MonomialBMatrix& inner, const MonomialBMatrix& outer) {
  const EisMatrix h = h6();
  SqMatrix lhs = mat_mul(mat_mul(lift(h), monoB_to_matrix(inner)), lift(dagger(h)));
  SqMatrix rhs = SplitQuaternion(6) * monoB_to_matrix(outer);
  return equal(lhs, rhs);
}

bool verify_intertwining(const XElement& g) {
  BRepElement r = b_rep(g);
  return intertwines(r.b, r.a);
}

MonomialBMatrix intertwining_inner() { return MonomialBMatrix::parse("[B,B,w2B,wB,wB,w2B](1,2)(3,6)(4,5)"); }

MonomialBMatrix intertwining_outer() { return MonomialBMatrix::parse("[B,B,wB,w2B,w2B,wB](1,2)"); }

std::vector<XElement> linear_generators() {
  const std::vector<XElement> gens{tau1(), tau2() * star()};
  BSGS group(36);
  auto act = [](int bit, const XElement& g) { return bit ^ g.eps; };
  auto key = [](int bit) { return std::to_string(bit); };
  auto keep = [&](const XElement& g) { return group.extend(x_to_perm36(g)); };
  return orbit_stabilizer<XElement>(std::span<const XElement>(gens), 0, act, key, keep).stabilizer_gens;
}

std::size_t commutant_dimension(const std::vector<EisMatrix>& matrices) {
  // Unknown C, variable 6i+k for C[i][k]; one equation per entry of CA - AC.
  const Eigen::Index n = 6;
  EisMatrix system = EisMatrix::Zero(n * n * static_cast<Eigen::Index>(matrices.size()), n * n);
  Eigen::Index row = 0;
  for (const EisMatrix& a : matrices) {
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("commutant_dimension: expected 6x6 matrices");
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j, ++row)
        for (Eigen::Index k = 0; k < n; ++k) {
          system(row, n * i + k) += a(k, j);
          system(row, n * k + j) -= a(i, k);
        }
  }
  return static_cast<std::size_t>(n * n - exact_rank(system));
}

XElement random_word(std::uint64_t& state, int length) {
  std::mt19937_64 rng(state);
  const XElement letters[] = {tau1(), tau1().inverse(), tau2() * star(), (tau2() * star()).inverse()};
  std::uniform_int_distribution<int> pick(0, 3);
  XElement w;
  for (int k = 0; k < length; ++k) w = w * letters[pick(rng)];
  state = rng();
  return w;
}

Report verify_theorem(std::uint64_t seed) {
  Report r;
  r.suite = "theorem";
  const XElement t1 = tau1(), t2s = tau2() * star(), t2p = tau2prime();

  const SplitQuaternion beta = SplitQuaternion::beta();
  const SplitQuaternion bw = beta * SplitQuaternion(EisensteinRational::omega());
  const SplitQuaternion bwbar = beta * SplitQuaternion(EisensteinRational::omega_bar());
  r.check("beta_squared", "B^2 = 1", (beta * beta) == SplitQuaternion(1));
  r.check("beta_omega_squared", "(Bw)^2 = (Bw')^2 = 1", bw * bw == SplitQuaternion(1) && bwbar * bwbar == SplitQuaternion(1));

  BRepElement rep = b_rep(t2s);
  r.check("displayed_inner", "second component of tau2 * with B", intertwining_inner().str(), rep.b.str());
  r.check("displayed_outer", "first component of tau2 * with B", intertwining_outer().str(), rep.a.str());
  r.check("displayed_equation", "H6 [inner] H6^-1 = [outer]", intertwines(intertwining_inner(), intertwining_outer()));
  const MonomialBMatrix outer = intertwining_outer();
  r.check("outer_involution", "the right-hand side is an involution", (outer * outer).is_identity());
  r.check("star_rep", "* is realised by (B I, B I)",
          (times_beta(MonomialBMatrix::identity(6)) * times_beta(MonomialBMatrix::identity(6))).is_identity());

  r.check("intertwining_generators", "H6 intertwines both projections on tau1 and tau2 *",
          verify_intertwining(t1) && verify_intertwining(t2s) && verify_intertwining(XElement::identity()));
  std::uint64_t state = seed;
  bool intertwined = true, multiplicative = true;
  for (int k = 0; k < 100; ++k) {
    XElement u = random_word(state, 10);
    XElement v = random_word(state, 10);
    intertwined = intertwined && verify_intertwining(u);
    multiplicative = multiplicative && b_rep(u * v) == b_rep(u) * b_rep(v);
  }
  r.check("intertwining_random", "H6 intertwines the projections on 100 random words", intertwined);
  r.check("brep_homomorphism", "g -> (P B^eps, Q B^eps) is multiplicative on 100 random word pairs", multiplicative);

  auto show = [](const std::vector<int>& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + "}";
  };
  const std::string rho1 = show(cycle_type(pi(t2p.p)));
  const std::string rho2 = show(cycle_type(pi(t2p.q)));
  r.check("cycle_type_rho1", "tau2' first projection is a transposition", "{2,1,1,1,1}", rho1);
  r.check("cycle_type_rho2", "tau2' second projection is a triple transposition", "{2,2,2}", rho2);
  r.check("projections_not_conjugate", "rho1 pi and rho2 pi differ on tau2'", rho1 != rho2);

  std::vector<XElement> lin = linear_generators();
  std::vector<EisMatrix> mats;
  for (const XElement& g : lin) mats.push_back(mono_to_matrix(g.p));
  r.check("linear_order", "eps = 0 part of <tau1, tau2 *> has order 1080", "1080",
          std::to_string(BSGS::build(to_perm36(lin)).order()));
  r.check("commutant", "only scalars commute with the linear representation", "1",
          std::to_string(commutant_dimension(mats)));
  return r;
}

}  // namespace h6
