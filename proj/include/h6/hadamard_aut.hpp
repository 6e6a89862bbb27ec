#ifndef H6_HADAMARD_AUT_HPP
#define H6_HADAMARD_AUT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "h6/grouptheory.hpp"
#include "h6/linalg.hpp"
#include "h6/monomial.hpp"
#include "h6/report.hpp"

namespace h6 {

/// Element (P, Q, eps) of the group X acting on 6x6 matrices by
/// H^(P,Q,eps) = conj^eps(P^-1 H Q).
///
/// Product: (P1,Q1,e1)(P2,Q2,e2) = (P1 conj^e1(P2), Q1 conj^e1(Q2), e1+e2),
/// which makes H^(gh) = (H^g)^h.
struct XElement {
  MonomialMatrix p = MonomialMatrix::identity(6);
  MonomialMatrix q = MonomialMatrix::identity(6);
  std::uint8_t eps = 0;

  static XElement identity() { return {}; }
  static XElement parse(std::string_view p_text, std::string_view q_text, int eps = 0);

  XElement inverse() const;
  bool is_identity() const { return eps == 0 && p.is_identity() && q.is_identity(); }
  std::string str() const;

  friend XElement operator*(const XElement& g, const XElement& h);
  friend bool operator==(const XElement&, const XElement&) = default;
};

inline XElement x_compose(const XElement& g, const XElement& h) { return g * h; }
inline XElement x_inverse(const XElement& g) { return g.inverse(); }

XElement tau1();
XElement tau2();
XElement star();
/// ((1,2), (1,2)(3,6)(4,5)) as written; equals [tau2,*]^-1 tau2.
XElement tau2prime();
XElement sylow_x();
XElement sylow_y();
/// (wI, wI)
XElement omega_scalar();
/// [tau2, *]^(tau1^(k-2)): the diagonal of the first component is row k of H6,
/// so n(2) = [tau2, *].
XElement n_element(int k);

/// conj^eps(P^-1 H Q), computed by moving and rotating entries.
EisMatrix x_act(const XElement& g, const EisMatrix& h);
/// Same action through full matrix products; the reference route.
EisMatrix x_act_by_products(const XElement& g, const EisMatrix& h);

/// Faithful action on 36 points (0-based here). Point 6a+i is the vector
/// w^a e_i on the row side, 18+6a+i the same vector on the column side; g
/// sends v to conj^eps(P^-1 v) and conj^eps(Q^-1 v) respectively, i.e.
/// (i,a) -> (i^K, a - phase_i) with the phase negated under eps.
Permutation x_to_perm36(const XElement& g);
/// The row half of x_to_perm36 (18 points); has kernel 3^5 on X.
Permutation x_to_perm18(const XElement& g);
/// Inverse of x_to_perm36 on its image. Throws std::invalid_argument for
/// permutations that are not images.
XElement x_from_perm36(const Permutation& g);

std::vector<Permutation> to_perm36(std::span<const XElement> gens);

/// Block map of the 36 points onto the 12 rows and columns (phases forgotten).
std::vector<std::size_t> row_column_blocks();
/// Block map for the 18-point action: rows stay, all columns share one block.
std::vector<std::size_t> row_point_blocks();

struct AutStar {
  std::vector<XElement> generators;  // kept Schreier generators
  std::uint64_t order = 0;
  std::size_t orbit_size = 0;
  BSGS group;  // on 36 points
};

/// Stabilizer of h6() in X = <tau1, tau2, *> by orbit-stabilizer.
AutStar compute_aut_star();

struct AutLinear {
  std::vector<XElement> generators;
  std::uint64_t order = 0;
  std::uint64_t derived_order = 0;
  std::vector<XElement> center;  // generators of the center
  std::uint64_t center_order = 0;
  std::uint64_t quotient_order = 0;
  bool quotient_simple = false;
  BSGS group;
};

/// The eps = 0 part of the stabilizer, with perfectness, center and
/// central-quotient data.
AutLinear compute_aut_linear(const AutStar& star_group);
AutLinear compute_aut_linear();

struct SubmoduleCheck {
  bool pass = false;
  std::size_t module_order = 0;           // |M|
  std::size_t nonconstant_generating = 0;  // non-constant v with closure M
  std::size_t nonconstant_total = 0;
  std::size_t constant_closure = 0;  // closure order of a nonzero constant
};

/// Closure of v in M = {x in (Z/3)^6 : sum x = 0} under S6 coordinate
/// permutations and addition. Phases given as exponents of w.
std::size_t submodule_closure_order(const std::array<int, 6>& v);
SubmoduleCheck m_submodule_details();
bool m_submodule_check();

/// Order of one of X, X0, N, Y, autstar, aut; throws std::invalid_argument
/// for any other name.
std::uint64_t named_group_order(const std::string& name);

Report verify_prop1();
Report verify_prop2();
Report verify_submodule();

}  // namespace h6

#endif  // H6_HADAMARD_AUT_HPP
