#ifndef H6_SPLITQUAT_REP_HPP
#define H6_SPLITQUAT_REP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "h6/hadamard_aut.hpp"
#include "h6/monomial.hpp"
#include "h6/report.hpp"

namespace h6 {

/// Image of an element of Aut*(H6) under g -> (P B^eps, Q B^eps), B = beta I.
struct BRepElement {
  MonomialBMatrix a = MonomialBMatrix::identity(6);
  MonomialBMatrix b = MonomialBMatrix::identity(6);

  friend BRepElement operator*(const BRepElement& x, const BRepElement& y) { return {x.a * y.a, x.b * y.b}; }
  friend bool operator==(const BRepElement&, const BRepElement&) = default;
  std::string str() const { return "(" + a.str() + ", " + b.str() + ")"; }
};

class NotInStabilizer : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws NotInStabilizer unless g fixes h6().
BRepElement b_rep(const XElement& g);

/// H6 * inner * H6^-1 == outer, checked as H6 * inner * dagger(H6) == 6 * outer
/// over the split quaternions.
bool intertwines(const MonomialBMatrix& inner, const MonomialBMatrix& outer);
/// intertwines(b_rep(g).b, b_rep(g).a)
bool verify_intertwining(const XElement& g);

/// Both sides of the intertwining identity for tau2 *, written with B on
/// the right: [B,B,w2B,wB,wB,w2B](1,2)(3,6)(4,5) and [B,B,wB,w2B,w2B,wB](1,2).
MonomialBMatrix intertwining_inner();
MonomialBMatrix intertwining_outer();

/// Generators of the eps = 0 subgroup of <tau1, tau2 *> (the triple cover of A6).
std::vector<XElement> linear_generators();

/// Dimension over Q(w) of the space of 6x6 matrices commuting with every
/// given matrix.
std::size_t commutant_dimension(const std::vector<EisMatrix>& matrices);

/// Random word of `length` letters in {tau1, tau2 *} and their inverses.
XElement random_word(std::uint64_t& state, int length);

Report verify_theorem(std::uint64_t seed = 20120301);

}  // namespace h6

#endif  // H6_SPLITQUAT_REP_HPP
