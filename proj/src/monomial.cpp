#include "h6/monomial.hpp"

namespace h6 {

std::string CubeRoot::str() const {
  static const char* const kNames[] = {"1", "w", "w2"};
  return kNames[phase];
}

CubeRoot CubeRoot::parse(std::string_view text) {
  if (text == "1") return make(0);
  if (text == "w") return make(1);
  if (text == "w2") return make(2);
  throw ParseError("cube root \"" + std::string(text) + "\": expected 1, w or w2");
}

SplitQuaternion SplitUnit::scalar() const {
  EisensteinRational u = EisensteinRational::root(phase);
  if (beta) return {EisensteinRational(0), std::move(u)};
  return SplitQuaternion(std::move(u));
}

std::string SplitUnit::str() const {
  if (!beta) return CubeRoot{phase}.str();
  return phase == 0 ? std::string("B") : CubeRoot{phase}.str() + "B";
}

SplitUnit SplitUnit::parse(std::string_view text) {
  if (text == "B") return make(0, 1);
  if (!text.empty() && text.back() == 'B') return make(CubeRoot::parse(text.substr(0, text.size() - 1)).phase, 1);
  return make(CubeRoot::parse(text).phase, 0);
}

MonomialMatrix mono_conj_entries(const MonomialMatrix& a) {
  std::vector<CubeRoot> units(a.units().begin(), a.units().end());
  for (CubeRoot& u : units) u = u.conj();
  return MonomialMatrix(std::move(units), a.perm());
}

EisensteinRational determinant(const MonomialMatrix& a) {
  int total = 0;
  for (const CubeRoot& u : a.units()) total += u.phase;
  return EisensteinRational(a.perm().sign()) * EisensteinRational::root(total);
}

MonomialBMatrix times_beta(const MonomialBMatrix& a, int beta_power) {
  std::vector<SplitUnit> units(a.units().begin(), a.units().end());
  for (SplitUnit& u : units) u = u * SplitUnit::make(0, beta_power);
  return MonomialBMatrix(std::move(units), a.perm());
}

MonomialBMatrix to_split(const MonomialMatrix& a) {
  std::vector<SplitUnit> units;
  units.reserve(a.degree());
  for (const CubeRoot& u : a.units()) units.push_back(SplitUnit::make(u.phase, 0));
  return MonomialBMatrix(std::move(units), a.perm());
}

}  // namespace h6
