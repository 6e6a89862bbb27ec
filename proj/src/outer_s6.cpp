#include "h6/outer_s6.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "h6/grouptheory.hpp"

namespace h6 {

namespace {

const Permutation& transposition12() {
  static const Permutation g = parse_cycles("(1,2)", 6);
  return g;
}

const Permutation& six_cycle() {
  static const Permutation g = parse_cycles("(1,2,3,4,5,6)", 6);
  return g;
}

Duad apply(const Permutation& g, const Duad& d) {
  int a = g[static_cast<std::size_t>(d.first - 1)] + 1;
  int b = g[static_cast<std::size_t>(d.second - 1)] + 1;
  return a < b ? Duad{a, b} : Duad{b, a};
}

Syntheme apply(const Permutation& g, const Syntheme& s) {
  Syntheme out{apply(g, s[0]), apply(g, s[1]), apply(g, s[2])};
  std::sort(out.begin(), out.end());
  return out;
}

SynthematicTotal apply(const Permutation& g, const SynthematicTotal& t) {
  SynthematicTotal out;
  for (std::size_t k = 0; k < 5; ++k) out.synthemes[k] = apply(g, t.synthemes[k]);
  std::sort(out.synthemes.begin(), out.synthemes.end());
  return out;
}

bool disjoint(const Syntheme& a, const Syntheme& b) {
  for (const Duad& x : a)
    for (const Duad& y : b)
      if (x == y) return false;
  return true;
}

}  // namespace

const std::vector<Permutation>& s6_elements() {
  static const std::vector<Permutation> elements = [] {
    std::vector<Permutation::Point> images(6);
    std::iota(images.begin(), images.end(), Permutation::Point{0});
    std::vector<Permutation> out;
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return elements;
}

AutoTable::AutoTable(std::unordered_map<Permutation, Permutation, PermutationHash> table) : table_(std::move(table)) {
  if (table_.size() != 720) throw std::invalid_argument("AutoTable: expected 720 entries");
}

const Permutation& AutoTable::operator()(const Permutation& g) const {
  auto it = table_.find(g);
  if (it == table_.end()) throw std::out_of_range("AutoTable: " + g.str() + " is not in S6");
  return it->second;
}

bool AutoTable::is_bijective() const {
  std::unordered_map<Permutation, int, PermutationHash> hits;
  for (const auto& [g, image] : table_) {
    if (image.degree() != 6) return false;
    if (++hits[image] > 1) return false;
  }
  return hits.size() == 720;
}

bool AutoTable::is_multiplicative() const {
  if (!(*this)(Permutation(6)).is_identity()) return false;
  for (const Permutation& g : s6_elements())
    for (const Permutation* s : {&transposition12(), &six_cycle()})
      if ((*this)(g * *s) != (*this)(g) * (*this)(*s)) return false;
  return true;
}

bool AutoTable::is_multiplicative_exhaustive() const {
  for (const Permutation& g : s6_elements()) {
    const Permutation& tg = (*this)(g);
    for (const Permutation& h : s6_elements())
      if ((*this)(g * h) != tg * (*this)(h)) return false;
  }
  return true;
}

AutoTable build_outer() {
  const std::pair<Permutation, Permutation> pairs[] = {
      {parse_cycles("(2,3,4,5,6)", 6), parse_cycles("(2,3,4,5,6)", 6)},
      {parse_cycles("(1,2)", 6), parse_cycles("(1,2)(3,6)(4,5)", 6)},
  };
  GroupHom hom = hom_closure(pairs);
  AutoTable t(std::move(hom.table));
  if (!t.is_bijective()) throw NotAHomomorphism("build_outer: table is not bijective");
  return t;
}

AutoTable identity_table() {
  std::unordered_map<Permutation, Permutation, PermutationHash> m;
  for (const Permutation& g : s6_elements()) m.emplace(g, g);
  return AutoTable(std::move(m));
}

AutoTable inner_table(const Permutation& h) {
  std::unordered_map<Permutation, Permutation, PermutationHash> m;
  for (const Permutation& g : s6_elements()) m.emplace(g, conjugate(g, h));
  return AutoTable(std::move(m));
}

AutoTable compose(const AutoTable& first, const AutoTable& second) {
  std::unordered_map<Permutation, Permutation, PermutationHash> m;
  for (const Permutation& g : s6_elements()) m.emplace(g, second(first(g)));
  return AutoTable(std::move(m));
}

std::optional<Permutation> compare_up_to_inner(const AutoTable& t1, const AutoTable& t2) {
  for (const Permutation& h : s6_elements()) {
    bool all = true;
    for (const Permutation& g : s6_elements()) {
      if (t1(g) != conjugate(t2(g), h)) {
        all = false;
        break;
      }
    }
    if (all) return h;
  }
  return std::nullopt;
}

std::optional<Permutation> is_inner(const AutoTable& t) {
  if (!t.is_multiplicative()) throw NotAHomomorphism("is_inner: table is not multiplicative");
  return compare_up_to_inner(t, identity_table());
}

std::vector<Syntheme> all_synthemes() {
  std::vector<Syntheme> out;
  // 1 pairs with b, the smallest remaining point with c, the last two together
  for (int b = 2; b <= 6; ++b) {
    std::vector<int> rest;
    for (int p = 2; p <= 6; ++p)
      if (p != b) rest.push_back(p);
    for (std::size_t k = 1; k < 4; ++k) {
      std::vector<int> last;
      for (std::size_t m = 1; m < 4; ++m)
        if (m != k) last.push_back(rest[m]);
      Syntheme s{Duad{1, b}, Duad{rest[0], rest[k]}, Duad{last[0], last[1]}};
      std::sort(s.begin(), s.end());
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SynthematicTotal> sylvester_totals() {
  const std::vector<Syntheme> s = all_synthemes();
  std::vector<SynthematicTotal> totals;
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!disjoint(s[a], s[b])) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!disjoint(s[a], s[c]) || !disjoint(s[b], s[c])) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (!disjoint(s[a], s[d]) || !disjoint(s[b], s[d]) || !disjoint(s[c], s[d])) continue;
          for (std::size_t e = d + 1; e < n; ++e) {
            if (!disjoint(s[a], s[e]) || !disjoint(s[b], s[e]) || !disjoint(s[c], s[e]) || !disjoint(s[d], s[e]))
              continue;
            totals.push_back({{s[a], s[b], s[c], s[d], s[e]}});
          }
        }
      }
    }
  std::sort(totals.begin(), totals.end());
  return totals;
}

AutoTable totals_outer() {
  const std::vector<SynthematicTotal> totals = sylvester_totals();
  std::map<SynthematicTotal, Permutation::Point> index;
  for (std::size_t k = 0; k < totals.size(); ++k) index.emplace(totals[k], static_cast<Permutation::Point>(k));
  std::unordered_map<Permutation, Permutation, PermutationHash> m;
  for (const Permutation& g : s6_elements()) {
    std::vector<Permutation::Point> images(totals.size());
    for (std::size_t k = 0; k < totals.size(); ++k) {
      auto it = index.find(apply(g, totals[k]));
      if (it == index.end()) throw std::logic_error("totals_outer: image is not a total");
      images[k] = it->second;
    }
    m.emplace(g, Permutation(std::move(images)));
  }
  AutoTable t(std::move(m));
  if (!t.is_multiplicative() || !t.is_bijective()) throw std::logic_error("totals_outer: not an automorphism");
  return t;
}

nlohmann::json outer_to_json(const AutoTable& t) {
  nlohmann::json out;
  const Permutation five = parse_cycles("(2,3,4,5,6)", 6);
  out["generator_images"] = {{five.str(), t(five).str()}, {transposition12().str(), t(transposition12()).str()}};
  out["table"] = nlohmann::json::array();
  for (const Permutation& g : s6_elements()) out["table"].push_back({g.str(), t(g).str()});
  return out;
}

Report verify_outer() {
  Report r;
  r.suite = "outer";
  AutoTable sigma = build_outer();
  r.check("sigma_bijective", "sigma is a bijection of S6", sigma.is_bijective());
  r.check("sigma_multiplicative", "sigma(gh) = sigma(g) sigma(h) for all 720^2 pairs", sigma.is_multiplicative_exhaustive());
  r.check("sigma_12", "sigma((1,2))", "(1,2)(3,6)(4,5)", sigma(transposition12()).str());
  r.check("sigma_s", "sigma((1,2,3,4,5,6))", "(1,2,6)(3,5)", sigma(six_cycle()).str());
  r.check("sigma_outer", "sigma is not inner", !is_inner(sigma).has_value());
  bool swaps = true;
  for (const Permutation& g : s6_elements())
    if (g.cycle_type() == std::vector<int>{2, 1, 1, 1, 1}) swaps = swaps && sigma(g).cycle_type() == std::vector<int>{2, 2, 2};
  r.check("transpositions", "sigma sends every transposition to a triple transposition", swaps);
  r.check("sigma_squared_inner", "sigma^2 is inner", is_inner(compose(sigma, sigma)).has_value());

  const std::vector<Syntheme> synthemes = all_synthemes();
  const std::vector<SynthematicTotal> totals = sylvester_totals();
  r.check("synthemes", "number of synthemes", "15", std::to_string(synthemes.size()));
  r.check("totals", "number of synthematic totals", "6", std::to_string(totals.size()));
  AutoTable by_totals = totals_outer();
  r.check("totals_outer", "the action on totals is not inner", !is_inner(by_totals).has_value());
  r.check("sigma_matches_totals", "sigma agrees with the action on totals up to an inner automorphism",
          compare_up_to_inner(sigma, by_totals).has_value());
  return r;
}

}  // namespace h6
