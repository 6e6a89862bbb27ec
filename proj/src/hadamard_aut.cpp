#include "h6/hadamard_aut.hpp"

#include <algorithm>
#include <numeric>

namespace h6 {

namespace {

const MonomialMatrix& conj_if(const MonomialMatrix& m, bool flag, MonomialMatrix& scratch) {
  if (!flag) return m;
  scratch = mono_conj_entries(m);
  return scratch;
}

int mod3(int x) { return ((x % 3) + 3) % 3; }

// One half (rows or columns) of the 36-point action.
void fill_half(const MonomialMatrix& m, int eps, std::size_t offset, std::vector<Permutation::Point>& images) {
  for (int a = 0; a < 3; ++a) {
    for (std::size_t i = 0; i < 6; ++i) {
      int phase = mod3(a - m.unit(i).phase);
      if (eps) phase = mod3(-phase);
      images[offset + 6 * static_cast<std::size_t>(a) + i] =
          static_cast<Permutation::Point>(offset + 6 * static_cast<std::size_t>(phase) + m.perm()[i]);
    }
  }
}

// Decodes one half; returns eps.
int decode_half(const Permutation& g, std::size_t offset, MonomialMatrix& out) {
  std::vector<CubeRoot> units(6);
  std::vector<Permutation::Point> k(6);
  int eps = -1;
  for (std::size_t i = 0; i < 6; ++i) {
    std::size_t img0 = g[offset + i] - offset;
    std::size_t img1 = g[offset + 6 + i] - offset;
    if (img0 >= 18 || img1 >= 18 || img0 % 6 != img1 % 6) throw std::invalid_argument("not an image of X");
    int a0 = static_cast<int>(img0 / 6);
    int step = mod3(static_cast<int>(img1 / 6) - a0);
    int e = step == 1 ? 0 : 1;
    if (step == 0 || (eps >= 0 && e != eps)) throw std::invalid_argument("not an image of X");
    eps = e;
    units[i] = CubeRoot::make(e ? a0 : -a0);
    k[i] = static_cast<Permutation::Point>(img0 % 6);
  }
  out = MonomialMatrix(std::move(units), Permutation(std::move(k)));
  return eps;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

// Exponent vectors of (Z/3)^6 encoded base 3.
using Vec6 = std::array<int, 6>;

std::size_t rank_mod3(std::vector<Vec6> rows) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 6 && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [&](const Vec6& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    Vec6& p = rows[rank];
    int inv = p[col];  // 1 and 2 are their own inverses mod 3
    for (int& x : p) x = mod3(x * inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int f = rows[r][col];
      for (std::size_t c = 0; c < 6; ++c) rows[r][c] = mod3(rows[r][c] - f * p[c]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

XElement XElement::parse(std::string_view p_text, std::string_view q_text, int eps) {
  return {MonomialMatrix::parse(p_text), MonomialMatrix::parse(q_text), static_cast<std::uint8_t>(eps & 1)};
}

XElement operator*(const XElement& g, const XElement& h) {
  MonomialMatrix sp, sq;
  return {g.p * conj_if(h.p, g.eps, sp), g.q * conj_if(h.q, g.eps, sq), static_cast<std::uint8_t>((g.eps + h.eps) & 1)};
}

XElement XElement::inverse() const {
  MonomialMatrix pi = p.inverse();
  MonomialMatrix qi = q.inverse();
  if (eps) return {mono_conj_entries(pi), mono_conj_entries(qi), eps};
  return {std::move(pi), std::move(qi), eps};
}

std::string XElement::str() const { return "(" + p.str() + ", " + q.str() + (eps ? ", *)" : ")"); }

XElement tau1() { return XElement::parse("[1,1,1,1,1,1](2,3,4,5,6)", "[1,1,1,1,1,1](2,3,4,5,6)"); }

XElement tau2() { return XElement::parse("[1,1,w,w2,w2,w](1,2)", "[1,1,w2,w,w,w2](1,2)(3,6)(4,5)"); }

XElement star() { return {MonomialMatrix::identity(6), MonomialMatrix::identity(6), 1}; }

XElement tau2prime() { return XElement::parse("[1,1,1,1,1,1](1,2)", "[1,1,1,1,1,1](1,2)(3,6)(4,5)"); }

XElement sylow_x() { return XElement::parse("[w2,1,w,w,1,w2](1,2,3)", "[w,1,w,1,w2,w2](1,4,6)(2,3,5)"); }

XElement sylow_y() { return XElement::parse("[w,w2,1,1,w2,w](4,5,6)", "[w,w,w,w,w,w](1,4,6)(2,5,3)"); }

XElement omega_scalar() { return XElement::parse("[w,w,w,w,w,w]", "[w,w,w,w,w,w]"); }

XElement n_element(int k) { return conjugate(commutator(tau2(), star()), power(tau1(), k - 2)); }

EisMatrix x_act(const XElement& g, const EisMatrix& h) {
  if (h.rows() != 6 || h.cols() != 6) throw std::invalid_argument("x_act: expected a 6x6 matrix");
  // (P^-1 H Q)[i^Kp][j^Kq] = w^(q_j - p_i) H[i][j]
  EisMatrix out(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EisensteinRational v = h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))
                                 .times_root(g.q.unit(j).phase - g.p.unit(i).phase);
      out(g.p.perm()[i], g.q.perm()[j]) = g.eps ? v.conj() : std::move(v);
    }
  }
  return out;
}

EisMatrix x_act_by_products(const XElement& g, const EisMatrix& h) {
  EisMatrix m = mat_mul(mat_mul(mono_to_matrix(g.p.inverse()), h), mono_to_matrix(g.q));
  return g.eps ? conj_entries(m) : m;
}

Permutation x_to_perm36(const XElement& g) {
  std::vector<Permutation::Point> images(36);
  fill_half(g.p, g.eps, 0, images);
  fill_half(g.q, g.eps, 18, images);
  return Permutation(std::move(images));
}

Permutation x_to_perm18(const XElement& g) {
  std::vector<Permutation::Point> images(18);
  fill_half(g.p, g.eps, 0, images);
  return Permutation(std::move(images));
}

XElement x_from_perm36(const Permutation& g) {
  if (g.degree() != 36) throw std::invalid_argument("x_from_perm36: degree must be 36");
  XElement x;
  int e_rows = decode_half(g, 0, x.p);
  int e_cols = decode_half(g, 18, x.q);
  if (e_rows != e_cols) throw std::invalid_argument("not an image of X");
  x.eps = static_cast<std::uint8_t>(e_rows);
  if (x_to_perm36(x) != g) throw std::invalid_argument("not an image of X");
  return x;
}

std::vector<Permutation> to_perm36(std::span<const XElement> gens) {
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (const XElement& g : gens) out.push_back(x_to_perm36(g));
  return out;
}

std::vector<std::size_t> row_column_blocks() {
  std::vector<std::size_t> blocks(36);
  for (std::size_t p = 0; p < 36; ++p) blocks[p] = p < 18 ? p % 6 : 6 + (p - 18) % 6;
  return blocks;
}

std::vector<std::size_t> row_point_blocks() {
  std::vector<std::size_t> blocks(36);
  for (std::size_t p = 0; p < 36; ++p) blocks[p] = p < 18 ? p : 18;
  return blocks;
}

AutStar compute_aut_star() {
  const std::vector<XElement> gens{tau1(), tau2(), star()};
  AutStar result;
  result.group = BSGS(36);
  auto keep = [&](const XElement& g) { return result.group.extend(x_to_perm36(g)); };
  auto act = [](const EisMatrix& m, const XElement& g) { return x_act(g, m); };
  auto key = [](const EisMatrix& m) { return canonical_key(m); };
  auto os = orbit_stabilizer<XElement>(std::span<const XElement>(gens), h6(), act, key, keep);
  result.generators = std::move(os.stabilizer_gens);
  result.orbit_size = os.orbit_size;
  result.order = result.group.order();
  return result;
}

AutLinear compute_aut_linear(const AutStar& star_group) {
  AutLinear result;
  result.group = BSGS(36);
  // eps = 0 subgroup: stabilizer of the bit 0 under g -> eps(g)
  auto act = [](int bit, const XElement& g) { return bit ^ g.eps; };
  auto key = [](int bit) { return std::to_string(bit); };
  auto keep = [&](const XElement& g) { return result.group.extend(x_to_perm36(g)); };
  auto os = orbit_stabilizer<XElement>(std::span<const XElement>(star_group.generators), 0, act, key, keep);
  result.generators = std::move(os.stabilizer_gens);
  result.order = result.group.order();

  std::vector<Permutation> perms = to_perm36(result.generators);
  result.derived_order = BSGS::build(derived_subgroup(perms)).order();
  std::vector<Permutation> center = center_of(perms);
  result.center_order = center.empty() ? 1 : BSGS::build(center).order();
  for (const Permutation& z : center) result.center.push_back(x_from_perm36(z));
  std::vector<Permutation> quotient = quotient_action(perms, center);
  result.quotient_order = BSGS::build(quotient).order();
  result.quotient_simple = is_simple_small(quotient);
  return result;
}

AutLinear compute_aut_linear() { return compute_aut_linear(compute_aut_star()); }

std::size_t submodule_closure_order(const std::array<int, 6>& v) {
  std::vector<Vec6> orbit;
  std::array<int, 6> idx;
  std::iota(idx.begin(), idx.end(), 0);
  do {
    Vec6 w;
    for (std::size_t c = 0; c < 6; ++c) w[c] = mod3(v[static_cast<std::size_t>(idx[c])]);
    orbit.push_back(w);
  } while (std::next_permutation(idx.begin(), idx.end()));
  std::size_t order = 1;
  for (std::size_t r = rank_mod3(std::move(orbit)); r > 0; --r) order *= 3;
  return order;
}

SubmoduleCheck m_submodule_details() {
  SubmoduleCheck c;
  bool ok = true;
  for (int code = 0; code < 729; ++code) {
    Vec6 v;
    int rest = code;
    for (int& x : v) {
      x = rest % 3;
      rest /= 3;
    }
    if (std::accumulate(v.begin(), v.end(), 0) % 3 != 0) continue;
    ++c.module_order;
    bool constant = std::all_of(v.begin(), v.end(), [&](int x) { return x == v[0]; });
    std::size_t closure = submodule_closure_order(v);
    if (constant) {
      std::size_t expected = v[0] == 0 ? 1 : 3;
      ok = ok && closure == expected;
      if (v[0] != 0) c.constant_closure = closure;
    } else {
      ++c.nonconstant_total;
      if (closure == 243) ++c.nonconstant_generating;
    }
  }
  c.pass = ok && c.module_order == 243 && c.nonconstant_total == 240 && c.nonconstant_generating == 240;
  return c;
}

bool m_submodule_check() { return m_submodule_details().pass; }

std::uint64_t named_group_order(const std::string& name) {
  const std::vector<XElement> x0_gens{tau1(), tau2()};
  if (name == "X") return BSGS::build(to_perm36(std::vector<XElement>{tau1(), tau2(), star()})).order();
  if (name == "X0") return BSGS::build(to_perm36(x0_gens)).order();
  if (name == "N") return action_kernel_order(to_perm36(x0_gens), row_column_blocks());
  if (name == "Y") return BSGS::build(to_perm36(std::vector<XElement>{tau1(), tau2prime()})).order();
  if (name == "autstar") return compute_aut_star().order;
  if (name == "aut") return compute_aut_linear().order;
  throw std::invalid_argument("unknown group '" + name + "'");
}

Report verify_prop1() {
  Report r;
  r.suite = "prop1";
  const XElement t1 = tau1(), t2 = tau2(), st = star(), t2p = tau2prime();
  const std::vector<XElement> x_gens{t1, t2, st};
  const std::vector<XElement> x0_gens{t1, t2};
  const std::vector<Permutation> x_perms = to_perm36(x_gens);
  const std::vector<Permutation> x0_perms = to_perm36(x0_gens);

  BSGS x = BSGS::build(x_perms);
  BSGS x0 = BSGS::build(x0_perms);
  r.check("order_X", "|X| = 2 * 3^10 * 720", "85030560", str(x.order()));
  r.check("order_X0", "|X0| = |<tau1, tau2>|", "42515280", str(x0.order()));
  r.check("index_X0", "X0 has index 2 in X", "2", str(x.order() / x0.order()));

  r.check("tau1_star", "tau1^* = tau1", conjugate(t1, st) == t1);
  r.check("tau2_star", "tau2^* = tau2^-1", conjugate(t2, st) == t2.inverse());
  const XElement c = commutator(t2, st);
  r.check("commutator_tau2_star", "[tau2, *] is the displayed diagonal pair", "([1,1,w,w2,w2,w], [1,1,w2,w,w,w2])",
          c.str());
  r.check("commutator_in_X0", "[tau2, *] lies in X0", x0.contains(x_to_perm36(c)));
  r.check("tau2prime", "[tau2, *]^-1 tau2 = tau2'", t2p.str(), (c.inverse() * t2).str());

  const XElement s = t1 * t2p;
  r.check("s_value", "s = tau1 tau2'", "([1,1,1,1,1,1](1,2,3,4,5,6), [1,1,1,1,1,1](1,2,6)(3,5))", s.str());
  const std::map<char, XElement> st_assignment{{'s', s}, {'t', t2p}};
  const std::vector<Word> relations{word_power("s", 6), word_power("t", 2), word_power("st", 5),
                                    word_power(word_commutator("t", word_power("s", 2)), 2),
                                    word_power(word_commutator("t", word_power("s", 3)), 2)};
  r.check("s6_presentation", "s^6 = t^2 = (st)^5 = [t,s^2]^2 = [t,s^3]^2 = 1",
          check_relations(std::span<const Word>(relations), st_assignment));

  const std::vector<XElement> y_gens{t1, t2p};
  const std::vector<Permutation> y_perms = to_perm36(y_gens);
  r.check("order_Y", "|Y| = |<tau1, tau2'>| = |S6|", "720", str(BSGS::build(y_perms).order()));
  const std::vector<Permutation> y_rho1pi{t1.p.perm(), t2p.p.perm()};
  r.check("order_Y_rho1pi", "Y^(rho1 pi) is S6", "720", str(BSGS::build(y_rho1pi).order()));

  const std::vector<std::size_t> blocks = row_column_blocks();
  KernelResult n = action_kernel(x0_perms, blocks);
  BSGS nb = BSGS::build(n.kernel_gens);
  r.check("order_N", "|N| = |M x M| = 3^10", "59049", str(n.kernel_order));
  bool diagonal = true, inverted = true;
  for (const Permutation& g : n.kernel_gens) {
    XElement e = x_from_perm36(g);
    diagonal = diagonal && e.eps == 0 && e.p.is_diagonal() && e.q.is_diagonal();
    inverted = inverted && conjugate(e, st) == e.inverse();
  }
  r.check("N_diagonal", "N consists of pairs of diagonal matrices", diagonal);
  r.check("star_inverts_N", "* acts on N by inversion", inverted);
  bool normal = true;
  for (const Permutation& g : x_perms)
    for (const Permutation& h : n.kernel_gens) normal = normal && nb.contains(conjugate(h, g));
  r.check("N_normal_in_X", "N is normal in X", normal);

  std::vector<Permutation> rows, cols;
  for (const Permutation& g : n.kernel_gens) {
    std::vector<Permutation::Point> ri(g.images().begin(), g.images().begin() + 18);
    std::vector<Permutation::Point> ci(18);
    for (std::size_t k = 0; k < 18; ++k) ci[k] = static_cast<Permutation::Point>(g[18 + k] - 18);
    rows.emplace_back(std::move(ri));
    cols.emplace_back(std::move(ci));
  }
  r.check("N_rho1_order", "N^rho1 = M has order 3^5", "243", str(BSGS::build(rows).order()));
  r.check("N_rho2_order", "N^rho2 = M has order 3^5", "243", str(BSGS::build(cols).order()));

  r.check("Y_meet_N", "Y meets N trivially", "1", str(action_kernel_order(y_perms, blocks)));
  r.check("X0_is_N_Y", "|X0| = |N| |Y|", str(x0.order()), str(n.kernel_order * 720));

  const XElement n345 = n_element(3) * power(n_element(4), 2) * power(n_element(5), 2);
  r.check("n3n4^2n5^2", "n3 n4^2 n5^2 is the displayed pair", "([1,1,1,1,w,w2], [1,1,1,1,w2,w])", n345.str());
  r.check("n3n4^2n5^2_conj", "(n3 n4^2 n5^2)^tau2' is the displayed pair", "([1,1,1,1,w,w2], [1,1,w,w2,1,1])",
          conjugate(n345, t2p).str());
  r.check("n_in_X0", "n2..n6 lie in X0", [&] {
    for (int k = 2; k <= 6; ++k)
      if (!x0.contains(x_to_perm36(n_element(k)))) return false;
    return true;
  }());

  bool dets = true;
  for (const XElement& g : x0_gens)
    for (const MonomialMatrix* m : {&g.p, &g.q}) {
      EisensteinRational d = determinant(*m);
      dets = dets && (d == EisensteinRational(1) || d == EisensteinRational(-1));
    }
  r.check("determinants", "tau1, tau2 components have determinant +-1", dets);
  return r;
}

Report verify_prop2() {
  Report r;
  r.suite = "prop2";
  const XElement t1 = tau1(), t2 = tau2(), st = star();
  const EisMatrix h = h6();

  r.check("tau1_fixes_H6", "H6^tau1 = H6", equal(x_act(t1, h), h));
  r.check("tau2_conjugates_H6", "H6^tau2 = conj(H6)", equal(x_act(t2, h), conj_entries(h)));

  AutStar aut = compute_aut_star();
  r.check("orbit_H6", "orbit of H6 under X", "39366", std::to_string(aut.orbit_size));
  r.check("order_autstar", "|Aut*(H6)| = |3.S6|", "2160", str(aut.order));
  const std::uint64_t order_x = BSGS::build(to_perm36(std::vector<XElement>{t1, t2, st})).order();
  r.check("orbit_stabilizer", "|orbit| |Aut*(H6)| = |X|", str(order_x), str(aut.orbit_size * aut.order));

  const std::vector<XElement> claimed{t1, t2 * st};
  BSGS generated = BSGS::build(to_perm36(claimed));
  bool same = generated.order() == aut.order;
  for (const Permutation& g : aut.group.strong_generators()) same = same && generated.contains(g);
  r.check("autstar_generated", "Aut*(H6) = <tau1, tau2 *>", same);
  r.check("tau1_member", "tau1 fixes H6", aut.group.contains(x_to_perm36(t1)));
  r.check("tau2star_member", "tau2 * fixes H6", aut.group.contains(x_to_perm36(t2 * st)));
  r.check("star_not_member", "* does not fix H6", !aut.group.contains(x_to_perm36(st)));
  bool fixes = true;
  for (const XElement& g : aut.generators) fixes = fixes && equal(x_act(g, h), h);
  r.check("generators_fix_H6", "every kept Schreier generator fixes H6", fixes);

  KernelResult meet = action_kernel(to_perm36(aut.generators), row_column_blocks());
  r.check("autstar_meet_N", "Aut*(H6) meets N in a group of order 3", "3", str(meet.kernel_order));

  AutLinear lin = compute_aut_linear(aut);
  r.check("order_aut", "|Aut(H6)| = |3.A6|", "1080", str(lin.order));
  r.check("aut_perfect", "Aut(H6) is perfect", "1080", str(lin.derived_order));
  r.check("aut_center_order", "center of Aut(H6)", "3", str(lin.center_order));
  r.check("aut_center_scalar", "center generated by (wI, wI)",
          lin.center.size() == 1 && (lin.center[0] == omega_scalar() || lin.center[0] == omega_scalar().inverse()));
  r.check("aut_quotient_order", "central quotient has order 360", "360", str(lin.quotient_order));
  r.check("aut_quotient_simple", "central quotient is simple", lin.quotient_simple);
  bool intertwined = true;
  for (const XElement& g : lin.generators)
    intertwined = intertwined && equal(mat_mul(h, mono_to_matrix(g.q)), mat_mul(mono_to_matrix(g.p), h));
  r.check("intertwining_linear", "H6 Q = P H6 for the linear generators", intertwined);

  const XElement x = sylow_x(), y = sylow_y();
  r.check("x_fixes_H6", "x fixes H6", equal(x_act(x, h), h));
  r.check("y_fixes_H6", "y fixes H6", equal(x_act(y, h), h));
  r.check("commutator_xy", "[x, y] = (wI, wI)", omega_scalar().str(), commutator(x, y).str());
  r.check("sylow_order", "<x, y> has order 27", "27", str(BSGS::build(to_perm36(std::vector<XElement>{x, y})).order()));
  r.check("odd_inverts_center", "tau2 * inverts (wI, wI)", conjugate(omega_scalar(), t2 * st) == omega_scalar().inverse());

  r.check("perm18_tau1", "18-point image of tau1", "(2,3,4,5,6)(8,9,10,11,12)(14,15,16,17,18)", x_to_perm18(t1).str());
  r.check("perm18_tau2", "18-point image of tau2", "(1,2)(3,15,9)(4,10,16)(5,11,17)(6,18,12)(7,8)(13,14)",
          x_to_perm18(t2).str());
  r.check("perm18_star", "18-point image of *", "(7,13)(8,14)(9,15)(10,16)(11,17)(12,18)", x_to_perm18(st).str());
  r.check("perm18_kernel", "kernel of X on 18 points", "243",
          str(action_kernel_order(to_perm36(std::vector<XElement>{t1, t2, st}), row_point_blocks())));
  std::vector<Permutation> aut18;
  for (const XElement& g : aut.generators) aut18.push_back(x_to_perm18(g));
  r.check("perm18_faithful_on_autstar", "Aut*(H6) acts faithfully on 18 points", "2160",
          str(BSGS::build(aut18).order()));
  return r;
}

Report verify_submodule() {
  Report r;
  r.suite = "submodule";
  SubmoduleCheck c = m_submodule_details();
  r.check("order_M", "|M| = 3^5", "243", std::to_string(c.module_order));
  r.check("nonconstant_generate_M", "every non-constant element generates M", "240/240",
          std::to_string(c.nonconstant_generating) + "/" + std::to_string(c.nonconstant_total));
  r.check("constant_module", "a nonzero constant generates a module of order 3", "3", std::to_string(c.constant_closure));
  r.check("m_submodule_check", "the constant module is the only proper nontrivial submodule", c.pass);
  return r;
}

}  // namespace h6
