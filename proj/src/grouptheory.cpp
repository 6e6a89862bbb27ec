#include "h6/grouptheory.hpp"

#include <algorithm>
#include <deque>

namespace h6 {

namespace {

std::size_t common_degree(std::span<const Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::size_t n = gens.front().degree();
  for (const Permutation& g : gens)
    if (g.degree() != n) throw std::invalid_argument("generators differ in degree");
  return n;
}

}  // namespace

void BSGS::add_level(Point point) {
  Level level;
  level.point = point;
  level.slot.assign(degree_, -1);
  level.slot[point] = 0;
  level.orbit.push_back(point);
  level.reps.push_back(Permutation(degree_));
  levels_.push_back(std::move(level));
}

std::vector<BSGS::Point> BSGS::base() const {
  std::vector<Point> b;
  for (const Level& l : levels_) b.push_back(l.point);
  return b;
}

std::vector<std::size_t> BSGS::orbit_lengths() const {
  std::vector<std::size_t> lengths;
  for (const Level& l : levels_) lengths.push_back(l.orbit.size());
  return lengths;
}

const std::vector<Permutation>& BSGS::level_generators(std::size_t level) const {
  static const std::vector<Permutation> kNone;
  return level < levels_.size() ? levels_[level].gens : kNone;
}

std::uint64_t BSGS::order() const {
  std::uint64_t result = 1;
  for (const Level& l : levels_)
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(l.orbit.size()), &result))
      throw std::overflow_error("BSGS: group order exceeds 64 bits");
  return result;
}

std::pair<Permutation, std::size_t> BSGS::sift(Permutation g, std::size_t start) const {
  if (g.degree() != degree_) throw std::invalid_argument("BSGS: degree mismatch");
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    int s = l.slot[g[l.point]];
    if (s < 0) return {std::move(g), i};
    g = g * l.reps[static_cast<std::size_t>(s)].inverse();
  }
  return {std::move(g), levels_.size()};
}

bool BSGS::contains(const Permutation& g) const {
  auto [residue, depth] = sift(g);
  return depth == levels_.size() && residue.is_identity();
}

void BSGS::recompute_orbit(std::size_t i) {
  Level& l = levels_[i];
  l.slot.assign(degree_, -1);
  l.orbit.assign(1, l.point);
  l.reps.assign(1, Permutation(degree_));
  l.slot[l.point] = 0;
  for (std::size_t head = 0; head < l.orbit.size(); ++head) {
    Point p = l.orbit[head];
    for (const Permutation& s : l.gens) {
      Point q = s[p];
      if (l.slot[q] >= 0) continue;
      l.slot[q] = static_cast<int>(l.orbit.size());
      l.orbit.push_back(q);
      l.reps.push_back(l.reps[head] * s);
    }
  }
}

// h fixes base[0..through_level-1]; it joins levels 0..through_level,
// creating that level if needed.
void BSGS::add_generator(const Permutation& h, std::size_t through_level) {
  if (through_level == levels_.size()) add_level(static_cast<Point>(h.first_moved()));
  strong_gens_.push_back(h);
  for (std::size_t l = 0; l <= through_level; ++l) levels_[l].gens.push_back(h);
}

void BSGS::complete(std::size_t from_level) {
  auto i = static_cast<std::ptrdiff_t>(from_level);
  while (i >= 0) {
    auto level = static_cast<std::size_t>(i);
    recompute_orbit(level);
    bool restarted = false;
    const Level& l = levels_[level];
    for (std::size_t k = 0; !restarted && k < l.orbit.size(); ++k) {
      for (std::size_t gi = 0; gi < l.gens.size(); ++gi) {
        const Permutation& s = l.gens[gi];
        const Permutation& u = l.reps[k];
        const Permutation& v = l.reps[static_cast<std::size_t>(l.slot[s[l.orbit[k]]])];
        Permutation schreier = u * s * v.inverse();
        if (schreier.is_identity()) continue;
        auto [h, depth] = sift(std::move(schreier), level + 1);
        if (depth == levels_.size() && h.is_identity()) continue;
        add_generator(h, depth);
        for (std::size_t m = level + 1; m <= depth; ++m) recompute_orbit(m);
        i = static_cast<std::ptrdiff_t>(depth);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

BSGS BSGS::build(std::span<const Permutation> gens, std::span<const Point> base_prefix) {
  BSGS b(common_degree(gens));
  for (Point p : base_prefix) {
    if (p >= b.degree_) throw std::invalid_argument("BSGS: base point out of range");
    b.add_level(p);
  }
  for (const Permutation& g : gens) {
    if (g.is_identity()) continue;
    std::size_t depth = 0;
    while (depth < b.levels_.size() && g[b.levels_[depth].point] == b.levels_[depth].point) ++depth;
    b.add_generator(g, depth);
  }
  if (!b.levels_.empty()) b.complete(b.levels_.size() - 1);
  return b;
}

bool BSGS::extend(const Permutation& g) {
  auto [h, depth] = sift(g);
  if (depth == levels_.size() && h.is_identity()) return false;
  add_generator(h, depth);
  complete(depth);
  return true;
}

std::uint64_t group_order(std::span<const Permutation> gens) { return BSGS::build(gens).order(); }

std::vector<Permutation> enumerate_elements(std::span<const Permutation> gens, std::size_t cap) {
  std::size_t n = common_degree(gens);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation(n)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& s : gens) {
      Permutation next = elements[head] * s;
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw std::length_error("enumerate_elements: more than cap elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::vector<Permutation> normal_closure(std::span<const Permutation> gens, std::span<const Permutation> seeds) {
  std::size_t n = common_degree(gens);
  BSGS closure(n);
  std::vector<Permutation> out;
  std::deque<Permutation> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    if (!closure.extend(x)) continue;
    for (const Permutation& g : gens) queue.push_back(conjugate(x, g));
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Permutation> derived_subgroup(std::span<const Permutation> gens) {
  std::vector<Permutation> commutators;
  for (const Permutation& a : gens)
    for (const Permutation& b : gens) commutators.push_back(commutator(a, b));
  return normal_closure(gens, commutators);
}

std::vector<Permutation> center_of(std::span<const Permutation> gens) {
  std::vector<Permutation> elements = enumerate_elements(gens);
  BSGS center(common_degree(gens));
  std::vector<Permutation> out;
  for (const Permutation& z : elements) {
    bool central = std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return z * g == g * z; });
    if (central && center.extend(z)) out.push_back(z);
  }
  return out;
}

bool is_simple_small(std::span<const Permutation> gens) {
  std::vector<Permutation> elements = enumerate_elements(gens);
  if (elements.size() < 2) return false;
  std::unordered_set<Permutation, PermutationHash> classified;
  for (const Permutation& x : elements) {
    if (x.is_identity() || classified.contains(x)) continue;
    // conjugacy class of x by closure under conjugation by generators
    std::vector<Permutation> cls{x};
    classified.insert(x);
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (const Permutation& g : gens) {
        Permutation y = conjugate(cls[head], g);
        if (classified.insert(y).second) cls.push_back(std::move(y));
      }
    Permutation seed[] = {x};
    std::vector<Permutation> ncl = normal_closure(gens, seed);
    if (BSGS::build(ncl).order() != elements.size()) return false;
  }
  return true;
}

std::vector<Permutation> quotient_action(std::span<const Permutation> gens, std::span<const Permutation> normal) {
  std::size_t n = common_degree(gens);
  std::vector<Permutation> elements = enumerate_elements(gens);
  std::vector<Permutation> subgroup =
      normal.empty() ? std::vector<Permutation>{Permutation(n)} : enumerate_elements(normal);
  // cosets N*g numbered in discovery order of their first element
  std::unordered_map<Permutation, std::size_t, PermutationHash> coset_of;
  std::vector<Permutation> reps;
  for (const Permutation& g : elements) {
    if (coset_of.contains(g)) continue;
    for (const Permutation& x : subgroup) coset_of.emplace(x * g, reps.size());
    reps.push_back(g);
  }
  if (reps.size() > 0xFFFF) throw std::length_error("quotient_action: too many cosets");
  std::vector<Permutation> out;
  for (const Permutation& s : gens) {
    std::vector<Permutation::Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) images[c] = static_cast<Permutation::Point>(coset_of.at(reps[c] * s));
    out.emplace_back(std::move(images));
  }
  return out;
}

Word word_power(std::string_view w, int n) {
  Word base = n < 0 ? word_inverse(w) : Word(w);
  Word out;
  for (int k = 0; k < std::abs(n); ++k) out += base;
  return out;
}

Word word_inverse(std::string_view w) {
  Word out(w.rbegin(), w.rend());
  for (char& c : out) {
    if (c >= 'a' && c <= 'z')
      c = static_cast<char>(c - 'a' + 'A');
    else if (c >= 'A' && c <= 'Z')
      c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

Word word_commutator(std::string_view a, std::string_view b) {
  return word_inverse(a) + word_inverse(b) + Word(a) + Word(b);
}

Permutation block_image(const Permutation& g, std::span<const std::size_t> block_of, std::size_t nblocks) {
  if (g.degree() != block_of.size()) throw std::invalid_argument("block_image: degree mismatch");
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(nblocks, kUnset);
  for (std::size_t p = 0; p < g.degree(); ++p) {
    std::size_t from = block_of[p];
    std::size_t to = block_of[g[p]];
    if (image[from] == kUnset)
      image[from] = to;
    else if (image[from] != to)
      throw std::invalid_argument("block system not preserved");
  }
  std::vector<Permutation::Point> images(nblocks);
  for (std::size_t b = 0; b < nblocks; ++b) {
    if (image[b] == kUnset) throw std::invalid_argument("block_image: empty block");
    images[b] = static_cast<Permutation::Point>(image[b]);
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("block system not preserved");
  }
}

KernelResult action_kernel(std::span<const Permutation> gens, std::span<const std::size_t> block_of) {
  std::size_t n = common_degree(gens);
  if (block_of.size() != n) throw std::invalid_argument("action_kernel: block map has wrong length");
  std::size_t nblocks = block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1;

  // Act on blocks (points 0..nblocks-1) and on the original points
  // (shifted by nblocks) at once; fixing the block points first makes the
  // level-nblocks stabilizer the kernel.
  std::vector<Permutation> combined;
  std::vector<Permutation> on_blocks;
  for (const Permutation& g : gens) {
    Permutation b = block_image(g, block_of, nblocks);
    std::vector<Permutation::Point> images(nblocks + n);
    for (std::size_t k = 0; k < nblocks; ++k) images[k] = b[k];
    for (std::size_t p = 0; p < n; ++p) images[nblocks + p] = static_cast<Permutation::Point>(nblocks + g[p]);
    combined.emplace_back(std::move(images));
    on_blocks.push_back(std::move(b));
  }
  std::vector<Permutation::Point> prefix(nblocks);
  for (std::size_t k = 0; k < nblocks; ++k) prefix[k] = static_cast<Permutation::Point>(k);
  BSGS full = BSGS::build(combined, prefix);

  KernelResult r;
  r.group_order = full.order();
  r.image_order = BSGS::build(on_blocks).order();
  r.kernel_order = r.group_order / r.image_order;
  for (const Permutation& h : full.level_generators(nblocks)) {
    std::vector<Permutation::Point> images(n);
    for (std::size_t p = 0; p < n; ++p) images[p] = static_cast<Permutation::Point>(h[nblocks + p] - nblocks);
    r.kernel_gens.emplace_back(std::move(images));
  }
  std::uint64_t from_chain = 1;
  for (std::size_t l = nblocks; l < full.levels(); ++l) from_chain *= full.orbit_lengths()[l];
  if (from_chain != r.kernel_order) throw std::logic_error("action_kernel: stabilizer chain disagrees with index");
  return r;
}

const Permutation& GroupHom::operator()(const Permutation& g) const {
  auto it = table.find(g);
  if (it == table.end()) throw std::out_of_range("GroupHom: element outside the domain");
  return it->second;
}

GroupHom hom_closure(std::span<const std::pair<Permutation, Permutation>> pairs, std::size_t cap) {
  if (pairs.empty()) throw std::invalid_argument("hom_closure: no generators");
  GroupHom hom;
  for (const auto& [d, i] : pairs) {
    hom.domain_gens.push_back(d);
    hom.image_gens.push_back(i);
  }
  common_degree(hom.domain_gens);
  common_degree(hom.image_gens);

  Permutation id(hom.domain_gens.front().degree());
  hom.table.emplace(id, Permutation(hom.image_gens.front().degree()));
  hom.elements.push_back(id);
  for (std::size_t head = 0; head < hom.elements.size(); ++head) {
    const Permutation g = hom.elements[head];
    const Permutation tg = hom.table.at(g);
    for (std::size_t k = 0; k < hom.domain_gens.size(); ++k) {
      Permutation next = g * hom.domain_gens[k];
      Permutation image = tg * hom.image_gens[k];
      auto [it, inserted] = hom.table.emplace(next, image);
      if (!inserted) {
        if (it->second != image)
          throw NotAHomomorphism("hom_closure: " + next.str() + " receives both " + it->second.str() + " and " +
                                 image.str());
        continue;
      }
      if (hom.elements.size() >= cap) throw std::length_error("hom_closure: domain larger than cap");
      hom.elements.push_back(std::move(next));
    }
  }
  return hom;
}

}  // namespace h6
