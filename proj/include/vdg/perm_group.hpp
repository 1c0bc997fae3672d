#pragma once

// Permutation groups with a base and strong generating set: order,
// membership, normal closure, derived subgroup, center, simplicity.
//
// The Schreier-Sims construction is the deterministic variant with the
// base chosen as the smallest moved point at each level. Verification of
// a level's stabilizer normally sifts Schreier generators; for a level
// whose orbit covers the whole support (the regular coset actions this
// library lives on) we first try a cheaper certificate: build candidate
// commuting maps from the Schreier tree and check that they centralize
// the level generators and act transitively. When that holds, any group
// element fixing the base fixes every point of the support, so the
// stabilizer is trivial without touching a single Schreier generator.
// The certificate is a proof, never a heuristic: if it fails we fall
// back to Schreier generator sifting.
//
// Groups whose chain certifies a regular action additionally get
// point-set subgroup algorithms (element <-> point under x -> x(base)),
// which keeps conjugacy classes and normal closures linear in the degree.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vdg/permutation.hpp"
#include "vdg/todd_coxeter.hpp"
#include "vdg/words.hpp"

namespace vdg {

using BigInt = boost::multiprecision::cpp_int;

struct DeterministicMode {
  std::size_t cap = 100'000;
};

struct MonteCarloMode {
  unsigned trials = 1000;
  std::uint64_t seed = 24601;
};

using SimplicityMode = std::variant<DeterministicMode, MonteCarloMode>;

struct SimplicityVerdict {
  enum class Kind { Simple, NotSimple, ProbablySimple };
  Kind kind = Kind::Simple;
  BigInt witness_order = 0;  // order of a proper normal subgroup, for NotSimple
  unsigned trials = 0;       // for ProbablySimple
  std::uint64_t seed = 0;    // RNG seed used by the Monte Carlo mode
};

struct DeterministicCapExceeded : std::runtime_error {
  explicit DeterministicCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class PermutationGroup {
 public:
  PermutationGroup() = default;

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  bool has_bsgs() const { return degree_ > 0; }
  bool regular_certified() const { return regular_certified_; }

  const std::vector<std::uint32_t>& base() const { return base_; }

  BigInt order() const {
    BigInt o = 1;
    for (const Level& lv : levels_) o *= lv.orbit.size();
    return o;
  }

  bool membership(const Permutation& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("membership: degree mismatch");
    std::vector<std::uint32_t> r = p.images();
    for (const Level& lv : levels_) {
      std::uint32_t beta = r[lv.base];
      if (lv.position[beta] < 0) return false;
      apply_inverse_transversal(lv, beta, r);
    }
    for (std::uint32_t i = 0; i < degree_; ++i)
      if (r[i] != i) return false;
    return true;
  }

  // Canonical representative of the coset point -> its transversal element
  // at the top level. Only meaningful for certified-regular groups, where
  // it enumerates the elements themselves.
  Permutation transversal_element(std::uint32_t point) const {
    const Level& lv = levels_.at(0);
    if (lv.position[point] < 0) throw std::invalid_argument("point outside top orbit");
    std::vector<std::uint32_t> img(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) img[i] = i;
    apply_transversal(lv, point, img);
    return Permutation(std::move(img));
  }

 private:
  friend PermutationGroup schreier_sims(const std::vector<Permutation>&);
  friend PermutationGroup normal_closure(const PermutationGroup&, const std::vector<Permutation>&);
  friend PermutationGroup derived_subgroup(const PermutationGroup&);
  friend PermutationGroup center(const PermutationGroup&);
  friend SimplicityVerdict is_simple(const PermutationGroup&, const SimplicityMode&);
  friend class GroupBuilder;
  friend class RegularView;
  friend class ElementIndex;

  struct Level {
    std::uint32_t base = 0;
    std::vector<std::uint32_t> orbit;      // BFS order, orbit[0] == base
    std::vector<std::int32_t> position;    // point -> orbit index, or -1
    std::vector<std::uint32_t> parent;     // per orbit index; parent point (root: self)
    std::vector<std::uint32_t> label;      // per orbit index; 2*strong_index + inverse_flag
    std::vector<std::uint32_t> gen_ids;    // strong generators active at this level
    bool certified = false;                // stabilizer proven trivial by certificate
  };

  std::uint32_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
  std::vector<std::uint32_t> base_;
  bool regular_certified_ = false;

  const Permutation& labelled(std::uint32_t label) const {
    return (label & 1u) ? strong_inv_[label >> 1] : strong_[label >> 1];
  }

  // Applies u_point (the Schreier tree word from the base) to every entry
  // of img, one label sweep at a time.
  void apply_transversal(const Level& lv, std::uint32_t point,
                         std::vector<std::uint32_t>& img) const {
    std::vector<std::uint32_t> labels;
    for (std::uint32_t p = point; p != lv.base; p = lv.parent[lv.position[p]])
      labels.push_back(lv.label[lv.position[p]]);
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
      const Permutation& g = labelled(*it);
      for (auto& x : img) x = g[x];
    }
  }

  void apply_inverse_transversal(const Level& lv, std::uint32_t point,
                                 std::vector<std::uint32_t>& img) const {
    for (std::uint32_t p = point; p != lv.base; p = lv.parent[lv.position[p]]) {
      const Permutation& g = labelled(lv.label[lv.position[p]] ^ 1u);
      for (auto& x : img) x = g[x];
    }
  }

  // Point image under u_point, without materializing the permutation.
  std::uint32_t transversal_image(const Level& lv, std::uint32_t point, std::uint32_t x) const {
    std::uint32_t labels_buf[64];
    std::vector<std::uint32_t> labels_big;
    std::size_t depth = 0;
    for (std::uint32_t p = point; p != lv.base; p = lv.parent[lv.position[p]]) {
      if (depth < 64)
        labels_buf[depth] = lv.label[lv.position[p]];
      else
        labels_big.push_back(lv.label[lv.position[p]]);
      ++depth;
    }
    for (std::size_t i = labels_big.size(); i-- > 0;) x = labelled(labels_big[i])[x];
    for (std::size_t i = std::min<std::size_t>(depth, 64); i-- > 0;) x = labelled(labels_buf[i])[x];
    return x;
  }
};

class GroupBuilder {
 public:
  explicit GroupBuilder(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw std::invalid_argument("schreier_sims: empty generator list");
    g_.degree_ = static_cast<std::uint32_t>(gens[0].degree());
    for (const Permutation& p : gens)
      if (p.degree() != g_.degree_) throw std::invalid_argument("schreier_sims: degree mismatch");
    g_.gens_ = gens;
    for (const Permutation& p : gens) add_strong(p);
  }

  PermutationGroup build() {
    if (g_.strong_.empty()) return std::move(g_);  // trivial group
    seed_levels();
    int i = static_cast<int>(g_.levels_.size()) - 1;
    while (i >= 0) {
      int touched = verify_level(static_cast<std::size_t>(i));
      if (touched < 0)
        --i;
      else
        i = touched;
    }
    g_.regular_certified_ = g_.levels_.size() == 1 && g_.levels_[0].certified &&
                            g_.levels_[0].orbit.size() == g_.degree_;
    for (const auto& lv : g_.levels_) g_.base_.push_back(lv.base);
    return std::move(g_);
  }

 private:
  PermutationGroup g_;

  using Level = PermutationGroup::Level;

  std::optional<std::uint32_t> add_strong(const Permutation& p) {
    if (p.is_identity()) return std::nullopt;
    for (std::uint32_t i = 0; i < g_.strong_.size(); ++i)
      if (g_.strong_[i] == p) return i;
    g_.strong_.push_back(p);
    g_.strong_inv_.push_back(p.inverse());
    return static_cast<std::uint32_t>(g_.strong_.size() - 1);
  }

  std::uint32_t smallest_moved(const std::vector<std::uint32_t>& gen_ids) const {
    std::uint32_t best = g_.degree_;
    for (std::uint32_t id : gen_ids) {
      const Permutation& p = g_.strong_[id];
      for (std::uint32_t x = 0; x < best; ++x)
        if (p[x] != x) {
          best = x;
          break;
        }
    }
    return best;
  }

  std::uint32_t smallest_moved(const Permutation& p) const {
    for (std::uint32_t x = 0; x < g_.degree_; ++x)
      if (p[x] != x) return x;
    return g_.degree_;
  }

  void seed_levels() {
    std::vector<std::uint32_t> ids(g_.strong_.size());
    for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
    while (!ids.empty()) {
      Level lv;
      lv.gen_ids = ids;
      lv.base = smallest_moved(ids);
      g_.levels_.push_back(std::move(lv));
      std::vector<std::uint32_t> next;
      for (std::uint32_t id : ids)
        if (g_.strong_[id][g_.levels_.back().base] == g_.levels_.back().base) next.push_back(id);
      ids = std::move(next);
    }
  }

  void rebuild_orbit(Level& lv) {
    lv.orbit.clear();
    lv.position.assign(g_.degree_, -1);
    lv.parent.clear();
    lv.label.clear();
    lv.orbit.push_back(lv.base);
    lv.position[lv.base] = 0;
    lv.parent.push_back(lv.base);
    lv.label.push_back(0);
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
      std::uint32_t p = lv.orbit[head];
      for (std::uint32_t id : lv.gen_ids) {
        for (std::uint32_t dir = 0; dir < 2; ++dir) {
          std::uint32_t q = dir ? g_.strong_inv_[id][p] : g_.strong_[id][p];
          if (lv.position[q] >= 0) continue;
          lv.position[q] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.parent.push_back(p);
          lv.label.push_back(2 * id + dir);
        }
      }
    }
  }

  // Commuting-set certificate that the stabilizer of lv.base in the group
  // generated by this level is trivial. Sound unconditionally; succeeds
  // exactly when the level group acts regularly on its support.
  bool try_certificate(const Level& lv) {
    std::vector<char> in_support(g_.degree_, 0);
    std::size_t support = 0;
    for (std::uint32_t id : lv.gen_ids) {
      const Permutation& p = g_.strong_[id];
      for (std::uint32_t x = 0; x < g_.degree_; ++x)
        if (p[x] != x && !in_support[x]) {
          in_support[x] = 1;
          ++support;
        }
    }
    if (support != lv.orbit.size()) return false;

    std::vector<std::vector<std::uint32_t>> lambdas;
    lambdas.reserve(lv.gen_ids.size());
    for (std::uint32_t id : lv.gen_ids) {
      std::vector<std::uint32_t> lam(g_.degree_, 0);
      lam[lv.base] = g_.strong_[id][lv.base];
      for (std::size_t k = 1; k < lv.orbit.size(); ++k) {
        std::uint32_t c = lv.orbit[k];
        lam[c] = g_.labelled(lv.label[k])[lam[lv.parent[k]]];
      }
      for (std::uint32_t hid : lv.gen_ids) {
        const Permutation& h = g_.strong_[hid];
        for (std::uint32_t c : lv.orbit)
          if (lam[h[c]] != h[lam[c]]) return false;
      }
      lambdas.push_back(std::move(lam));
    }

    // The commuting maps must reach the whole orbit from the base.
    std::vector<char> reached(g_.degree_, 0);
    std::vector<std::uint32_t> stack = {lv.base};
    reached[lv.base] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::uint32_t p = stack.back();
      stack.pop_back();
      for (const auto& lam : lambdas) {
        std::uint32_t q = lam[p];
        if (!reached[q]) {
          reached[q] = 1;
          ++count;
          stack.push_back(q);
        }
      }
    }
    return count == lv.orbit.size();
  }

  // Returns -1 when the level verified clean, otherwise the index of the
  // level that gained a strong generator and must be (re)verified first.
  int verify_level(std::size_t i) {
    Level& lv = g_.levels_[i];
    rebuild_orbit(lv);
    if (i + 1 == g_.levels_.size() && try_certificate(lv)) {
      lv.certified = true;
      return -1;
    }
    lv.certified = false;
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      std::uint32_t beta = lv.orbit[k];
      for (std::uint32_t id : lv.gen_ids) {
        std::uint32_t target = g_.strong_[id][beta];
        std::size_t tpos = static_cast<std::size_t>(lv.position[target]);
        if (lv.parent[tpos] == beta && lv.label[tpos] == 2 * id) continue;  // tree edge

        // Schreier generator u_beta * g * u_target^-1, materialized.
        std::vector<std::uint32_t> s(g_.degree_);
        for (std::uint32_t x = 0; x < g_.degree_; ++x) s[x] = x;
        g_.apply_transversal(lv, beta, s);
        const Permutation& gperm = g_.strong_[id];
        for (auto& x : s) x = gperm[x];
        g_.apply_inverse_transversal(lv, target, s);

        int touched = sift_new(i + 1, std::move(s));
        if (touched >= 0) return touched;
      }
    }
    return -1;
  }

  // Sift a candidate through levels [from, ...]; if a nontrivial residue
  // remains, install it as a strong generator and report the level where
  // verification must resume.
  int sift_new(std::size_t from, std::vector<std::uint32_t> r) {
    std::size_t j = from;
    for (; j < g_.levels_.size(); ++j) {
      const Level& lv = g_.levels_[j];
      std::uint32_t beta = r[lv.base];
      if (lv.position[beta] < 0) break;
      g_.apply_inverse_transversal(lv, beta, r);
    }
    bool ident = true;
    for (std::uint32_t x = 0; x < g_.degree_; ++x)
      if (r[x] != x) {
        ident = false;
        break;
      }
    if (ident) return -1;

    Permutation res{std::move(r)};
    auto idx = add_strong(res);
    if (!idx) return -1;
    if (j == g_.levels_.size()) {
      Level lv;
      lv.base = smallest_moved(res);
      g_.levels_.push_back(std::move(lv));
    }
    for (std::size_t m = from; m <= j && m < g_.levels_.size(); ++m) {
      auto& ids = g_.levels_[m].gen_ids;
      if (std::find(ids.begin(), ids.end(), *idx) == ids.end()) ids.push_back(*idx);
    }
    return static_cast<int>(j);
  }
};

inline PermutationGroup schreier_sims(const std::vector<Permutation>& gens) {
  return GroupBuilder(gens).build();
}

inline BigInt order(const PermutationGroup& g) { return g.order(); }

inline bool membership(const PermutationGroup& g, const Permutation& p) {
  return g.membership(p);
}

// ---------------------------------------------------------------------------
// Subgroup machinery. Certified-regular groups (every corpus image) use the
// element <-> point bijection x -> x(base); everything else goes through
// generic BSGS sifting.

class RegularView {
 public:
  explicit RegularView(const PermutationGroup& g) : g_(g) {
    if (!g.regular_certified()) throw std::logic_error("RegularView needs a certified group");
    root_ = g.levels_[0].base;
  }

  std::uint32_t root() const { return root_; }

  // Point of the element g^-1 * u_p * g, evaluated lazily.
  std::uint32_t conjugate_point(std::uint32_t p, const Permutation& g,
                                const Permutation& ginv) const {
    return g[g_.transversal_image(g_.levels_[0], p, ginv[root_])];
  }

  Permutation element_at(std::uint32_t p) const { return g_.transversal_element(p); }

  // Point set of the subgroup generated by gens: the orbit of the root.
  std::vector<char> subgroup_points(const std::vector<Permutation>& gens,
                                    std::size_t* size_out) const {
    std::vector<char> in(g_.degree(), 0);
    std::vector<std::uint32_t> stack = {root_};
    in[root_] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::uint32_t p = stack.back();
      stack.pop_back();
      for (const Permutation& s : gens) {
        std::uint32_t q = s[p];
        if (!in[q]) {
          in[q] = 1;
          ++count;
          stack.push_back(q);
        }
      }
    }
    if (size_out) *size_out = count;
    return in;
  }

 private:
  const PermutationGroup& g_;
  std::uint32_t root_ = 0;
};

namespace detail {

// Closure of the seed set under conjugation by the group generators,
// returned as a generating set whose point-set closure is the normal
// closure. Fast path for certified-regular groups.
inline std::vector<Permutation> regular_closure_gens(const PermutationGroup& g,
                                                     std::vector<Permutation> hgens,
                                                     std::size_t* order_out) {
  RegularView view(g);
  std::vector<Permutation> ginvs;
  for (const Permutation& gen : g.generators()) ginvs.push_back(gen.inverse());
  std::size_t size = 0;
  std::vector<char> points = view.subgroup_points(hgens, &size);
  for (std::size_t h = 0; h < hgens.size(); ++h) {
    if (size == g.degree()) break;  // closure is the whole group
    for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
      std::uint32_t p = hgens[h][view.root()];
      std::uint32_t cp = view.conjugate_point(p, g.generators()[gi], ginvs[gi]);
      if (points[cp]) continue;
      hgens.push_back(compose(compose(ginvs[gi], hgens[h]), g.generators()[gi]));
      points = view.subgroup_points(hgens, &size);
      if (size == g.degree()) break;
    }
  }
  if (order_out) *order_out = size;
  return hgens;
}

inline std::vector<Permutation> nontrivial(const std::vector<Permutation>& seeds) {
  std::vector<Permutation> out;
  for (const Permutation& s : seeds) {
    if (s.is_identity()) continue;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace detail

inline PermutationGroup normal_closure(const PermutationGroup& g,
                                       const std::vector<Permutation>& seeds) {
  for (const Permutation& s : seeds)
    if (!g.membership(s)) throw std::invalid_argument("normal_closure: seed not a member");
  std::vector<Permutation> hgens = detail::nontrivial(seeds);
  if (hgens.empty()) {
    Permutation id = Permutation::identity(g.degree());
    return schreier_sims({id});
  }
  if (g.regular_certified()) {
    std::size_t sz = 0;
    hgens = detail::regular_closure_gens(g, std::move(hgens), &sz);
    return schreier_sims(hgens);
  }
  // Generic path: grow by conjugates that fail membership.
  while (true) {
    PermutationGroup h = schreier_sims(hgens);
    bool added = false;
    std::size_t count = hgens.size();
    for (std::size_t i = 0; i < count && !added; ++i) {
      for (const Permutation& gen : g.generators()) {
        Permutation c = compose(compose(gen.inverse(), hgens[i]), gen);
        if (!h.membership(c)) {
          hgens.push_back(std::move(c));
          added = true;
          break;
        }
      }
    }
    if (!added) return h;
  }
}

inline PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c =
          compose(compose(compose(gens[i].inverse(), gens[j].inverse()), gens[i]), gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  if (comms.empty()) {
    Permutation id = Permutation::identity(g.degree());
    return schreier_sims({id});
  }
  return normal_closure(g, comms);
}

// ---------------------------------------------------------------------------
// Element indexing for groups with a generic (non-regular) chain: elements
// correspond to tuples of orbit positions, one per level.

class ElementIndex {
 public:
  explicit ElementIndex(const PermutationGroup& g) : g_(g) {
    BigInt o = g.order();
    if (o > BigInt(1) << 62) throw std::overflow_error("group too large to index");
    size_ = o.convert_to<std::uint64_t>();
    strides_.assign(g.levels_.size(), 1);
    for (std::size_t i = g.levels_.size(); i-- > 1;)
      strides_[i - 1] = strides_[i] * g.levels_[i].orbit.size();
  }

  std::uint64_t size() const { return size_; }

  std::vector<std::uint32_t> tuple_of(std::uint64_t idx) const {
    std::vector<std::uint32_t> t(g_.levels_.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = static_cast<std::uint32_t>(idx / strides_[i]);
      idx %= strides_[i];
    }
    return t;
  }

  // Image of point x under the element with the given tuple: the element
  // decomposes as u^(last) * ... * u^(first) applied first-to-last level.
  std::uint32_t eval(const std::vector<std::uint32_t>& tuple, std::uint32_t x) const {
    for (std::size_t i = g_.levels_.size(); i-- > 0;) {
      const auto& lv = g_.levels_[i];
      x = g_.transversal_image(lv, lv.orbit[tuple[i]], x);
    }
    return x;
  }

  Permutation materialize(std::uint64_t idx) const {
    auto tuple = tuple_of(idx);
    std::vector<std::uint32_t> img(g_.degree());
    for (std::uint32_t i = 0; i < g_.degree(); ++i) img[i] = i;
    for (std::size_t i = g_.levels_.size(); i-- > 0;) {
      const auto& lv = g_.levels_[i];
      g_.apply_transversal(lv, lv.orbit[tuple[i]], img);
    }
    return Permutation(std::move(img));
  }

  // Index of the element y defined pointwise by y(x) = post(mid(pre_img(x))),
  // where mid is given by an element tuple. Used for conjugation without
  // materializing anything.
  std::uint64_t sift_conjugate(const std::vector<std::uint32_t>& tuple, const Permutation& pre,
                               const Permutation& post) const {
    // residues are tracked as a stack of inverse-transversal applications
    std::vector<std::pair<std::size_t, std::uint32_t>> divisions;  // (level, point)
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < g_.levels_.size(); ++i) {
      const auto& lv = g_.levels_[i];
      std::uint32_t x = pre[lv.base];
      x = eval(tuple, x);
      x = post[x];
      for (const auto& [li, pt] : divisions) {
        const auto& dl = g_.levels_[li];
        // apply u_pt^-1: walk the tree path applying inverse labels
        for (std::uint32_t p = pt; p != dl.base; p = dl.parent[dl.position[p]])
          x = g_.labelled(dl.label[dl.position[p]] ^ 1u)[x];
      }
      if (lv.position[x] < 0) throw std::logic_error("conjugate left the group");
      idx += static_cast<std::uint64_t>(lv.position[x]) * strides_[i];
      divisions.emplace_back(i, x);
    }
    return idx;
  }

 private:
  const PermutationGroup& g_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> strides_;
};

namespace detail {

// Conjugacy class representatives (excluding the identity) plus, for each
// element, whether its class is a singleton (central). Regular groups use
// point-level conjugation maps; generic groups go through ElementIndex.
struct ClassData {
  std::vector<std::uint64_t> reps;     // ascending; identity excluded
  std::vector<std::uint64_t> centrals; // indices of size-1 classes, identity excluded
};

inline ClassData conjugacy_classes_regular(const PermutationGroup& g) {
  RegularView view(g);
  std::uint32_t n = g.degree();
  std::vector<std::vector<std::uint32_t>> conj;
  for (const Permutation& gen : g.generators()) {
    Permutation ginv = gen.inverse();
    std::vector<std::uint32_t> m(n);
    for (std::uint32_t p = 0; p < n; ++p) m[p] = view.conjugate_point(p, gen, ginv);
    conj.push_back(std::move(m));
  }
  ClassData out;
  std::vector<char> seen(n, 0);
  seen[view.root()] = 1;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t p = 0; p < n; ++p) {
    if (seen[p]) continue;
    out.reps.push_back(p);
    std::size_t size = 0;
    stack.push_back(p);
    seen[p] = 1;
    while (!stack.empty()) {
      std::uint32_t q = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& m : conj) {
        if (!seen[m[q]]) {
          seen[m[q]] = 1;
          stack.push_back(m[q]);
        }
      }
    }
    if (size == 1) out.centrals.push_back(p);
  }
  return out;
}

inline ClassData conjugacy_classes_generic(const PermutationGroup& g, const ElementIndex& index) {
  std::uint64_t m = index.size();
  std::vector<std::pair<Permutation, Permutation>> conj;  // (pre = g^-1, post = g)
  for (const Permutation& gen : g.generators()) conj.emplace_back(gen.inverse(), gen);
  ClassData out;
  std::vector<char> seen(m, 0);
  seen[0] = 1;  // identity has tuple (0,...,0), hence index 0
  std::vector<std::uint64_t> stack;
  for (std::uint64_t e = 1; e < m; ++e) {
    if (seen[e]) continue;
    out.reps.push_back(e);
    std::size_t size = 0;
    stack.push_back(e);
    seen[e] = 1;
    while (!stack.empty()) {
      std::uint64_t x = stack.back();
      stack.pop_back();
      ++size;
      auto tuple = index.tuple_of(x);
      for (const auto& [pre, post] : conj) {
        std::uint64_t y = index.sift_conjugate(tuple, pre, post);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (size == 1) out.centrals.push_back(e);
  }
  return out;
}

}  // namespace detail

inline PermutationGroup center(const PermutationGroup& g) {
  if (g.order() > 1'000'000) throw DeterministicCapExceeded("center: group too large");
  std::vector<Permutation> central;
  if (g.order() == 1) {
    central.push_back(Permutation::identity(g.degree()));
    return schreier_sims(central);
  }
  if (g.regular_certified()) {
    RegularView view(g);
    auto classes = detail::conjugacy_classes_regular(g);
    for (std::uint64_t p : classes.centrals)
      central.push_back(view.element_at(static_cast<std::uint32_t>(p)));
  } else {
    ElementIndex index(g);
    auto classes = detail::conjugacy_classes_generic(g, index);
    for (std::uint64_t e : classes.centrals) central.push_back(index.materialize(e));
  }
  if (central.empty()) central.push_back(Permutation::identity(g.degree()));
  return schreier_sims(central);
}

inline SimplicityVerdict is_simple(const PermutationGroup& g, const SimplicityMode& mode) {
  BigInt m = g.order();
  if (m < 2) throw std::invalid_argument("is_simple: group must have order >= 2");

  if (std::holds_alternative<DeterministicMode>(mode)) {
    const auto& det = std::get<DeterministicMode>(mode);
    if (m > det.cap)
      throw DeterministicCapExceeded("is_simple: order exceeds deterministic cap");
    auto closure_order = [&](const Permutation& seed) -> BigInt {
      if (g.regular_certified()) {
        std::size_t sz = 0;
        detail::regular_closure_gens(g, {seed}, &sz);
        return BigInt(sz);
      }
      return normal_closure(g, {seed}).order();
    };
    if (g.regular_certified()) {
      RegularView view(g);
      auto classes = detail::conjugacy_classes_regular(g);
      for (std::uint64_t p : classes.reps) {
        BigInt sz = closure_order(view.element_at(static_cast<std::uint32_t>(p)));
        if (sz < m) return {SimplicityVerdict::Kind::NotSimple, sz, 0, 0};
      }
    } else {
      ElementIndex index(g);
      auto classes = detail::conjugacy_classes_generic(g, index);
      for (std::uint64_t e : classes.reps) {
        BigInt sz = closure_order(index.materialize(e));
        if (sz < m) return {SimplicityVerdict::Kind::NotSimple, sz, 0, 0};
      }
    }
    return {SimplicityVerdict::Kind::Simple, 0, 0, 0};
  }

  const auto& mc = std::get<MonteCarloMode>(mode);
  std::mt19937_64 rng(mc.seed);
  const auto& gens = g.generators();
  std::vector<Permutation> letters;
  for (const Permutation& gen : gens) {
    letters.push_back(gen);
    letters.push_back(gen.inverse());
  }
  for (unsigned t = 0; t < mc.trials; ++t) {
    Permutation x;
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<std::uint32_t> img(g.degree());
      for (std::uint32_t i = 0; i < g.degree(); ++i) img[i] = i;
      for (int l = 0; l < 32; ++l) {
        const Permutation& step = letters[rng() % letters.size()];
        for (auto& v : img) v = step[v];
      }
      Permutation cand{std::move(img)};
      if (!cand.is_identity()) {
        x = std::move(cand);
        break;
      }
    }
    if (x.degree() == 0) continue;  // could not find a non-identity element
    BigInt sz;
    if (g.regular_certified()) {
      std::size_t s = 0;
      detail::regular_closure_gens(g, {x}, &s);
      sz = s;
    } else {
      sz = normal_closure(g, {x}).order();
    }
    if (sz < m) return {SimplicityVerdict::Kind::NotSimple, sz, t + 1, mc.seed};
  }
  return {SimplicityVerdict::Kind::ProbablySimple, 0, mc.trials, mc.seed};
}

// Order of the group presented by p plus the extra relator, by
// re-enumeration. The caller is responsible for having checked that the
// word's image is central where that matters.
inline std::size_t quotient_by_central(const Presentation& p, const Word& central_word,
                                       const EnumerationLimits& limits = {}) {
  Presentation q = p;
  q.add_relator(central_word);
  CosetTable t = enumerate(q, {}, limits);
  return t.live_count();
}

}  // namespace vdg
