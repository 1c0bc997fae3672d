#pragma once

// Todd-Coxeter coset enumeration.
//
// Two strategies share one table and coincidence machinery:
//   - HLT (with optional lookahead): trace every relator at every live
//     coset, filling gaps with new definitions. Cheap per coset, but on
//     presentations with long power relators the total number of cosets
//     defined can exceed the index by orders of magnitude.
//   - Felsch: define at the first undefined table entry in row-major
//     order and propagate every consequence through a deduction stack,
//     scanning relator rotations that touch the new edge.
//
// Letters are column indices: generator g occupies column 2g, its inverse
// column 2g+1. Coincidences are processed eagerly through a queue with
// path-compressed forwarding, so between scans the live part of the table
// is always compatible.
//
// The enumerator can additionally tag every edge with an exponent of a
// single cyclic subgroup generator h (modified Todd-Coxeter): edge
// (i, x) = j with tag t records w_i * x = h^t * w_j. Relator loops whose
// tags do not cancel yield relations h^z = 1; their gcd is the exact
// order of <h> once the table closes. This is how the toolkit pins group
// orders whose regular enumeration is out of reach.
//
// The coset budget bounds live cosets (the GAP-style failure mode); a
// physical cap on total definitions guards against runaway collapse.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vdg/permutation.hpp"
#include "vdg/words.hpp"

namespace vdg {

struct EnumerationLimits {
  std::size_t max_cosets = 5'000'000;
  std::optional<double> max_seconds;
};

enum class Strategy {
  Hlt,           // plain relator tracing per coset
  HltLookahead,  // plus deduction-only sweeps when dead weight accumulates
  Felsch,        // definition at first hole, full deduction propagation
};

struct LimitExceeded : std::runtime_error {
  enum class Kind { Cosets, Time };
  LimitExceeded(Kind kind, std::size_t defined)
      : std::runtime_error(kind == Kind::Cosets
                               ? "coset enumeration defined more than " + std::to_string(defined) +
                                     " cosets"
                               : "coset enumeration exceeded its time budget"),
        kind(kind),
        defined(defined) {}
  Kind kind;
  std::size_t defined;
};

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
};

class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CosetTable(std::uint32_t ngens, std::size_t max_cosets, bool tagged = false)
      : ngens_(ngens), ncols_(2 * ngens), max_cosets_(max_cosets), tagged_(tagged) {
    if (max_cosets < 1) throw std::invalid_argument("max_cosets must be at least 1");
    new_coset();
  }

  std::uint32_t generator_count() const { return ngens_; }
  std::uint32_t column_count() const { return ncols_; }
  std::size_t row_count() const { return forward_.size(); }
  std::size_t live_count() const { return live_count_; }
  std::size_t peak_live_count() const { return peak_live_; }
  std::size_t defined_count() const { return defined_count_; }
  bool closed() const { return closed_; }

  // gcd of the collected h^z = 1 relations; 0 when none were collected
  // (subgroup generator of infinite order). Meaningful after a tagged
  // enumeration closes.
  long long subgroup_relation_gcd() const { return relation_gcd_; }

  static std::uint32_t column(Letter l) { return 2 * l.gen + (l.sign < 0 ? 1u : 0u); }
  static std::uint32_t inverse_column(std::uint32_t col) { return col ^ 1u; }

  bool is_live(std::uint32_t c) const { return forward_[c] == static_cast<std::int32_t>(c); }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (forward_[r] != static_cast<std::int32_t>(r)) r = static_cast<std::uint32_t>(forward_[r]);
    if (!tagged_) {
      while (forward_[c] != static_cast<std::int32_t>(r)) {
        std::uint32_t next = static_cast<std::uint32_t>(forward_[c]);
        forward_[c] = static_cast<std::int32_t>(r);
        c = next;
      }
      return r;
    }
    // weighted path compression: keep w_c = h^weight * w_root exact
    long long total = 0;
    for (std::uint32_t x = c; x != r; x = static_cast<std::uint32_t>(forward_[x]))
      total += forward_weight_[x];
    while (c != r) {
      std::uint32_t next = static_cast<std::uint32_t>(forward_[c]);
      long long w = forward_weight_[c];
      forward_[c] = static_cast<std::int32_t>(r);
      forward_weight_[c] = total;
      total -= w;
      c = next;
    }
    return r;
  }

  // Weight of c relative to its representative (0 for live cosets).
  long long weight(std::uint32_t c) {
    if (!tagged_) return 0;
    rep(c);
    return is_live(c) ? 0 : forward_weight_[c];
  }

  std::int32_t at(std::uint32_t c, std::uint32_t col) const { return table_[c * ncols_ + col]; }
  long long tag_at(std::uint32_t c, std::uint32_t col) const { return tags_[c * ncols_ + col]; }

  // Trace a word from a live coset; kUndefined if the path leaves the
  // defined part of the table.
  std::int32_t trace(std::uint32_t c, const Word& w) {
    std::uint32_t cur = rep(c);
    for (Letter l : w.letters()) {
      std::int32_t t = at(cur, column(l));
      if (t == kUndefined) return kUndefined;
      cur = rep(static_cast<std::uint32_t>(t));
    }
    return static_cast<std::int32_t>(cur);
  }

  std::vector<std::uint32_t> live_cosets() const {
    std::vector<std::uint32_t> live;
    live.reserve(live_count_);
    for (std::uint32_t c = 0; c < row_count(); ++c)
      if (is_live(c)) live.push_back(c);
    return live;
  }

  // Debug-only corruption hook for validation tests.
  void poke(std::uint32_t c, std::uint32_t col, std::int32_t value) {
    table_[c * ncols_ + col] = value;
  }

 private:
  friend class Enumerator;

  std::uint32_t ngens_;
  std::uint32_t ncols_;
  std::size_t max_cosets_;
  bool tagged_ = false;
  std::vector<std::int32_t> table_;    // row-major, live and dead rows
  std::vector<long long> tags_;        // parallel to table_ when tagged
  std::vector<std::int32_t> forward_;  // union-find; forward_[c] == c iff live
  std::vector<long long> forward_weight_;
  std::size_t live_count_ = 0;
  std::size_t defined_count_ = 0;
  std::size_t peak_live_ = 0;
  long long relation_gcd_ = 0;
  bool closed_ = false;

  std::int32_t& cell(std::uint32_t c, std::uint32_t col) { return table_[c * ncols_ + col]; }
  long long& tag(std::uint32_t c, std::uint32_t col) { return tags_[c * ncols_ + col]; }

  std::uint32_t new_coset() {
    if (live_count_ >= max_cosets_ || defined_count_ >= 2 * max_cosets_ + 4'000'000)
      throw LimitExceeded(LimitExceeded::Kind::Cosets, defined_count_);
    std::uint32_t c = static_cast<std::uint32_t>(forward_.size());
    forward_.push_back(static_cast<std::int32_t>(c));
    table_.resize(table_.size() + ncols_, kUndefined);
    if (tagged_) {
      forward_weight_.push_back(0);
      tags_.resize(tags_.size() + ncols_, 0);
    }
    ++live_count_;
    ++defined_count_;
    if (live_count_ > peak_live_) peak_live_ = live_count_;
    return c;
  }

  void collect_relation(long long z) {
    if (z == 0) return;
    relation_gcd_ = std::gcd(relation_gcd_, z < 0 ? -z : z);
  }
};

namespace detail {

inline std::vector<std::uint32_t> to_columns(const Word& w) {
  std::vector<std::uint32_t> cols;
  cols.reserve(w.size());
  for (Letter l : w.letters()) cols.push_back(CosetTable::column(l));
  return cols;
}

inline std::vector<std::uint32_t> cyclically_reduced(std::vector<std::uint32_t> cols) {
  std::size_t lo = 0, hi = cols.size();
  while (hi - lo >= 2 && cols[lo] == CosetTable::inverse_column(cols[hi - 1])) {
    ++lo;
    --hi;
  }
  return {cols.begin() + static_cast<std::ptrdiff_t>(lo),
          cols.begin() + static_cast<std::ptrdiff_t>(hi)};
}

}  // namespace detail

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_generators,
             const EnumerationLimits& limits, Strategy strategy, bool tagged = false)
      : table_(static_cast<std::uint32_t>(p.generator_count()), limits.max_cosets, tagged),
        strategy_(strategy),
        limits_(limits),
        tagged_(tagged) {
    if (tagged && subgroup_generators.size() != 1)
      throw std::invalid_argument("tagged enumeration needs exactly one subgroup generator");
    for (const Word& r : p.relators()) {
      if (auto m = r.max_generator(); m && *m >= p.generator_count())
        throw std::invalid_argument("relator uses unknown generator");
      relators_.push_back(detail::to_columns(r));
    }
    for (const Word& w : subgroup_generators) {
      if (auto m = w.max_generator(); m && *m >= p.generator_count())
        throw std::invalid_argument("subgroup generator uses unknown generator");
      subgens_.push_back(detail::to_columns(w));
    }
  }

  CosetTable run() {
    start_ = std::chrono::steady_clock::now();
    if (strategy_ == Strategy::Felsch)
      run_felsch();
    else
      run_hlt();
    // Normalize entries to representatives so the closed table can be
    // read without chasing forwarding pointers.
    for (std::uint32_t c = 0; c < table_.row_count(); ++c) {
      if (!table_.is_live(c)) continue;
      for (std::uint32_t col = 0; col < table_.column_count(); ++col) {
        std::int32_t t = table_.cell(c, col);
        if (t == CosetTable::kUndefined) continue;
        std::uint32_t raw = static_cast<std::uint32_t>(t);
        std::uint32_t r = table_.rep(raw);
        if (tagged_) table_.tag(c, col) += table_.weight(raw);
        table_.cell(c, col) = static_cast<std::int32_t>(r);
      }
    }
    if (tagged_) collect_all_residuals();
    table_.closed_ = true;
    return std::move(table_);
  }

 private:
  CosetTable table_;
  Strategy strategy_;
  EnumerationLimits limits_;
  bool tagged_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgens_;
  std::vector<std::uint32_t> queue_;  // dead cosets awaiting row evacuation
  std::size_t defined_at_last_sweep_ = 1;
  std::chrono::steady_clock::time_point start_;

  // Felsch state
  bool felsch_ = false;
  std::vector<std::vector<std::uint32_t>> cyc_;  // cyclically reduced relators
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> edp_;  // col -> (rel, pos)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> dstack_;            // (coset, col)
  bool dstack_overflow_ = false;
  static constexpr std::size_t kDstackCap = 1u << 22;

  void check_time() {
    if (!limits_.max_seconds) return;
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > *limits_.max_seconds)
      throw LimitExceeded(LimitExceeded::Kind::Time, table_.defined_count());
  }

  // On the closed, normalized table: the residual tags of every relator
  // loop at every live coset (and of the subgroup word at coset 0) are
  // relations h^z = 1; together they present the cyclic subgroup, so the
  // running gcd ends up being exactly its order.
  void collect_all_residuals() {
    auto residual = [&](std::uint32_t c, const std::vector<std::uint32_t>& cols) {
      std::uint32_t cur = c;
      long long acc = 0;
      for (std::uint32_t col : cols) {
        acc += table_.tag(cur, col);
        cur = static_cast<std::uint32_t>(table_.at(cur, col));
      }
      return acc;
    };
    for (std::uint32_t c = 0; c < table_.row_count(); ++c) {
      if (!table_.is_live(c)) continue;
      for (const auto& r : relators_) table_.collect_relation(residual(c, r));
    }
    for (const auto& w : subgens_) table_.collect_relation(residual(0, w) - 1);
  }

  void push_edge(std::uint32_t c, std::uint32_t col) {
    if (!felsch_) return;
    if (dstack_.size() >= kDstackCap) {
      dstack_overflow_ = true;
      return;
    }
    dstack_.emplace_back(c, col);
  }

  void define(std::uint32_t c, std::uint32_t col) {
    std::uint32_t n = table_.new_coset();
    table_.cell(c, col) = static_cast<std::int32_t>(n);
    table_.cell(n, CosetTable::inverse_column(col)) = static_cast<std::int32_t>(c);
    push_edge(c, col);
  }

  // Asserts w_p = h^delta * w_q; merges classes or collects a relation.
  void merge(std::uint32_t p, std::uint32_t q, long long delta) {
    if (!tagged_) {
      p = table_.rep(p);
      q = table_.rep(q);
      if (p == q) return;
      if (p > q) std::swap(p, q);  // keep the smaller index; coset 0 always survives
      table_.forward_[q] = static_cast<std::int32_t>(p);
      --table_.live_count_;
      queue_.push_back(q);
      return;
    }
    std::uint32_t rp = table_.rep(p), rq = table_.rep(q);
    long long wp = table_.weight(p), wq = table_.weight(q);
    // h^wp w_rp = h^(delta+wq) w_rq
    long long d = delta + wq - wp;  // w_rp = h^d w_rq
    if (rp == rq) {
      table_.collect_relation(d);
      return;
    }
    if (rp > rq) {
      table_.forward_[rp] = static_cast<std::int32_t>(rq);
      table_.forward_weight_[rp] = d;
      queue_.push_back(rp);
    } else {
      table_.forward_[rq] = static_cast<std::int32_t>(rp);
      table_.forward_weight_[rq] = -d;
      queue_.push_back(rq);
    }
    --table_.live_count_;
  }

  // Drain the coincidence queue: evacuate each dead row, re-linking its
  // edges between current representatives.
  void process_coincidences() {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      std::uint32_t dead = queue_[head];
      for (std::uint32_t col = 0; col < table_.column_count(); ++col) {
        std::int32_t t = table_.cell(dead, col);
        if (t == CosetTable::kUndefined) continue;
        std::uint32_t target = static_cast<std::uint32_t>(t);
        std::uint32_t icol = CosetTable::inverse_column(col);
        long long et = tagged_ ? table_.tag(dead, col) : 0;
        if (table_.cell(target, icol) == static_cast<std::int32_t>(dead))
          table_.cell(target, icol) = CosetTable::kUndefined;
        std::uint32_t mu = table_.rep(dead);
        std::uint32_t nu = table_.rep(target);
        // w_mu x = h^tagp w_nu
        long long tagp = tagged_ ? et + table_.weight(target) - table_.weight(dead) : 0;
        std::int32_t e = table_.cell(mu, col);
        if (e != CosetTable::kUndefined) {
          long long s = tagged_ ? table_.tag(mu, col) : 0;
          merge(nu, static_cast<std::uint32_t>(e), s - tagp);
        } else {
          std::int32_t e2 = table_.cell(nu, icol);
          if (e2 != CosetTable::kUndefined) {
            long long s2 = tagged_ ? table_.tag(nu, icol) : 0;
            merge(mu, static_cast<std::uint32_t>(e2), tagp + s2);
          } else {
            table_.cell(mu, col) = static_cast<std::int32_t>(nu);
            table_.cell(nu, icol) = static_cast<std::int32_t>(mu);
            if (tagged_) {
              table_.tag(mu, col) = tagp;
              table_.tag(nu, icol) = -tagp;
            }
            push_edge(mu, col);
          }
        }
        table_.cell(dead, col) = CosetTable::kUndefined;
      }
    }
    queue_.clear();
  }

  void coincide(std::uint32_t a, std::uint32_t b, long long delta) {
    merge(a, b, delta);
    process_coincidences();
  }

  void deduce(std::uint32_t f, std::uint32_t col, std::uint32_t b, long long t) {
    table_.cell(f, col) = static_cast<std::int32_t>(b);
    table_.cell(b, CosetTable::inverse_column(col)) = static_cast<std::int32_t>(f);
    if (tagged_) {
      table_.tag(f, col) = t;
      table_.tag(b, CosetTable::inverse_column(col)) = -t;
    }
    push_edge(f, col);
  }

  // Scan the relator (rotated to start at position rot) from coset c,
  // optionally filling gaps with new cosets. `target` is the required
  // total tag of the closed loop (+1 for the subgroup generator word).
  void scan_and_fill(std::uint32_t c, const std::vector<std::uint32_t>& cols, std::size_t rot,
                     bool fill, long long target = 0) {
    const std::size_t len = cols.size();
    if (len == 0) return;
    auto col_at = [&](std::size_t t) { return cols[rot + t < len ? rot + t : rot + t - len]; };
    std::size_t i = 0, j = len;
    std::uint32_t f = table_.rep(c), b = f;
    long long tf = 0;  // w_f-prefix: w_c R[0..i) = h^tf w_f
    long long ts = 0;  // suffix: w_b R[j..len) = h^ts w_c
    while (true) {
      while (i < j) {
        std::int32_t t = table_.at(f, col_at(i));
        if (t == CosetTable::kUndefined) break;
        std::uint32_t raw = static_cast<std::uint32_t>(t);
        if (tagged_) tf += table_.tag(f, col_at(i)) + table_.weight(raw);
        f = table_.rep(raw);
        ++i;
      }
      if (i == j) {
        // w_c R = h^(tf+ts) ... require target: w_f = h^(target-tf-ts) w_b
        coincide(f, b, target - tf - ts);
        return;
      }
      while (j > i) {
        std::uint32_t icol = CosetTable::inverse_column(col_at(j - 1));
        std::int32_t t = table_.at(b, icol);
        if (t == CosetTable::kUndefined) break;
        std::uint32_t raw = static_cast<std::uint32_t>(t);
        // stepping backward over edge (raw, col) = b with tag -(tag of (b, icol))
        if (tagged_) ts += -(table_.tag(b, icol) + table_.weight(raw));
        b = table_.rep(raw);
        --j;
      }
      if (j == i) {
        coincide(f, b, target - tf - ts);
        return;
      }
      if (j == i + 1) {
        deduce(f, col_at(i), b, target - tf - ts);
        return;
      }
      if (!fill) return;
      define(f, col_at(i));
    }
  }

  // ---- HLT -----------------------------------------------------------

  void run_hlt() {
    for (std::size_t wi = 0; wi < subgens_.size(); ++wi)
      scan_and_fill(0, subgens_[wi], 0, /*fill=*/true, tagged_ ? 1 : 0);
    for (std::uint32_t c = 0; c < table_.row_count(); ++c) {
      if (!table_.is_live(c)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(c, r, 0, /*fill=*/true);
        if (!table_.is_live(c)) break;
      }
      if (!table_.is_live(c)) continue;
      for (std::uint32_t col = 0; col < table_.column_count(); ++col)
        if (table_.at(c, col) == CosetTable::kUndefined) define(c, col);
      maybe_lookahead();
      if ((c & 0xfffu) == 0) check_time();
    }
  }

  void maybe_lookahead() {
    if (strategy_ != Strategy::HltLookahead) return;
    std::size_t since = table_.defined_count() - defined_at_last_sweep_;
    if (since < 8192 || since < table_.live_count() / 2) return;
    // Deduction-only sweeps; repeat while they keep killing cosets.
    while (true) {
      std::size_t live_before = table_.live_count();
      for (std::uint32_t d = 0; d < table_.row_count(); ++d) {
        if (!table_.is_live(d)) continue;
        for (const auto& r : relators_) {
          scan_and_fill(d, r, 0, /*fill=*/false);
          if (!table_.is_live(d)) break;
        }
      }
      if (table_.live_count() > live_before * 9 / 10) break;
    }
    defined_at_last_sweep_ = table_.defined_count();
  }

  // ---- Felsch --------------------------------------------------------

  void run_felsch() {
    felsch_ = true;
    edp_.assign(table_.column_count(), {});
    for (const auto& r : relators_) {
      auto cyc = detail::cyclically_reduced(r);
      if (cyc.empty()) continue;
      std::uint32_t idx = static_cast<std::uint32_t>(cyc_.size());
      for (std::uint32_t i = 0; i < cyc.size(); ++i) edp_[cyc[i]].emplace_back(idx, i);
      cyc_.push_back(std::move(cyc));
    }
    for (std::size_t wi = 0; wi < subgens_.size(); ++wi)
      scan_and_fill(0, subgens_[wi], 0, /*fill=*/true, tagged_ ? 1 : 0);
    drain_deductions();

    std::uint32_t c = 0, col = 0;
    std::size_t steps = 0;
    bool rescanned = false;
    while (true) {
      if (!table_.is_live(c) || col >= table_.column_count()) {
        col = 0;
        if (c + 1 < table_.row_count()) {
          ++c;
        } else if (rescanned) {
          break;
        } else {
          rescanned = true;
          c = 0;
        }
        continue;
      }
      if (table_.at(c, col) != CosetTable::kUndefined) {
        ++col;
        continue;
      }
      rescanned = false;
      define(c, col);
      drain_deductions();
      if ((++steps & 0xfffu) == 0) check_time();
    }
  }

  void drain_deductions() {
    while (!dstack_.empty() || dstack_overflow_) {
      if (dstack_overflow_) {
        dstack_.clear();
        dstack_overflow_ = false;
        for (std::uint32_t d = 0; d < table_.row_count(); ++d) {
          if (!table_.is_live(d)) continue;
          for (std::uint32_t ri = 0; ri < cyc_.size(); ++ri) {
            scan_and_fill(d, cyc_[ri], 0, /*fill=*/false);
            if (!table_.is_live(d)) break;
          }
        }
        continue;
      }
      auto [c, col] = dstack_.back();
      dstack_.pop_back();
      if (!table_.is_live(c)) continue;
      std::int32_t t = table_.at(c, col);
      if (t == CosetTable::kUndefined) continue;
      std::uint32_t target = static_cast<std::uint32_t>(t);
      for (auto [ri, pos] : edp_[col]) {
        scan_and_fill(c, cyc_[ri], pos, /*fill=*/false);
        if (!table_.is_live(c)) break;
      }
      if (!table_.is_live(c) || !table_.is_live(target)) continue;
      std::uint32_t icol = CosetTable::inverse_column(col);
      for (auto [ri, pos] : edp_[icol]) {
        scan_and_fill(target, cyc_[ri], pos, /*fill=*/false);
        if (!table_.is_live(target)) break;
      }
    }
  }
};

inline CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup_generators,
                            const EnumerationLimits& limits = {},
                            Strategy strategy = Strategy::HltLookahead) {
  return Enumerator(p, subgroup_generators, limits, strategy).run();
}

// Tagged enumeration over a single cyclic subgroup <h>: returns the coset
// table plus the exact order of h in the presented group (0 = infinite).
struct CyclicEnumeration {
  CosetTable table;
  long long subgroup_order = 0;
};

inline CyclicEnumeration enumerate_over_cyclic(const Presentation& p, const Word& h,
                                               const EnumerationLimits& limits = {},
                                               Strategy strategy = Strategy::HltLookahead) {
  CosetTable t = Enumerator(p, {h}, limits, strategy, /*tagged=*/true).run();
  long long order = t.subgroup_relation_gcd();
  return {std::move(t), order};
}

// Right-multiplication action of generator g on the densely renumbered
// live cosets of a closed table.
inline Permutation coset_action(const CosetTable& t, std::uint32_t g) {
  if (!t.closed()) throw std::invalid_argument("coset_action requires a closed table");
  if (g >= t.generator_count()) throw std::invalid_argument("generator index out of range");
  std::vector<std::uint32_t> live = t.live_cosets();
  std::vector<std::uint32_t> dense(t.row_count(), 0);
  for (std::uint32_t i = 0; i < live.size(); ++i) dense[live[i]] = i;
  std::vector<std::uint32_t> images(live.size());
  for (std::uint32_t i = 0; i < live.size(); ++i) {
    std::int32_t tgt = t.at(live[i], 2 * g);
    images[i] = dense[static_cast<std::uint32_t>(tgt)];
  }
  return Permutation(std::move(images));
}

inline ValidationResult validate(CosetTable& t, const Presentation& p,
                                 const std::vector<Word>& subgroup_generators) {
  ValidationResult res;
  auto fail = [&res](std::string msg) {
    res.ok = false;
    if (res.violations.size() < 32) res.violations.push_back(std::move(msg));
  };
  std::vector<std::uint32_t> live = t.live_cosets();
  for (std::uint32_t c : live) {
    for (std::uint32_t col = 0; col < t.column_count(); ++col) {
      std::int32_t d = t.at(c, col);
      if (d == CosetTable::kUndefined) {
        fail("undefined entry at coset " + std::to_string(c) + ", column " + std::to_string(col));
        continue;
      }
      std::uint32_t dd = static_cast<std::uint32_t>(d);
      if (!t.is_live(dd)) {
        fail("dead target at coset " + std::to_string(c) + ", column " + std::to_string(col));
        continue;
      }
      if (t.at(dd, CosetTable::inverse_column(col)) != static_cast<std::int32_t>(c))
        fail("incompatible pair at coset " + std::to_string(c) + ", column " + std::to_string(col));
    }
  }
  for (std::uint32_t c : live) {
    for (std::size_t ri = 0; ri < p.relators().size(); ++ri) {
      std::int32_t end = t.trace(c, p.relators()[ri]);
      if (end != static_cast<std::int32_t>(c))
        fail("relator " + std::to_string(ri) + " does not close at coset " + std::to_string(c));
    }
  }
  for (std::size_t wi = 0; wi < subgroup_generators.size(); ++wi) {
    std::int32_t end = t.trace(0, subgroup_generators[wi]);
    if (end != 0) fail("subgroup generator " + std::to_string(wi) + " moves coset 0");
  }
  return res;
}

// Debug dump: one line per live coset, tab-separated dense targets in
// letter order a, a^-1, b, b^-1, ...
inline void dump_table(const CosetTable& t, std::ostream& os) {
  std::vector<std::uint32_t> live = t.live_cosets();
  std::vector<std::uint32_t> dense(t.row_count(), 0);
  for (std::uint32_t i = 0; i < live.size(); ++i) dense[live[i]] = i;
  for (std::uint32_t c : live) {
    for (std::uint32_t col = 0; col < t.column_count(); ++col) {
      if (col) os << '\t';
      std::int32_t d = t.at(c, col);
      if (d == CosetTable::kUndefined)
        os << '.';
      else
        os << dense[static_cast<std::uint32_t>(d)];
    }
    os << '\n';
  }
}

}  // namespace vdg
