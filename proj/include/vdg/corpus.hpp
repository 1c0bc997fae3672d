#pragma once

// The results corpus: one entry per published presentation with its
// expected facts, plus the verification pipeline that replays every
// claim (order, perfectness, simplicity, identification, geometry).

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "vdg/gf.hpp"
#include "vdg/perm_group.hpp"
#include "vdg/psl2.hpp"
#include "vdg/todd_coxeter.hpp"
#include "vdg/vondyck.hpp"
#include "vdg/words.hpp"
#include "vdg/zlinalg.hpp"

namespace vdg {

struct CorpusError : std::runtime_error {
  CorpusError(const std::string& id, const std::string& what)
      : std::runtime_error("corpus entry '" + id + "': " + what) {}
};

struct CorpusEntry {
  std::string id;
  int n = 0;
  std::vector<std::string> relators;
  long long expected_order = 0;
  std::string claimed_group;
  enum class Simplicity { Confirmed, Cover, Unconfirmed } simplicity = Simplicity::Confirmed;
  bool efficient = true;
  std::optional<std::string> central_word;
  std::optional<long long> quotient_order;
  std::optional<int> generator_order;
  bool typo_suspect = false;

  Presentation presentation() const {
    std::string text = "< a,b | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (i) text += ", ";
      text += relators[i];
    }
    text += " >";
    return parse_presentation(text);
  }

  Word parsed_central_word() const {
    if (!central_word) throw CorpusError(id, "no central word");
    Presentation helper = parse_presentation("< a,b | " + *central_word + " >");
    return helper.relators().at(0);
  }

  // q for claimed_group of the form A1(q) or cover:A1(q)
  std::optional<std::uint32_t> claimed_q() const {
    std::string_view s = claimed_group;
    if (s.rfind("cover:", 0) == 0) s.remove_prefix(6);
    if (s.rfind("A1(", 0) != 0 || s.back() != ')') return std::nullopt;
    return static_cast<std::uint32_t>(std::stoul(std::string(s.substr(3, s.size() - 4))));
  }
};

namespace detail {

// "(x)^±k" entries expand into "+" and "-" records at load time.
inline bool expand_pm(const std::string& s, std::string& plus, std::string& minus) {
  std::size_t pos = s.find("±");
  if (pos == std::string::npos) return false;
  plus = s.substr(0, pos) + s.substr(pos + 2);
  minus = s.substr(0, pos) + "-" + s.substr(pos + 2);
  return true;
}

inline CorpusEntry::Simplicity parse_simplicity(const std::string& id, const std::string& s) {
  if (s == "confirmed") return CorpusEntry::Simplicity::Confirmed;
  if (s == "cover") return CorpusEntry::Simplicity::Cover;
  if (s == "unconfirmed") return CorpusEntry::Simplicity::Unconfirmed;
  throw CorpusError(id, "bad simplicity value '" + s + "'");
}

}  // namespace detail

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::runtime_error("corpus parse error in " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw std::runtime_error("corpus file must hold a JSON array");

  std::vector<CorpusEntry> out;
  for (const auto& j : doc) {
    CorpusEntry base;
    base.id = j.value("id", "");
    if (base.id.empty()) throw std::runtime_error("corpus entry without id");
    try {
      base.n = j.at("n").get<int>();
      for (const auto& r : j.at("relators")) base.relators.push_back(r.get<std::string>());
      base.expected_order = j.at("expected_order").get<long long>();
      base.claimed_group = j.at("claimed_group").get<std::string>();
      base.simplicity = detail::parse_simplicity(base.id, j.at("simplicity").get<std::string>());
      base.efficient = j.value("efficient", true);
      if (j.contains("central_word")) base.central_word = j.at("central_word").get<std::string>();
      if (j.contains("quotient_order"))
        base.quotient_order = j.at("quotient_order").get<long long>();
      if (j.contains("generator_order")) base.generator_order = j.at("generator_order").get<int>();
      base.typo_suspect = j.value("typo_suspect", false);
    } catch (const nlohmann::json::exception& e) {
      throw CorpusError(base.id, std::string("field error: ") + e.what());
    }
    if (base.expected_order <= 0) throw CorpusError(base.id, "expected_order must be positive");

    // expand "±" exponents into +/- records
    std::vector<CorpusEntry> expanded;
    bool any_pm = false;
    for (std::size_t i = 0; i < base.relators.size(); ++i) {
      std::string plus, minus;
      if (detail::expand_pm(base.relators[i], plus, minus)) {
        any_pm = true;
        CorpusEntry p = base, m = base;
        p.id += "+";
        p.relators[i] = plus;
        m.id += "-";
        m.relators[i] = minus;
        expanded = {p, m};
        break;
      }
    }
    if (!any_pm) expanded = {base};

    for (CorpusEntry& e : expanded) {
      try {
        Presentation p = e.presentation();
        if (p.relators().size() < 2 || p.relators().size() > 4)
          throw CorpusError(e.id, "expected 2-4 relators");
      } catch (const ParseError& pe) {
        throw CorpusError(e.id, std::string("relators do not parse: ") + pe.what());
      }
      if (e.simplicity == CorpusEntry::Simplicity::Cover) {
        if (!e.central_word || !e.quotient_order)
          throw CorpusError(e.id, "cover entries need central_word and quotient_order");
        if (*e.quotient_order * 2 != e.expected_order)
          throw CorpusError(e.id, "cover order must be twice the quotient order");
      }
      // pure-data consistency: claimed A1(q) must match the PSL(2,q) order
      if (!e.typo_suspect) {
        if (auto q = e.claimed_q()) {
          long long want = e.simplicity == CorpusEntry::Simplicity::Cover
                               ? 2 * static_cast<long long>(psl2_order(*q))
                               : static_cast<long long>(psl2_order(*q));
          if (want != e.expected_order)
            throw CorpusError(e.id, "expected_order disagrees with |PSL(2," +
                                        std::to_string(*q) + ")|");
        }
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct IdentificationResult {
  enum class Status { EpiFound, OrderMatchOnly, ProvenNone };
  std::uint32_t q = 0;
  Status status = Status::OrderMatchOnly;
};

struct SimplicityReport {
  enum class Kind { Simple, NotSimple, ProbablySimple, NotRun };
  Kind kind = Kind::NotRun;
  long long witness_order = 0;
  unsigned trials = 0;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string id;
  std::optional<long long> order_found;
  bool order_ok = false;
  bool perfect_ok = false;
  SimplicityReport simplicity_result;
  std::optional<long long> order_of_a;
  std::optional<long long> order_of_b;
  bool generator_order_ok = true;  // vacuous when no note is present
  std::vector<IdentificationResult> identification;
  std::optional<Rational> genus_value;
  std::optional<bool> genus_positive_integer;
  std::optional<bool> divisibility_ok;
  std::optional<bool> cover_ok;  // central element + quotient order checks
  std::string order_method;      // "regular" or "cyclic-subgroup"
  double elapsed_seconds = 0;
  enum class Outcome { Completed, Skipped } budget_outcome = Outcome::Completed;
  std::string skip_reason;
};

struct VerifyOptions {
  EnumerationLimits limits;                    // regular enumeration budget
  std::size_t deterministic_cap = 100'000;     // is_simple deterministic ceiling
  unsigned mc_trials = 1000;
  std::uint64_t mc_seed = 24601;
  EpiBudget epi_budget;                        // q cap for epimorphism search
  std::size_t synthesize_cap = 2'000'000;      // regular-action synthesis ceiling
};

namespace detail {

// Regular right-multiplication generators synthesized from a faithful
// BSGS image; used when the regular coset table itself is out of budget.
inline std::vector<Permutation> synthesize_regular_generators(const PermutationGroup& image) {
  ElementIndex index(image);
  std::uint64_t m = index.size();
  std::vector<Permutation> out;
  for (const Permutation& gen : image.generators()) {
    std::vector<std::uint32_t> img(m);
    Permutation id_pre = Permutation::identity(image.degree());
    for (std::uint64_t e = 0; e < m; ++e)
      img[static_cast<std::uint32_t>(e)] = static_cast<std::uint32_t>(
          index.sift_conjugate(index.tuple_of(e), id_pre, gen));
    out.push_back(Permutation(std::move(img)));
  }
  return out;
}

inline std::vector<std::uint32_t> order_matching_q(long long order) {
  std::vector<std::uint32_t> qs;
  // |PSL(2,q)| >= (q^3 - q)/2, so the scan can stop once that exceeds order
  for (std::uint32_t q = 2;
       (static_cast<long long>(q) * q * q - q) / 2 <= order; ++q) {
    try {
      if (static_cast<long long>(psl2_order(q)) == order) qs.push_back(q);
    } catch (const std::invalid_argument&) {
    }
  }
  return qs;
}

}  // namespace detail

inline VerificationReport verify_entry(const CorpusEntry& e, const VerifyOptions& opts = {}) {
  VerificationReport rep;
  rep.id = e.id;
  auto start = std::chrono::steady_clock::now();
  auto finish = [&]() -> VerificationReport& {
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  Presentation p = e.presentation();

  // perfectness is pure integer linear algebra; run it regardless of the
  // enumeration outcome
  rep.perfect_ok = abelianization(p).trivial();

  // --- order: regular enumeration first, tagged cyclic-subgroup fallback
  std::vector<Permutation> regular_gens;
  std::optional<PermutationGroup> group;
  Word wa = Word::generator(0), wb = Word::generator(1);
  EnumerationLimits felsch_limits = opts.limits;
  felsch_limits.max_cosets =
      std::min<std::size_t>(opts.limits.max_cosets,
                            std::max<std::size_t>(800'000, 3 * static_cast<std::size_t>(
                                                               e.expected_order)));
  auto enumerate_cyclic_laddered = [&](const Word& h) {
    try {
      return enumerate_over_cyclic(p, h, opts.limits, Strategy::HltLookahead);
    } catch (const LimitExceeded&) {
      return enumerate_over_cyclic(p, h, opts.limits, Strategy::Felsch);
    }
  };
  try {
    CosetTable table = [&] {
      try {
        return enumerate(p, {}, opts.limits, Strategy::HltLookahead);
      } catch (const LimitExceeded&) {
        return enumerate(p, {}, felsch_limits, Strategy::Felsch);
      }
    }();
    if (!validate(table, p, {})) {
      rep.budget_outcome = VerificationReport::Outcome::Skipped;
      rep.skip_reason = "table validation failed";
      return finish();
    }
    rep.order_found = static_cast<long long>(table.live_count());
    rep.order_method = "regular";
    for (std::uint32_t g = 0; g < 2; ++g) regular_gens.push_back(coset_action(table, g));
  } catch (const LimitExceeded&) {
    // exact order via tagged enumerations over <a> and <b>
    try {
      CyclicEnumeration over_a = enumerate_cyclic_laddered(wa);
      CyclicEnumeration over_b = enumerate_cyclic_laddered(wb);
      if (over_a.subgroup_order <= 0 || over_b.subgroup_order <= 0) {
        rep.budget_outcome = VerificationReport::Outcome::Skipped;
        rep.skip_reason = "cyclic subgroup of infinite order";
        return finish();
      }
      long long order_a = static_cast<long long>(over_a.table.live_count()) * over_a.subgroup_order;
      long long order_b = static_cast<long long>(over_b.table.live_count()) * over_b.subgroup_order;
      if (order_a != order_b) {
        rep.budget_outcome = VerificationReport::Outcome::Skipped;
        rep.skip_reason = "inconsistent subgroup decompositions";
        return finish();
      }
      rep.order_found = order_a;
      rep.order_method = "cyclic-subgroup";
      rep.order_of_a = over_a.subgroup_order;
      rep.order_of_b = over_b.subgroup_order;
      // synthesize the regular action when the image is faithful and small
      // enough; otherwise permutation-level checks stay unavailable
      std::optional<PermutationGroup> image;
      PermutationGroup over_a_image = schreier_sims(
          {coset_action(over_a.table, 0), coset_action(over_a.table, 1)});
      if (over_a_image.order() == BigInt(order_a)) {
        image = std::move(over_a_image);
      } else {
        // the action over <a> has a kernel (it meets the center); the odd
        // part of a generates a core-free cyclic subgroup instead
        long long odd = over_a.subgroup_order;
        long long two_part = 1;
        while (odd % 2 == 0) {
          odd /= 2;
          two_part *= 2;
        }
        if (odd > 1) {
          Word w = power(wa, two_part);
          try {
            CosetTable t2 = [&] {
              try {
                return enumerate(p, {w}, opts.limits, Strategy::HltLookahead);
              } catch (const LimitExceeded&) {
                return enumerate(p, {w}, felsch_limits, Strategy::Felsch);
              }
            }();
            PermutationGroup cand =
                schreier_sims({coset_action(t2, 0), coset_action(t2, 1)});
            if (cand.order() == BigInt(order_a)) image = std::move(cand);
          } catch (const LimitExceeded&) {
          }
        }
      }
      if (image && order_a <= static_cast<long long>(opts.synthesize_cap)) {
        regular_gens = detail::synthesize_regular_generators(*image);
      }
    } catch (const LimitExceeded&) {
      rep.budget_outcome = VerificationReport::Outcome::Skipped;
      rep.skip_reason = "enumeration budget exceeded";
      return finish();
    }
  }
  rep.order_ok = rep.order_found && *rep.order_found == e.expected_order;

  if (!regular_gens.empty()) {
    group = schreier_sims(regular_gens);
    if (group->order() != BigInt(*rep.order_found)) {
      rep.budget_outcome = VerificationReport::Outcome::Skipped;
      rep.skip_reason = "permutation image order mismatch";
      return finish();
    }
    rep.order_of_a = static_cast<long long>(element_order(regular_gens[0]));
    rep.order_of_b = static_cast<long long>(element_order(regular_gens[1]));
  }
  if (e.generator_order && rep.order_of_a)
    rep.generator_order_ok =
        *rep.order_of_a == *e.generator_order && *rep.order_of_b == *e.generator_order;

  // --- simplicity / cover structure
  if (group && group->order() >= 2) {
    if (e.simplicity == CorpusEntry::Simplicity::Cover) {
      Word z = e.parsed_central_word();
      Permutation zp = Permutation::identity(group->degree());
      for (Letter l : z.letters()) {
        const Permutation& g = regular_gens[l.gen];
        zp = compose(zp, l.sign > 0 ? g : g.inverse());
      }
      bool central = !zp.is_identity() && element_order(zp) == 2;
      for (const Permutation& g : regular_gens)
        if (compose(zp, g) != compose(g, zp)) central = false;
      PermutationGroup closure = normal_closure(*group, {zp});
      bool closure_ok = closure.order() == 2;
      bool quotient_ok = false;
      try {
        long long q = [&]() -> long long {
          try {
            return static_cast<long long>(quotient_by_central(p, z, opts.limits));
          } catch (const LimitExceeded&) {
            Presentation quot = p.with_relator(z);
            return static_cast<long long>(
                enumerate(quot, {}, opts.limits, Strategy::Felsch).live_count());
          }
        }();
        quotient_ok = e.quotient_order && q == *e.quotient_order;
      } catch (const LimitExceeded&) {
      }
      rep.cover_ok = central && closure_ok && quotient_ok;
      if (closure_ok)
        rep.simplicity_result = {SimplicityReport::Kind::NotSimple, 2, 0, 0};
    } else {
      bool deterministic = e.simplicity == CorpusEntry::Simplicity::Confirmed &&
                           group->order() <= opts.deterministic_cap;
      SimplicityVerdict v =
          deterministic
              ? is_simple(*group, DeterministicMode{opts.deterministic_cap})
              : is_simple(*group, MonteCarloMode{opts.mc_trials, opts.mc_seed});
      rep.simplicity_result.kind = v.kind == SimplicityVerdict::Kind::Simple
                                       ? SimplicityReport::Kind::Simple
                                       : v.kind == SimplicityVerdict::Kind::NotSimple
                                             ? SimplicityReport::Kind::NotSimple
                                             : SimplicityReport::Kind::ProbablySimple;
      rep.simplicity_result.witness_order = static_cast<long long>(v.witness_order);
      rep.simplicity_result.trials = v.trials;
      rep.simplicity_result.seed = v.seed;
    }
  }

  // --- identification with PSL(2, q)
  if (e.simplicity != CorpusEntry::Simplicity::Cover && e.claimed_group != "J2") {
    for (std::uint32_t q : detail::order_matching_q(e.expected_order)) {
      IdentificationResult idr;
      idr.q = q;
      if (q <= opts.epi_budget.max_q) {
        EpiSearchResult r = find_epimorphism(p, q, opts.epi_budget);
        idr.status = r.status == EpiSearchResult::Status::Found
                         ? IdentificationResult::Status::EpiFound
                         : r.status == EpiSearchResult::Status::ProvenNone
                               ? IdentificationResult::Status::ProvenNone
                               : IdentificationResult::Status::OrderMatchOnly;
      } else {
        idr.status = IdentificationResult::Status::OrderMatchOnly;
      }
      rep.identification.push_back(idr);
    }
  }

  // --- geometry: only meaningful when the tessellation is genuine, i.e.
  // {2,3,n} pairwise coprime, hyperbolic n, and the generator order
  // actually equals n
  if (rep.order_found && coprime_235(e.n) && e.n >= 7 && rep.order_of_a &&
      *rep.order_of_a == e.n) {
    Rational g = genus(*rep.order_found, e.n);
    rep.genus_value = g;
    rep.genus_positive_integer = g.is_integer() && g.num > 0;
    rep.divisibility_ok = check_divisibility(*rep.order_found, e.n);
  }

  return finish();
}

// ---------------------------------------------------------------------------

struct CorpusFilter {
  std::optional<int> n;
  std::optional<long long> max_order;
  bool stretch = false;                    // run entries above the stretch threshold
  long long stretch_threshold = 100'000;
};

struct RunSummary {
  std::size_t total = 0;
  std::size_t completed = 0;
  std::size_t skipped = 0;
  std::size_t order_ok = 0;
  std::size_t order_mismatch = 0;          // completed non-typo entries with wrong order
  std::size_t typo_mismatch = 0;
  int exit_code = 0;
};

inline std::vector<CorpusEntry> filter_entries(const std::vector<CorpusEntry>& entries,
                                               const CorpusFilter& f) {
  std::vector<CorpusEntry> out;
  for (const CorpusEntry& e : entries) {
    if (f.n && e.n != *f.n) continue;
    if (f.max_order && e.expected_order > *f.max_order) continue;
    out.push_back(e);
  }
  return out;
}

inline std::pair<std::vector<VerificationReport>, RunSummary> run_corpus(
    const std::vector<CorpusEntry>& entries, const CorpusFilter& filter = {},
    const VerifyOptions& opts = {}, unsigned jobs = 1) {
  std::vector<CorpusEntry> selected = filter_entries(entries, filter);
  std::vector<VerificationReport> reports(selected.size());

  auto work = [&](std::size_t i) {
    const CorpusEntry& e = selected[i];
    if (!filter.stretch && e.expected_order > filter.stretch_threshold) {
      VerificationReport rep;
      rep.id = e.id;
      rep.budget_outcome = VerificationReport::Outcome::Skipped;
      rep.skip_reason = "stretch tier disabled";
      reports[i] = rep;
      return;
    }
    reports[i] = verify_entry(e, opts);
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
          work(i);
      });
    for (auto& t : pool) t.join();
  }

  RunSummary sum;
  sum.total = reports.size();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    if (r.budget_outcome == VerificationReport::Outcome::Skipped) {
      ++sum.skipped;
      continue;
    }
    ++sum.completed;
    if (r.order_ok) {
      ++sum.order_ok;
    } else if (selected[i].typo_suspect) {
      ++sum.typo_mismatch;
    } else {
      ++sum.order_mismatch;
    }
  }
  if (sum.order_mismatch > 0) sum.exit_code = 1;
  return {std::move(reports), sum};
}

// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  if (r.order_found)
    j["order_found"] = *r.order_found;
  else
    j["order_found"] = nullptr;
  j["order_ok"] = r.order_ok;
  j["perfect_ok"] = r.perfect_ok;
  switch (r.simplicity_result.kind) {
    case SimplicityReport::Kind::Simple:
      j["simplicity"] = {{"verdict", "simple"}};
      break;
    case SimplicityReport::Kind::NotSimple:
      j["simplicity"] = {{"verdict", "not_simple"},
                         {"witness_order", r.simplicity_result.witness_order}};
      break;
    case SimplicityReport::Kind::ProbablySimple:
      j["simplicity"] = {{"verdict", "probably_simple"},
                         {"trials", r.simplicity_result.trials},
                         {"seed", r.simplicity_result.seed}};
      break;
    case SimplicityReport::Kind::NotRun:
      j["simplicity"] = {{"verdict", "not_run"}};
      break;
  }
  j["generator_orders"] = nlohmann::json::array();
  j["generator_orders"].push_back(r.order_of_a ? nlohmann::json(*r.order_of_a)
                                               : nlohmann::json(nullptr));
  j["generator_orders"].push_back(r.order_of_b ? nlohmann::json(*r.order_of_b)
                                               : nlohmann::json(nullptr));
  j["generator_order_ok"] = r.generator_order_ok;
  j["identification"] = nlohmann::json::array();
  for (const auto& idr : r.identification) {
    const char* s = idr.status == IdentificationResult::Status::EpiFound
                        ? "epi_found"
                        : idr.status == IdentificationResult::Status::OrderMatchOnly
                              ? "order_match_only"
                              : "proven_none";
    j["identification"].push_back({{"q", idr.q}, {"status", s}});
  }
  if (r.genus_value)
    j["genus"] = {{"num", r.genus_value->num},
                  {"den", r.genus_value->den},
                  {"positive_integer", r.genus_positive_integer.value_or(false)}};
  else
    j["genus"] = nullptr;
  if (r.divisibility_ok)
    j["divisibility_ok"] = *r.divisibility_ok;
  else
    j["divisibility_ok"] = nullptr;
  if (r.cover_ok)
    j["cover_ok"] = *r.cover_ok;
  else
    j["cover_ok"] = nullptr;
  j["order_method"] = r.order_method;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["budget_outcome"] =
      r.budget_outcome == VerificationReport::Outcome::Completed ? "completed" : "skipped";
  if (!r.skip_reason.empty()) j["skip_reason"] = r.skip_reason;
  return j;
}

}  // namespace vdg
