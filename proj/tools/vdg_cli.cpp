// Command-line front end: coset enumeration, abelianization, simplicity
// testing, PSL(2,q) identification, the genus formula, and the corpus
// verification runner.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
// 3 enumeration budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdg/corpus.hpp"
#include "vdg/gf.hpp"
#include "vdg/perm_group.hpp"
#include "vdg/psl2.hpp"
#include "vdg/todd_coxeter.hpp"
#include "vdg/vondyck.hpp"
#include "vdg/words.hpp"
#include "vdg/zlinalg.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

vdg::Strategy parse_strategy(const std::string& s) {
  if (s == "hlt") return vdg::Strategy::Hlt;
  if (s == "lookahead") return vdg::Strategy::HltLookahead;
  if (s == "felsch") return vdg::Strategy::Felsch;
  throw CLI::ValidationError("strategy", "expected hlt, lookahead or felsch");
}

std::vector<vdg::Word> parse_subgroup_words(const vdg::Presentation& p,
                                            const std::vector<std::string>& texts) {
  std::vector<vdg::Word> words;
  for (const std::string& t : texts) {
    std::string gens;
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      if (i) gens += ",";
      gens += p.generator_names()[i];
    }
    vdg::Presentation helper = vdg::parse_presentation("< " + gens + " | " + t + " >");
    if (helper.relators().empty())
      throw vdg::ParseError(0, "subgroup word reduces to the identity");
    words.push_back(helper.relators().at(0));
  }
  return words;
}

std::string simplicity_line(const vdg::SimplicityVerdict& v) {
  switch (v.kind) {
    case vdg::SimplicityVerdict::Kind::Simple:
      return "simple";
    case vdg::SimplicityVerdict::Kind::NotSimple:
      return "not simple (witness normal subgroup of order " +
             v.witness_order.str() + ")";
    default:
      return "probably simple (" + std::to_string(v.trials) + " trials, seed " +
             std::to_string(v.seed) + ")";
  }
}

std::string report_line(const vdg::VerificationReport& r, long long expected) {
  std::string line = r.id;
  line.resize(line.size() < 24 ? 24 : line.size() + 1, ' ');
  if (r.budget_outcome == vdg::VerificationReport::Outcome::Skipped)
    return line + "skipped (" + r.skip_reason + ")";
  line += r.order_ok ? "order ok" : "ORDER MISMATCH";
  line += " (" + std::to_string(r.order_found.value_or(-1)) + "/" + std::to_string(expected) + ")";
  line += r.perfect_ok ? ", perfect" : ", NOT PERFECT";
  switch (r.simplicity_result.kind) {
    case vdg::SimplicityReport::Kind::Simple:
      line += ", simple";
      break;
    case vdg::SimplicityReport::Kind::NotSimple:
      line += ", not simple (witness " + std::to_string(r.simplicity_result.witness_order) + ")";
      break;
    case vdg::SimplicityReport::Kind::ProbablySimple:
      line += ", probably simple";
      break;
    case vdg::SimplicityReport::Kind::NotRun:
      break;
  }
  for (const auto& idr : r.identification) {
    if (idr.status == vdg::IdentificationResult::Status::EpiFound)
      line += ", epi->PSL(2," + std::to_string(idr.q) + ")";
    else if (idr.status == vdg::IdentificationResult::Status::OrderMatchOnly)
      line += ", order matches PSL(2," + std::to_string(idr.q) + ")";
    else
      line += ", NO EPI onto PSL(2," + std::to_string(idr.q) + ")";
  }
  if (r.genus_value)
    line += ", genus " + std::to_string(r.genus_value->num) +
            (r.genus_value->den == 1 ? "" : "/" + std::to_string(r.genus_value->den));
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset enumeration toolkit for braid-relation presentations"};
  app.require_subcommand(1);

  // --- enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "coset enumeration over a subgroup");
  std::string enum_pres;
  std::vector<std::string> enum_subgroup;
  std::size_t enum_max_cosets = 5'000'000;
  std::string enum_strategy = "lookahead";
  bool enum_dump = false;
  cmd_enum->add_option("presentation", enum_pres, "e.g. \"< a,b | a*b*a=b*a*b, a^5 >\"")
      ->required();
  cmd_enum->add_option("--subgroup", enum_subgroup, "subgroup generator words");
  cmd_enum->add_option("--max-cosets", enum_max_cosets, "live coset budget");
  cmd_enum->add_option("--strategy", enum_strategy, "hlt | lookahead | felsch");
  cmd_enum->add_flag("--dump", enum_dump, "print the coset table");

  // --- order
  auto* cmd_order = app.add_subcommand("order", "group order by regular enumeration");
  std::string order_pres;
  std::size_t order_max_cosets = 5'000'000;
  cmd_order->add_option("presentation", order_pres)->required();
  cmd_order->add_option("--max-cosets", order_max_cosets, "live coset budget");

  // --- abelianize
  auto* cmd_ab = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  std::string ab_pres;
  cmd_ab->add_option("presentation", ab_pres)->required();

  // --- simple
  auto* cmd_simple = app.add_subcommand("simple", "simplicity of the presented group");
  std::string simple_pres, simple_mode = "det";
  unsigned simple_trials = 1000;
  std::uint64_t simple_seed = 24601;
  std::size_t simple_cap = 100'000;
  cmd_simple->add_option("presentation", simple_pres)->required();
  cmd_simple->add_option("--mode", simple_mode, "det | mc");
  cmd_simple->add_option("--trials", simple_trials, "Monte Carlo trials");
  cmd_simple->add_option("--seed", simple_seed, "Monte Carlo seed");
  cmd_simple->add_option("--cap", simple_cap, "deterministic order cap");

  // --- epi
  auto* cmd_epi = app.add_subcommand("epi", "search for an epimorphism onto PSL(2,q)");
  std::string epi_pres;
  std::uint32_t epi_q = 0;
  std::uint32_t epi_max_q = 127;
  cmd_epi->add_option("presentation", epi_pres)->required();
  cmd_epi->add_option("--q", epi_q, "field size")->required();
  cmd_epi->add_option("--max-q", epi_max_q, "search budget");

  // --- genus
  auto* cmd_genus = app.add_subcommand("genus", "genus formula 1 + |G|(n-6)/(12n)");
  long long genus_order = 0;
  int genus_n = 0;
  cmd_genus->add_option("--order", genus_order, "group order")->required();
  cmd_genus->add_option("--n", genus_n, "triangle parameter n")->required();

  // --- corpus run
  auto* cmd_corpus = app.add_subcommand("corpus", "corpus operations");
  auto* cmd_run = cmd_corpus->add_subcommand("run", "verify corpus entries");
  std::string corpus_path = "data/corpus.json";
  std::vector<std::string> run_filters;
  long long run_max_order = 0;
  bool run_stretch = false;
  unsigned run_jobs = 1;
  std::string run_json;
  std::size_t run_max_cosets = 5'000'000;
  cmd_run->add_option("--corpus", corpus_path, "corpus file path");
  cmd_run->add_option("--filter", run_filters, "e.g. n=7");
  cmd_run->add_option("--max-order", run_max_order, "only entries up to this order");
  cmd_run->add_flag("--stretch", run_stretch, "run entries above the stretch threshold");
  cmd_run->add_option("--jobs", run_jobs, "worker threads");
  cmd_run->add_option("--json", run_json, "write the full report as JSON");
  cmd_run->add_option("--max-cosets", run_max_cosets, "per-entry live coset budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_enum->parsed()) {
      vdg::Presentation p = vdg::parse_presentation(enum_pres);
      vdg::EnumerationLimits limits;
      limits.max_cosets = enum_max_cosets;
      vdg::CosetTable t = vdg::enumerate(p, parse_subgroup_words(p, enum_subgroup), limits,
                                         parse_strategy(enum_strategy));
      std::cout << "index " << t.live_count() << " (defined " << t.defined_count() << " cosets)\n";
      if (enum_dump) vdg::dump_table(t, std::cout);
      return kOk;
    }

    if (cmd_order->parsed()) {
      vdg::Presentation p = vdg::parse_presentation(order_pres);
      vdg::EnumerationLimits limits;
      limits.max_cosets = order_max_cosets;
      try {
        std::cout << vdg::enumerate(p, {}, limits).live_count() << "\n";
      } catch (const vdg::LimitExceeded&) {
        // fall back to the tagged cyclic-subgroup decomposition
        auto ca = [&] {
          try {
            return vdg::enumerate_over_cyclic(p, vdg::Word::generator(0), limits);
          } catch (const vdg::LimitExceeded&) {
            return vdg::enumerate_over_cyclic(p, vdg::Word::generator(0), limits,
                                              vdg::Strategy::Felsch);
          }
        }();
        if (ca.subgroup_order <= 0) {
          std::cout << "infinite (the first generator has infinite order over a closed index-"
                    << ca.table.live_count() << " table)\n";
          return kBudget;
        }
        std::cout << static_cast<long long>(ca.table.live_count()) * ca.subgroup_order
                  << "  (index " << ca.table.live_count() << " over the first generator, which has order "
                  << ca.subgroup_order << ")\n";
      }
      return kOk;
    }

    if (cmd_ab->parsed()) {
      vdg::Presentation p = vdg::parse_presentation(ab_pres);
      vdg::AbelianInvariants inv = vdg::abelianization(p);
      std::cout << "free rank " << inv.free_rank << ", torsion [";
      for (std::size_t i = 0; i < inv.torsion.size(); ++i)
        std::cout << (i ? ", " : "") << inv.torsion[i].str();
      std::cout << "]" << (inv.trivial() ? " (perfect)" : "") << "\n";
      return kOk;
    }

    if (cmd_simple->parsed()) {
      vdg::Presentation p = vdg::parse_presentation(simple_pres);
      vdg::CosetTable t = vdg::enumerate(p, {});
      std::vector<vdg::Permutation> gens;
      for (std::uint32_t g = 0; g < p.generator_count(); ++g)
        gens.push_back(vdg::coset_action(t, g));
      vdg::PermutationGroup group = vdg::schreier_sims(gens);
      vdg::SimplicityMode mode;
      if (simple_mode == "det")
        mode = vdg::DeterministicMode{simple_cap};
      else if (simple_mode == "mc")
        mode = vdg::MonteCarloMode{simple_trials, simple_seed};
      else
        throw CLI::ValidationError("mode", "expected det or mc");
      std::cout << "order " << group.order().str() << ": "
                << simplicity_line(vdg::is_simple(group, mode)) << "\n";
      return kOk;
    }

    if (cmd_epi->parsed()) {
      vdg::Presentation p = vdg::parse_presentation(epi_pres);
      vdg::EpiSearchResult r = vdg::find_epimorphism(p, epi_q, {epi_max_q});
      if (r.status == vdg::EpiSearchResult::Status::Found) {
        std::cout << "found: a -> [[" << r.image_a.a << "," << r.image_a.b << "],[" << r.image_a.c
                  << "," << r.image_a.d << "]], b -> [[" << r.image_b.a << "," << r.image_b.b
                  << "],[" << r.image_b.c << "," << r.image_b.d << "]] over GF(" << epi_q << ")\n";
        return kOk;
      }
      if (r.status == vdg::EpiSearchResult::Status::ProvenNone) {
        std::cout << "no epimorphism onto PSL(2," << epi_q << ") (exhaustive search)\n";
        return kMismatch;
      }
      std::cout << "q=" << epi_q << " is outside the search budget\n";
      return kBudget;
    }

    if (cmd_genus->parsed()) {
      vdg::Rational g = vdg::genus(genus_order, genus_n);
      std::cout << "genus " << g.num;
      if (g.den != 1) std::cout << "/" << g.den << " (not an integer!)";
      std::cout << "\n";
      if (vdg::coprime_235(genus_n))
        std::cout << "12n divides order: " << (vdg::check_divisibility(genus_order, genus_n) ? "yes" : "no")
                  << "\n";
      return kOk;
    }

    if (cmd_run->parsed()) {
      std::vector<vdg::CorpusEntry> entries = vdg::load_corpus(corpus_path);
      vdg::CorpusFilter filter;
      filter.stretch = run_stretch;
      if (run_max_order > 0) filter.max_order = run_max_order;
      for (const std::string& f : run_filters) {
        if (f.rfind("n=", 0) == 0)
          filter.n = std::stoi(f.substr(2));
        else
          throw CLI::ValidationError("filter", "unknown filter '" + f + "'");
      }
      vdg::VerifyOptions opts;
      opts.limits.max_cosets = run_max_cosets;
      auto [reports, summary] = vdg::run_corpus(entries, filter, opts, run_jobs);

      auto selected = vdg::filter_entries(entries, filter);
      for (std::size_t i = 0; i < reports.size(); ++i)
        std::cout << report_line(reports[i], selected[i].expected_order) << "\n";
      std::cout << summary.total << " entries: " << summary.completed << " completed, "
                << summary.skipped << " skipped, " << summary.order_ok << " orders ok, "
                << summary.order_mismatch << " mismatches";
      if (summary.typo_mismatch)
        std::cout << " (+" << summary.typo_mismatch << " on typo-suspect entries)";
      std::cout << "\n";

      if (!run_json.empty()) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(vdg::to_json(r));
        std::ofstream f(run_json);
        f << out.dump(1) << "\n";
      }
      return summary.exit_code;
    }
  } catch (const vdg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const vdg::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
