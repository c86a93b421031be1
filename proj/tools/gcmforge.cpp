#include "gcmforge/classify.hpp"
#include "gcmforge/error.hpp"
#include "gcmforge/extend.hpp"
#include "gcmforge/fixtures.hpp"
#include "gcmforge/io.hpp"
#include "gcmforge/search.hpp"
#include "gcmforge/symmetrize.hpp"
#include "gcmforge/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace gcmforge;
using nlohmann::ordered_json;

namespace {

std::string report_path;

void write_report(const std::string& text) {
  if (report_path.empty()) return;
  std::ofstream out(report_path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write report " + report_path);
  out << text;
}

std::string vector_text(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

ordered_json matrix_json(const Gcm& a) { return a.rows(); }

std::string expected_text(const Fixture& f) {
  std::string out = "N_{" + std::to_string(f.expected.k) + "," + std::to_string(f.expected.n) + "}";
  if (f.expected_compact) out += *f.expected_compact ? " (compact)" : " (non-compact)";
  return out;
}

int finish_search(const SearchReport& r) {
  std::cout << r.query << " k=" << r.k;
  if (r.n) std::cout << " n=" << r.n;
  std::cout << ": " << r.representatives.size() << " representative(s), "
            << (r.exhausted ? "exhausted" : "not exhausted") << "\n";
  for (const auto& f : r.findings) std::cout << "  " << f << "\n";
  if (r.verdict) std::cout << "verdict: " << (*r.verdict ? "confirmed" : "NOT confirmed") << "\n";
  write_report(to_json(r));
  if (!r.exhausted) {
    if (r.elapsed_seconds >= r.config.time_budget)
      throw Error(Errc::BudgetExceeded, "time budget ran out; report is partial");
    throw Error(Errc::InfeasibleBounds, "levels with n <= k were skipped; pass --entry-bound");
  }
  return r.verdict.value_or(true) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification, symmetrization, extension and enumeration of generalized "
               "Cartan matrices"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.add_option("--report", report_path, "Write a JSON report to this file");

  std::string file;
  bool witness = false;
  auto* classify = app.add_subcommand("classify", "Base type, N_k type and symmetrizability");
  classify->add_option("file", file)->required();
  classify->add_flag("--witness", witness, "Print a witness vector u > 0");

  auto* nk = app.add_subcommand("nk-type", "N_{k,n} type and subtype profile");
  nk->add_option("file", file)->required();

  auto* sym = app.add_subcommand("symmetrize", "Normalized symmetrizer diagonal");
  sym->add_option("file", file)->required();

  std::string dot_out;
  auto* diagram = app.add_subcommand("diagram", "Dynkin diagram in DOT format");
  diagram->add_option("file", file)->required();
  diagram->add_option("--out", dot_out, "Output file (default: standard output)");

  int target_k = 0;
  bool symmetrizable = false;
  std::size_t limit = 0;
  auto* extend = app.add_subcommand("extend", "One-vertex extensions to a target type");
  extend->add_option("file", file)->required();
  extend->add_option("--target-k", target_k)->required();
  extend->add_flag("--symmetrizable", symmetrizable, "Keep the symmetrizer while extending");
  extend->add_option("--limit", limit, "Stop after this many results (0: no limit)");

  int k = 0, n = 0;
  std::optional<int> entry_bound, product_bound;
  std::optional<std::size_t> max_results;
  bool compact = false;
  double budget = 600.0;
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--entry-bound", entry_bound, "Max |a_ij|")->check(CLI::PositiveNumber);
    cmd->add_option("--product-bound", product_bound, "Max a_ij*a_ji")->check(CLI::PositiveNumber);
    cmd->add_flag("--compact", compact, "Only compact matrices");
    cmd->add_option("--budget", budget, "Time budget in seconds")->check(CLI::PositiveNumber);
  };
  auto* enumerate = app.add_subcommand("enumerate", "Canonical N_{k,n} representatives");
  enumerate->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-results", max_results);
  add_bounds(enumerate);

  std::string claim;
  auto* verify = app.add_subcommand("verify", "Dimension-bound verification reports");
  verify->add_option("--claim", claim)
      ->required()
      ->check(CLI::IsMember({"min-dim", "max-dim-n3", "upper-bound"}));
  verify->add_option("--k", k)->check(CLI::PositiveNumber);
  add_bounds(verify);

  bool check = false;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or re-check the fixture corpus");
  fixtures_cmd->add_flag("--check", check, "Reclassify every fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto search_config = [&] {
    SearchConfig c;
    c.entry_bound = entry_bound;
    c.product_bound = product_bound;
    c.compact_only = compact;
    c.time_budget = budget;
    c.max_results = max_results;
    return c;
  };

  try {
    if (classify->parsed()) {
      const Gcm a = load_matrix(file);
      const TypeLabel label = nk_type(a);
      const bool symm = is_symmetrizable(a);
      std::cout << to_string(label.base) << ", N_{" << label.k << "," << label.n << "}, "
                << (symm ? "symmetrizable, D=" + symmetrizer(a).to_string() : "not symmetrizable")
                << "\n";
      std::cout << (label.compact ? "compact" : "non-compact") << "\n";
      ordered_json j{{"base", to_string(label.base)}, {"k", label.k}, {"n", label.n},
                     {"compact", label.compact}, {"symmetrizable", symm}};
      if (symm) j["symmetrizer"] = symmetrizer(a).to_string();
      if (witness) {
        const Witness w = find_witness(a, label.base);
        std::cout << "witness u=" << vector_text(w.u) << ", " << to_string(w.relation) << "\n";
        j["witness"] = vector_text(w.u);
      }
      write_report(j.dump(2) + "\n");
      return 0;
    }
    if (nk->parsed()) {
      const Gcm a = load_matrix(file);
      const TypeLabel label = nk_type(a);
      std::cout << to_string(label) << "\n";
      std::cout << "profile:";
      ordered_json profile = ordered_json::object();
      for (const auto& [d, kk] : subtype_profile(a)) {
        std::cout << " " << d << ":" << kk;
        profile[std::to_string(d)] = kk;
      }
      std::cout << "\n";
      write_report(ordered_json{{"k", label.k},
                                {"n", label.n},
                                {"compact", label.compact},
                                {"profile", profile}}
                       .dump(2) +
                   "\n");
      return 0;
    }
    if (sym->parsed()) {
      const Gcm a = load_matrix(file);
      const SymmetrizerDiagonal d = symmetrizer(a);
      std::cout << "D=" << d.to_string() << "\n";
      write_report(ordered_json{{"symmetrizer", d.to_string()}}.dump(2) + "\n");
      return 0;
    }
    if (diagram->parsed()) {
      const std::string dot = to_dot(load_matrix(file));
      if (dot_out.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(dot_out, std::ios::binary);
        if (!out) throw Error(Errc::ParseError, "cannot write " + dot_out);
        out << dot;
      }
      return 0;
    }
    if (extend->parsed()) {
      const Gcm a = load_matrix(file);
      ordered_json results = ordered_json::array();
      std::size_t count = 0;
      auto show = [&](const ExtensionCandidate& c, const std::string& prefix) {
        std::cout << prefix << "pairs";
        std::string pairs;
        for (const auto& p : c.pairs) pairs += " " + p.to_string();
        std::cout << pairs << "\n" << format_matrix(c.result.matrix()) << "\n";
        results.push_back({{"pairs", pairs.substr(1)}, {"matrix", matrix_json(c.result)}});
        ++count;
      };
      if (symmetrizable) {
        for (const auto& e : symmetrizable_extensions(a, symmetrizer(a))) {
          if (nk_type(e.candidate.result).k != target_k) continue;
          show(e.candidate, "d_new=" + to_string(e.d_new) + " ");
          if (limit && count >= limit) break;
        }
      } else {
        for_each_extension_to_type(a, target_k, [&](const ExtensionCandidate& c) {
          show(c, "");
          return limit == 0 || count < limit;
        });
      }
      std::cout << count << " extension(s) of type N_" << target_k << "\n";
      write_report(ordered_json{{"target_k", target_k}, {"count", count}, {"extensions", results}}
                       .dump(2) +
                   "\n");
      return 0;
    }
    if (enumerate->parsed()) {
      const SearchReport r = enumerate_type(k, n, search_config());
      for (const auto& g : r.representatives) std::cout << format_matrix(g.matrix()) << "\n";
      return finish_search(r);
    }
    if (verify->parsed()) {
      const SearchConfig c = search_config();
      if (claim == "max-dim-n3") return finish_search(verify_max_dimension_n3(c));
      if (verify->count("--k") == 0)
        throw CLI::RequiredError("--k is required for --claim " + claim);
      if (claim == "min-dim") return finish_search(verify_min_dimension(k, c));
      return finish_search(verify_upper_bound(k, c));
    }
    if (fixtures_cmd->parsed()) {
      bool all_pass = true;
      ordered_json list = ordered_json::array();
      for (const auto& f : fixtures()) {
        std::cout << f.name << ": expected " << expected_text(f);
        ordered_json j{{"name", f.name}, {"expected", expected_text(f)}, {"source", f.source}};
        if (check) {
          const FixtureCheck c = check_fixture(f);
          all_pass = all_pass && c.pass;
          std::cout << ", actual " << to_string(c.actual) << (c.pass ? "  ok" : "  MISMATCH");
          j["actual"] = to_string(c.actual);
          j["pass"] = c.pass;
        }
        std::cout << "\n";
        list.push_back(std::move(j));
      }
      write_report(list.dump(2) + "\n");
      if (!all_pass) throw Error(Errc::ValidationError, "fixture classification mismatch");
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
