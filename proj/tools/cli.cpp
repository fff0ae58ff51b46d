#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11/CLI11.hpp>

#include "dissoc/dissociation.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/extremal.hpp"
#include "dissoc/kpath.hpp"
#include "dissoc/structure.hpp"
#include "dissoc/treegen.hpp"
#include "report.hpp"

namespace dissoc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Forest load_forest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_edge_list(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void validate_ks(const std::vector<std::size_t>& ks) {
  for (std::size_t k : ks) {
    if (k < 2) throw UsageError("k must be at least 2, got " + std::to_string(k));
  }
}

struct VerifyRow {
  std::size_t n = 0;
  std::uint64_t trees = 0;
  std::uint64_t failures = 0;
  BigCount max_count;
  BigCount formula;
  bool match = false;
  std::uint64_t first_failure = UINT64_MAX;
  std::string witness;
};

// Every per-tree statement the verify sweep asserts; returns an empty string when all hold.
std::string check_tree(const Forest& t, const std::vector<std::size_t>& ks, BigCount& count) {
  const DissociationResult dp = alpha3_count_dp(t);
  count = dp.count;
  const std::size_t n = t.order();
  if (n <= 10) {
    const BruteForceMds oracle = brute_force_mds(t);
    if (oracle.alpha3 != dp.alpha3 || BigCount(oracle.sets.size()) != dp.count) return "dp disagrees with brute force";
    if (enumerate_mds(t) != oracle.sets) return "enumeration disagrees with brute force";
  }
  const TheoremReport rep = verify_structure_theorems(t);
  for (const auto& c : rep.checks) {
    if (c.status == CheckStatus::kFail) return c.name + ": " + c.witness;
  }
  for (std::size_t k : ks) {
    const auto cert = greedy_cover_matching(t, k);
    if (!is_valid_certificate(t, cert)) return "invalid cover/matching certificate for k=" + std::to_string(k);
    const std::size_t alpha_k = k == 3 ? dp.alpha3 : alpha_k_dp(t, k);
    if (alpha_k + cert.matching.size() != n) return "alpha_k + mu_k != n for k=" + std::to_string(k);
  }
  return {};
}

VerifyRow verify_order(std::size_t n, const std::vector<std::size_t>& ks, std::size_t jobs) {
  std::vector<VerifyRow> locals(std::max<std::size_t>(jobs, 1));
  parallel_for_each_free_tree(n, jobs, [&](std::size_t w, std::uint64_t index, const Forest& t) {
    VerifyRow& L = locals[w];
    ++L.trees;
    BigCount count;
    std::string witness = check_tree(t, ks, count);
    if (count > L.max_count) L.max_count = count;
    if (!witness.empty()) {
      ++L.failures;
      if (index < L.first_failure) {
        L.first_failure = index;
        L.witness = witness + " on tree [" + serialize_edge_list(t) + "]";
      }
    }
  });
  VerifyRow row;
  row.n = n;
  for (const VerifyRow& L : locals) {
    row.trees += L.trees;
    row.failures += L.failures;
    if (L.max_count > row.max_count) row.max_count = L.max_count;
    if (L.first_failure < row.first_failure) {
      row.first_failure = L.first_failure;
      row.witness = L.witness;
    }
  }
  std::replace(row.witness.begin(), row.witness.end(), '\n', ';');
  row.formula = max_mds_formula(n);
  row.match = row.max_count == row.formula;
  return row;
}

void write_csv_header(std::ostream& csv) { csv << "n,trees,max_count,formula,match,failures\n"; }

void write_csv_row(std::ostream& csv, std::size_t n, std::uint64_t trees, const BigCount& max_count,
                   const BigCount& formula, bool match, std::uint64_t failures) {
  csv << n << ',' << trees << ',' << to_decimal(max_count) << ',' << to_decimal(formula) << ','
      << (match ? "true" : "false") << ',' << failures << '\n';
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream csv(path);
  if (!csv) throw UsageError("cannot write " + path);
  write_csv_header(csv);
  return csv;
}

// Breadth-first renumbering from vertex 0, so the serialized edges introduce vertices in order.
Forest breadth_first_numbering(const Forest& tree) {
  const RootedView view = root_at(tree, 0);
  std::vector<Vertex> rank(tree.order());
  for (std::size_t i = 0; i < view.pre_order.size(); ++i) rank[view.pre_order[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : tree.edges()) edges.emplace_back(rank[e.u], rank[e.v]);
  return Forest::from_edges(tree.order(), edges);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dissociation-set invariants of trees and forests"};
  app.name("dissoc");
  app.require_subcommand(1);

  std::string file;
  std::vector<std::size_t> ks{3};
  std::size_t enumerate_cap = kDefaultEnumerationCap;
  auto* analyze = app.add_subcommand("analyze", "Report invariants, critical structure and checks for one forest");
  analyze->add_option("file", file, "Edge-list file")->required();
  analyze->add_option("--k", ks, "Comma-separated path orders for the k-KE certificate")->delimiter(',');
  analyze->add_option("--enumerate-cap", enumerate_cap, "Enumerate sets only when at most this many exist");

  std::size_t limit = kDefaultEnumerationCap;
  auto* enumerate = app.add_subcommand("enumerate", "Print every maximum dissociation set");
  enumerate->add_option("file", file, "Edge-list file")->required();
  enumerate->add_option("--limit", limit, "Maximum number of sets to print");

  std::size_t n_max = 0;
  std::vector<std::size_t> k_list{2, 3, 4, 5};
  std::size_t jobs = 1;
  std::string csv_path;
  auto* verify = app.add_subcommand("verify", "Check every structural statement on all trees up to an order");
  verify->add_option("--n-max", n_max, "Largest tree order")->required();
  verify->add_option("--k-list", k_list, "Comma-separated path orders")->delimiter(',');
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--csv", csv_path, "Also write a CSV summary here");

  std::size_t n = 0;
  bool sweep = false;
  std::size_t max_n = kSweepLimit;
  auto* extremal = app.add_subcommand("extremal", "Formula, extremal family, and optional exhaustive sweep");
  extremal->add_option("--n", n, "Tree order")->required();
  extremal->add_flag("--sweep", sweep, "Sweep all free trees of order n");
  extremal->add_option("--jobs", jobs, "Worker threads");
  extremal->add_option("--csv", csv_path, "Also write a CSV summary here");
  extremal->add_option("--max-n", max_n, "Refuse sweeps above this order");

  bool count_only = false;
  auto* gen = app.add_subcommand("gen-trees", "Emit one representative per free tree of order n");
  gen->add_option("--n", n, "Tree order")->required();
  gen->add_flag("--count-only", count_only, "Print only the number of trees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) {
      validate_ks(ks);
      const Forest forest = load_forest(file);
      const AnalysisReport report = analyze_forest(forest, ks, enumerate_cap);
      out << to_json(forest, report).dump(2) << '\n';
      return report.violated() ? kViolation : kOk;
    }
    if (*enumerate) {
      const Forest forest = load_forest(file);
      std::size_t printed = 0;
      bool truncated = false;
      for_each_mds(forest, [&](const VertexSet& s) {
        if (printed == limit) {
          truncated = true;
          return false;
        }
        bool first = true;
        s.for_each([&](Vertex v) {
          out << (first ? "" : " ") << forest.label(v);
          first = false;
        });
        out << '\n';
        ++printed;
        return true;
      });
      if (truncated) {
        err << "enumerate: stopped after --limit " << limit << " sets\n";
        return kGuard;
      }
      return kOk;
    }
    if (*verify) {
      validate_ks(k_list);
      if (n_max < 1) throw UsageError("--n-max must be at least 1");
      std::ofstream csv;
      if (!csv_path.empty()) csv = open_csv(csv_path);
      out << std::setw(3) << "n" << std::setw(10) << "trees" << std::setw(10) << "failures" << std::setw(14)
          << "max_count" << std::setw(14) << "formula" << std::setw(7) << "match" << '\n';
      bool violated = false;
      for (std::size_t order = 1; order <= n_max; ++order) {
        const auto t0 = std::chrono::steady_clock::now();
        const VerifyRow row = verify_order(order, k_list, jobs);
        out << std::setw(3) << row.n << std::setw(10) << row.trees << std::setw(10) << row.failures << std::setw(14)
            << to_decimal(row.max_count) << std::setw(14) << to_decimal(row.formula) << std::setw(7)
            << (row.match ? "yes" : "no") << '\n';
        if (row.failures > 0) out << "    first failure: " << row.witness << '\n';
        if (csv.is_open()) write_csv_row(csv, row.n, row.trees, row.max_count, row.formula, row.match, row.failures);
        err << "n=" << order << ": " << row.trees << " trees in " << std::fixed << std::setprecision(3)
            << seconds_since(t0) << "s\n";
        violated = violated || row.failures > 0 || !row.match;
      }
      return violated ? kViolation : kOk;
    }
    if (*extremal) {
      if (n < 1) throw UsageError("--n must be at least 1");
      ExtremalReport report;
      if (sweep) {
        const auto t0 = std::chrono::steady_clock::now();
        report = exhaustive_extremal_check(n, SweepOptions{max_n, jobs});
        err << "swept " << report.trees << " trees in " << std::fixed << std::setprecision(3) << seconds_since(t0)
            << "s\n";
      } else {
        report.n = n;
        report.formula_value = max_mds_formula(n);
        report.note = extremal_note(n);
      }
      out << to_json(report, sweep).dump(2) << '\n';
      if (!csv_path.empty() && sweep) {
        std::ofstream csv = open_csv(csv_path);
        write_csv_row(csv, n, report.trees, report.observed_max, report.formula_value, report.match,
                      report.match ? 0 : 1);
      }
      return sweep && !report.match ? kViolation : kOk;
    }
    if (*gen) {
      if (n < 1) throw UsageError("--n must be at least 1");
      if (count_only) {
        out << count_free_trees(n) << '\n';
        return kOk;
      }
      FreeTreeGenerator g(n);
      while (g.next()) {
        if (g.index() > 0) out << '\n';
        out << "# tree " << g.index() << '\n' << serialize_edge_list(breadth_first_numbering(g.tree()));
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StructureViolation& e) {
    err << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kGuard;
  }
  return kUsage;
}

}  // namespace dissoc::cli
