#include "dissoc/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dissoc/errors.hpp"
#include "dissoc/kpath.hpp"

namespace dissoc {

namespace {

std::string edge_name(const Forest& f, const Edge& e) { return f.label(e.u) + "-" + f.label(e.v); }

std::string triple_name(const Forest& f, const CriticalTriple& t) {
  return f.label(t.end1) + "-" + f.label(t.middle) + "-" + f.label(t.end2);
}

std::string set_name(const Forest& f, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += f.label(v);
    first = false;
  });
  return out + "}";
}

std::size_t neighbours_in(const Forest& f, Vertex v, const VertexSet& s) {
  std::size_t c = 0;
  for (Vertex w : f.neighbors(v)) c += s.contains(w) ? 1 : 0;
  return c;
}

// Splits components into insulated edges and triples; returns false if some component is larger.
bool split_components(const std::vector<std::vector<Edge>>& comps, std::vector<Edge>& insulated,
                      std::vector<CriticalTriple>& triples, std::vector<Edge>* offending) {
  bool ok = true;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      insulated.push_back(comp[0]);
    } else if (comp.size() == 2) {
      const Edge& a = comp[0];
      const Edge& b = comp[1];
      const Vertex mid = (a.u == b.u || a.u == b.v) ? a.u : a.v;
      Vertex x = a.other(mid), y = b.other(mid);
      if (x > y) std::swap(x, y);
      triples.push_back(CriticalTriple{x, mid, y});
    } else {
      ok = false;
      if (offending && offending->empty()) *offending = comp;
    }
  }
  std::sort(insulated.begin(), insulated.end());
  std::sort(triples.begin(), triples.end());
  return ok;
}

struct Check {
  CheckOutcome outcome;

  explicit Check(std::string name) { outcome.name = std::move(name); }
  void fail(const std::string& witness) {
    if (outcome.status != CheckStatus::kFail) {
      outcome.status = CheckStatus::kFail;
      outcome.witness = witness;
    }
  }
  void skip() { outcome.status = CheckStatus::kSkipped; }
};

}  // namespace

std::vector<Edge> critical_edges_alpha3(const Forest& forest) {
  const std::size_t base = alpha3(forest);
  std::vector<Edge> out;
  for (const Edge& e : forest.edges()) {
    if (alpha3(forest.without_edge(e)) > base) out.push_back(e);
  }
  return out;
}

std::vector<Edge> critical_edges_mu3(const Forest& forest) {
  const std::size_t base = greedy_cover_matching(forest, 3).matching.size();
  std::vector<Edge> out;
  for (const Edge& e : forest.edges()) {
    if (greedy_cover_matching(forest.without_edge(e), 3).matching.size() < base) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<Edge>> edge_components(const std::vector<Edge>& edges) {
  std::map<Vertex, Vertex> parent;
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    parent.try_emplace(e.u, e.u);
    parent.try_emplace(e.v, e.v);
  }
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
  std::map<Vertex, std::vector<Edge>> groups;
  for (const Edge& e : edges) groups[find(e.u)].push_back(e);
  std::vector<std::vector<Edge>> out;
  for (auto& [root, comp] : groups) {
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CriticalStructure critical_structure(const Forest& forest) {
  CriticalStructure cs;
  cs.critical_edges = critical_edges_alpha3(forest);
  cs.eta = cs.critical_edges.size();
  std::vector<Edge> offending;
  if (!split_components(edge_components(cs.critical_edges), cs.insulated_edges, cs.critical_triples, &offending)) {
    std::string msg = "critical component with " + std::to_string(offending.size()) + " edges:";
    for (const Edge& e : offending) msg += " " + edge_name(forest, e);
    throw StructureViolation(msg);
  }
  return cs;
}

VertexClassification classify_vertices(const Forest& forest) {
  const std::size_t n = forest.order();
  const std::size_t base = alpha3(forest);
  VertexClassification cls{VertexSet(n), VertexSet(n), VertexSet(n)};
  const VertexSet none(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet one(n, {v});
    const auto without = alpha3_forced(forest, none, one);
    const auto with = alpha3_forced(forest, one, none);
    if (!without || *without < base) {
      cls.static_included.insert(v);
    } else if (!with || *with < base) {
      cls.static_excluded.insert(v);
    } else {
      cls.flexible.insert(v);
    }
  }
  return cls;
}

VertexClassification classify_from_sets(std::size_t n, const std::vector<VertexSet>& all_mds) {
  VertexClassification cls{VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) {
    const auto hits = static_cast<std::size_t>(
        std::count_if(all_mds.begin(), all_mds.end(), [&](const VertexSet& s) { return s.contains(v); }));
    if (hits == all_mds.size()) {
      cls.static_included.insert(v);
    } else if (hits == 0) {
      cls.static_excluded.insert(v);
    } else {
      cls.flexible.insert(v);
    }
  }
  return cls;
}

VertexSet build_canonical_mds(const Forest& tree, Vertex root, const VertexClassification& cls,
                              const std::vector<Edge>& critical) {
  const RootedView view = root_at(tree, root);
  VertexSet s = cls.static_included;
  for (const Edge& e : critical) s.insert(view.level[e.u] > view.level[e.v] ? e.u : e.v);
  return s;
}

VertexSet build_canonical_mds(const Forest& tree, Vertex root) {
  return build_canonical_mds(tree, root, classify_vertices(tree), critical_edges_alpha3(tree));
}

std::optional<BigCount> mds_count_bound(std::size_t flexible, std::size_t triples) {
  if (flexible < 3 * triples || (flexible - 3 * triples) % 2 != 0) return std::nullopt;
  return pow3_pow2(static_cast<unsigned>(triples), static_cast<unsigned>((flexible - 3 * triples) / 2));
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

std::size_t TheoremReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.status == CheckStatus::kFail; }));
}

const CheckOutcome* TheoremReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TheoremReport verify_structure_theorems(const Forest& tree, const StructureCheckOptions& options) {
  if (!tree.is_tree()) throw ArgumentError("verify_structure_theorems: input is not a tree");
  const std::size_t n = tree.order();
  const DissociationResult dp = alpha3_count_dp(tree);
  const std::vector<Edge> critical = critical_edges_alpha3(tree);
  const auto comps = edge_components(critical);
  std::vector<Edge> insulated;
  std::vector<CriticalTriple> triples;
  std::vector<Edge> offending;
  const bool small_components = split_components(comps, insulated, triples, &offending);
  const VertexClassification cls = classify_vertices(tree);
  const VertexSet& A = cls.static_included;

  std::vector<VertexSet> all_mds;
  const bool enumerated = dp.count <= options.enumerate_cap;
  if (enumerated) all_mds = enumerate_mds(tree, options.enumerate_cap);

  TheoremReport report;

  {
    Check c("alpha3_mu3_critical_agree");
    const auto mu_critical = critical_edges_mu3(tree);
    if (mu_critical != critical) {
      std::vector<Edge> diff;
      std::set_symmetric_difference(critical.begin(), critical.end(), mu_critical.begin(), mu_critical.end(),
                                    std::back_inserter(diff));
      c.fail("edge " + edge_name(tree, diff.front()) + " critical for only one of alpha3/mu3");
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("critical_edge_deletion");
    for (const Edge& e : critical) {
      const Forest cut = tree.without_edge(e);
      const std::size_t after = alpha3(cut);
      if (after != dp.alpha3 + 1) {
        c.fail("deleting " + edge_name(tree, e) + " gives alpha3 " + std::to_string(after));
        break;
      }
      const VertexSet none(n);
      for (Vertex end : {e.u, e.v}) {
        const auto best = alpha3_forced(cut, none, VertexSet(n, {end}));
        if (best && *best == after) {
          c.fail("a maximum dissociation set of T-" + edge_name(tree, e) + " omits " + tree.label(end));
        }
      }
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("mds_hits_every_critical_edge");
    if (!enumerated) {
      c.skip();
    } else {
      for (const auto& s : all_mds) {
        for (const Edge& e : critical) {
          if (!s.contains(e.u) && !s.contains(e.v)) {
            c.fail(set_name(tree, s) + " misses " + edge_name(tree, e));
          }
        }
      }
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("flexible_iff_critical_endpoint");
    VertexSet ends(n);
    for (const Edge& e : critical) {
      ends.insert(e.u);
      ends.insert(e.v);
    }
    if (!(ends == cls.flexible)) {
      c.fail("flexible " + set_name(tree, cls.flexible) + " vs critical endpoints " + set_name(tree, ends));
    }
    if (enumerated) {
      const VertexClassification direct = classify_from_sets(n, all_mds);
      if (!(direct.flexible == cls.flexible) || !(direct.static_included == cls.static_included)) {
        c.fail("DP classification disagrees with enumeration");
      }
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("critical_components_small");
    if (!small_components) {
      std::string w = "component:";
      for (const Edge& e : offending) w += " " + edge_name(tree, e);
      c.fail(w);
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("insulated_endpoint_one_static_neighbor");
    for (const Edge& e : insulated) {
      for (Vertex x : {e.u, e.v}) {
        std::vector<Vertex> in_a;
        for (Vertex w : tree.neighbors(x)) {
          if (A.contains(w)) in_a.push_back(w);
        }
        if (in_a.size() != 1) {
          c.fail(tree.label(x) + " has " + std::to_string(in_a.size()) + " static-included neighbors");
        } else if (neighbours_in(tree, in_a[0], A) != 0) {
          c.fail("static neighbor " + tree.label(in_a[0]) + " of " + tree.label(x) + " is not isolated in T[A]");
        }
      }
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("critical_path_avoids_static");
    for (const auto& t : triples) {
      for (Vertex x : {t.end1, t.middle, t.end2}) {
        if (neighbours_in(tree, x, A) != 0) c.fail(tree.label(x) + " on " + triple_name(tree, t) + " touches A_T");
      }
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("mds_meets_components_exactly");
    if (!enumerated) {
      c.skip();
    } else {
      for (const auto& s : all_mds) {
        for (const Edge& e : insulated) {
          if (s.contains(e.u) + s.contains(e.v) != 1) c.fail(set_name(tree, s) + " vs " + edge_name(tree, e));
        }
        for (const auto& t : triples) {
          if (s.contains(t.end1) + s.contains(t.middle) + s.contains(t.end2) != 2) {
            c.fail(set_name(tree, s) + " vs " + triple_name(tree, t));
          }
        }
      }
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("alpha3_equals_static_plus_eta");
    if (dp.alpha3 != A.size() + critical.size()) {
      c.fail("alpha3=" + std::to_string(dp.alpha3) + " |A|=" + std::to_string(A.size()) +
             " eta=" + std::to_string(critical.size()));
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("canonical_mds_is_maximum");
    for (Vertex r = 0; r < n; ++r) {
      const VertexSet s = build_canonical_mds(tree, r, cls, critical);
      if (s.size() != dp.alpha3 || !is_dissociation_set(tree, s)) {
        c.fail("root " + tree.label(r) + " gives " + set_name(tree, s));
        break;
      }
    }
    report.checks.push_back(c.outcome);
  }
  {
    Check c("static_excluded_adjacency");
    cls.static_excluded.for_each([&](Vertex v) {
      std::size_t p = 0, q = 0;
      for (Vertex w : tree.neighbors(v)) {
        if (!A.contains(w)) continue;
        (neighbours_in(tree, w, A) == 0 ? p : q) += 1;
      }
      if (!(p + 2 * q >= 4 || p == 3)) {
        c.fail(tree.label(v) + ": p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
    });
    if (!cls.static_excluded.empty() && A.size() < 3) c.fail("N_T nonempty but |A_T|=" + std::to_string(A.size()));
    report.checks.push_back(c.outcome);
  }
  {
    Check c("mds_count_bound");
    const auto bound = mds_count_bound(cls.flexible.size(), triples.size());
    if (!bound) {
      c.fail("flexible=" + std::to_string(cls.flexible.size()) + " triples=" + std::to_string(triples.size()) +
             " give a non-integral exponent");
    } else if (dp.count > *bound) {
      c.fail("count " + to_decimal(dp.count) + " exceeds " + to_decimal(*bound));
    }
    report.checks.push_back(c.outcome);
  }
  return report;
}

}  // namespace dissoc
