#include "report.hpp"

#include <algorithm>
#include <map>

#include "dissoc/dissociation.hpp"

namespace dissoc::cli {

namespace {

Json labels_of(const Forest& f, const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](Vertex v) { out.push_back(f.label(v)); });
  return out;
}

Json edges_json(const Forest& f, const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({f.label(e.u), f.label(e.v)}));
  return out;
}

// Merges per-component reports: a check fails if any component fails, and is
// skipped if any component skipped it and none failed.
TheoremReport merge_reports(const std::vector<std::pair<std::vector<Vertex>, TheoremReport>>& parts) {
  TheoremReport merged;
  for (const auto& [comp, rep] : parts) {
    for (const auto& c : rep.checks) {
      auto it = std::find_if(merged.checks.begin(), merged.checks.end(),
                             [&](const CheckOutcome& m) { return m.name == c.name; });
      if (it == merged.checks.end()) {
        merged.checks.push_back(c);
        continue;
      }
      if (it->status == CheckStatus::kFail) continue;
      if (c.status == CheckStatus::kFail || c.status == CheckStatus::kSkipped) {
        it->status = c.status;
        it->witness = c.witness;
      }
    }
  }
  return merged;
}

}  // namespace

bool AnalysisReport::violated() const {
  if (!structure_ok || checks.failures() > 0) return true;
  return std::any_of(kke.begin(), kke.end(), [](const KkeEntry& e) { return !e.report.holds || !e.certificate_valid; });
}

AnalysisReport analyze_forest(const Forest& forest, const std::vector<std::size_t>& ks, std::size_t enumerate_cap) {
  AnalysisReport r;
  r.n = forest.order();
  const DissociationResult dp = alpha3_count_dp(forest);
  r.alpha3 = dp.alpha3;
  r.mds_count = dp.count;
  r.critical_edges = critical_edges_alpha3(forest);
  for (const auto& comp : edge_components(r.critical_edges)) {
    if (comp.size() == 1) {
      r.insulated_edges.push_back(comp[0]);
    } else if (comp.size() == 2) {
      const Vertex mid = comp[0].touches(comp[1].u) ? comp[1].u : comp[1].v;
      Vertex a = comp[0].other(mid), b = comp[1].other(mid);
      if (a > b) std::swap(a, b);
      r.critical_triples.push_back(CriticalTriple{a, mid, b});
    } else {
      r.structure_ok = false;
    }
  }
  std::sort(r.insulated_edges.begin(), r.insulated_edges.end());
  std::sort(r.critical_triples.begin(), r.critical_triples.end());
  r.classes = classify_vertices(forest);

  std::vector<std::pair<std::vector<Vertex>, TheoremReport>> parts;
  for (const auto& comp : forest.components()) {
    const Forest sub = forest.induced(comp);
    parts.emplace_back(comp, verify_structure_theorems(sub, StructureCheckOptions{enumerate_cap}));
  }
  r.checks = merge_reports(parts);

  for (std::size_t k : ks) {
    KkeEntry e;
    e.report = verify_kke(forest, k, KkeMode::kFast);
    const auto cert = greedy_cover_matching(forest, k);
    e.tau_k = cert.cover.size();
    e.certificate_valid = is_valid_certificate(forest, cert);
    r.kke.push_back(e);
  }
  return r;
}

Json to_json(const Forest& forest, const AnalysisReport& r) {
  Json j;
  j["n"] = r.n;
  j["alpha3"] = r.alpha3;
  j["mds_count"] = to_decimal(r.mds_count);
  j["critical_edges"] = edges_json(forest, r.critical_edges);
  j["insulated_edges"] = edges_json(forest, r.insulated_edges);
  Json triples = Json::array();
  for (const auto& t : r.critical_triples) {
    triples.push_back(Json::array({forest.label(t.end1), forest.label(t.middle), forest.label(t.end2)}));
  }
  j["critical_triples"] = triples;
  j["eta"] = r.critical_edges.size();
  j["flexible"] = labels_of(forest, r.classes.flexible);
  j["static_included"] = labels_of(forest, r.classes.static_included);
  j["static_excluded"] = labels_of(forest, r.classes.static_excluded);
  Json checks = Json::object();
  Json witnesses = Json::object();
  for (const auto& c : r.checks.checks) {
    checks[c.name] = to_string(c.status);
    if (c.status == CheckStatus::kFail) witnesses[c.name] = c.witness;
  }
  j["theorem_checks"] = checks;
  if (!witnesses.empty()) j["witnesses"] = witnesses;
  Json kke = Json::object();
  for (const auto& e : r.kke) {
    Json entry;
    entry["alpha_k"] = e.report.alpha_k;
    entry["mu_k"] = e.report.mu_k;
    entry["tau_k"] = e.tau_k;
    entry["certificate_valid"] = e.certificate_valid;
    entry["holds"] = e.report.holds;
    kke[std::to_string(e.report.k)] = entry;
  }
  j["kke"] = kke;
  return j;
}

Json family_json(std::size_t n) {
  Json family = Json::array();
  if (n < 3) return family;
  for (const Forest& t : generate_extremal_family(n)) {
    Json entry;
    entry["code"] = canonical_code(t).code;
    entry["edges"] = edges_json(t, t.edges());
    entry["mds_count"] = to_decimal(alpha3_count_dp(t).count);
    family.push_back(entry);
  }
  return family;
}

Json to_json(const ExtremalReport& r, bool swept) {
  Json j;
  j["n"] = r.n;
  j["formula_value"] = to_decimal(r.formula_value);
  j["formula_applies"] = formula_applies(r.n);
  j["characterized"] = extremal_family_characterized(r.n);
  j["family"] = family_json(r.n);
  if (swept) {
    j["trees"] = r.trees;
    j["observed_max"] = to_decimal(r.observed_max);
    Json ext = Json::array();
    for (const auto& c : r.extremal_codes) ext.push_back(c.code);
    j["extremal_codes"] = ext;
    Json pred = Json::array();
    for (const auto& c : r.predicted_codes) pred.push_back(c.code);
    j["predicted_codes"] = pred;
    j["match"] = r.match;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace dissoc::cli
