#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "dissoc/extremal.hpp"
#include "dissoc/forest.hpp"
#include "dissoc/kpath.hpp"
#include "dissoc/structure.hpp"

namespace dissoc::cli {

using Json = nlohmann::ordered_json;

struct KkeEntry {
  KkeReport report;
  std::size_t tau_k = 0;
  bool certificate_valid = false;
};

/// Everything `analyze` reports about one forest.
struct AnalysisReport {
  std::size_t n = 0;
  std::size_t alpha3 = 0;
  BigCount mds_count;
  std::vector<Edge> critical_edges;
  std::vector<Edge> insulated_edges;
  std::vector<CriticalTriple> critical_triples;
  VertexClassification classes;
  TheoremReport checks;
  std::vector<KkeEntry> kke;
  bool structure_ok = true;

  bool violated() const;
};

AnalysisReport analyze_forest(const Forest& forest, const std::vector<std::size_t>& ks, std::size_t enumerate_cap);

Json to_json(const Forest& forest, const AnalysisReport& report);
Json to_json(const ExtremalReport& report, bool swept);
Json family_json(std::size_t n);

}  // namespace dissoc::cli
