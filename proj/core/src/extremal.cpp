#include "dissoc/extremal.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "dissoc/dissociation.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/treegen.hpp"

namespace dissoc {

namespace {

// All multisets of `count` legs drawn from {P4, K13}.
std::vector<std::vector<Leg>> p4_k13_multisets(std::size_t count) {
  std::vector<std::vector<Leg>> out;
  for (std::size_t k13 = 0; k13 <= count; ++k13) {
    std::vector<Leg> legs(count - k13, Leg::kP4);
    legs.insert(legs.end(), k13, Leg::kK13);
    out.push_back(std::move(legs));
  }
  return out;
}

std::vector<Leg> concat(std::vector<Leg> head, const std::vector<Leg>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

BigCount pow3(std::size_t e) { return pow3_pow2(static_cast<unsigned>(e), 0); }

// Fixed-width DP with an arbitrary-precision fallback.
BigCount mds_count(const Forest& t) {
  try {
    return BigCount(alpha3_count_dp_fixed(t).count);
  } catch (const OverflowError&) {
    return alpha3_count_dp(t).count;
  }
}

}  // namespace

std::string to_string(Leg leg) {
  switch (leg) {
    case Leg::kP2: return "P2";
    case Leg::kP3: return "P3";
    case Leg::kP4: return "P4";
    case Leg::kK13: return "K13";
  }
  return "?";
}

Forest star_construction(const LegSpec& spec) {
  if (spec.legs.empty()) throw ArgumentError("star_construction: at least one leg required");
  std::vector<Edge> edges;
  Vertex next = 1;
  auto pendant_path = [&](std::size_t extra) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < extra; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  };
  for (Leg leg : spec.legs) {
    switch (leg) {
      case Leg::kP2: pendant_path(1); break;
      case Leg::kP3: pendant_path(2); break;
      case Leg::kP4: pendant_path(3); break;
      case Leg::kK13: {
        const Vertex centre = next++;
        edges.emplace_back(0, centre);
        edges.emplace_back(centre, next++);
        edges.emplace_back(centre, next++);
        break;
      }
    }
  }
  return Forest::from_edges(next, edges);
}

Forest lt8() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  return Forest::from_edges(8, edges, {"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"});
}

bool formula_applies(std::size_t n) { return n >= 3; }

BigCount max_mds_formula(std::size_t n) {
  if (n == 0) throw ArgumentError("max_mds_formula: n must be at least 1");
  if (n <= 2) return 1;
  switch (n % 3) {
    case 0: return pow3(n / 3 - 1) + n / 3 + 1;
    case 1: return pow3((n - 1) / 3 - 1) + 1;
    default: return pow3((n - 2) / 3 - 1);
  }
}

bool extremal_family_characterized(std::size_t n) { return n >= 3 && n != 4; }

std::vector<Forest> generate_extremal_family(std::size_t n) {
  if (n < 3) throw ArgumentError("generate_extremal_family: n must be at least 3");
  std::vector<std::vector<Leg>> specs;
  if (n % 3 == 0) {
    const std::size_t m = n / 3;
    specs.push_back(concat({Leg::kP3}, std::vector<Leg>(m - 1, Leg::kP4)));
  } else if (n % 3 == 1) {
    const std::size_t m = (n - 1) / 3;
    if (m >= 2) {
      for (const auto& tail : p4_k13_multisets(m - 1)) specs.push_back(concat({Leg::kP3, Leg::kP2}, tail));
    }
  } else {
    const std::size_t m = (n - 2) / 3;
    for (const auto& tail : p4_k13_multisets(m - 1)) {
      specs.push_back(concat({Leg::kP3, Leg::kP3}, tail));
      specs.push_back(concat({Leg::kP2, Leg::kP2, Leg::kP2, Leg::kP2}, tail));
      specs.push_back(concat({Leg::kP3, Leg::kP2, Leg::kP2}, tail));
    }
  }

  std::vector<std::pair<CanonicalCode, Forest>> keyed;
  for (const auto& legs : specs) {
    Forest t = star_construction(LegSpec{legs});
    keyed.emplace_back(canonical_code(t), std::move(t));
  }
  if (n == 4) {
    Forest p4 = Forest::path(4);
    keyed.emplace_back(canonical_code(p4), std::move(p4));
  }
  if (n == 8) {
    Forest t = lt8();
    keyed.emplace_back(canonical_code(t), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Forest> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    out.push_back(std::move(keyed[i].second));
  }
  return out;
}

ExtremalReport exhaustive_extremal_check(std::size_t n, const SweepOptions& options) {
  if (n == 0) throw ArgumentError("exhaustive_extremal_check: n must be at least 1");
  if (n > options.max_n) throw GuardError("exhaustive_extremal_check", options.max_n, n);
  const std::size_t jobs = std::max<std::size_t>(options.jobs, 1);

  struct Local {
    std::uint64_t trees = 0;
    BigCount best = 0;
    std::set<CanonicalCode> codes;
  };
  std::vector<Local> locals(jobs);
  parallel_for_each_free_tree(n, jobs, [&](std::size_t w, std::uint64_t, const Forest& t) {
    Local& L = locals[w];
    ++L.trees;
    const BigCount c = mds_count(t);
    if (c > L.best) {
      L.best = c;
      L.codes.clear();
    }
    if (c == L.best) L.codes.insert(canonical_code(t));
  });

  ExtremalReport r;
  r.n = n;
  r.formula_value = max_mds_formula(n);
  std::set<CanonicalCode> codes;
  for (const Local& L : locals) {
    r.trees += L.trees;
    if (L.best > r.observed_max) {
      r.observed_max = L.best;
      codes.clear();
    }
    if (L.best == r.observed_max) codes.insert(L.codes.begin(), L.codes.end());
  }
  r.extremal_codes.assign(codes.begin(), codes.end());
  r.characterized = extremal_family_characterized(n);
  if (n >= 3) {
    for (const Forest& t : generate_extremal_family(n)) r.predicted_codes.push_back(canonical_code(t));
    std::sort(r.predicted_codes.begin(), r.predicted_codes.end());
  }
  r.match = r.observed_max == r.formula_value;
  if (r.characterized) r.match = r.match && r.extremal_codes == r.predicted_codes;

  r.note = extremal_note(n);
  return r;
}

std::string extremal_note(std::size_t n) {
  if (!formula_applies(n)) return "closed form undefined below n=3; formula value is the conventional 1";
  if (n == 4) return "extremal trees of order 4 are uncharacterized; only the maximum is compared";
  if (n == 5) return "degenerate case: the three families reduce to single trees of order 5";
  return {};
}

}  // namespace dissoc
