#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dissoc/canonical.hpp"
#include "dissoc/count.hpp"
#include "dissoc/forest.hpp"

namespace dissoc {

/// Small trees glued at a shared leaf to form S*_{T1,...,Tr}.
enum class Leg { kP2, kP3, kP4, kK13 };

std::string to_string(Leg leg);

struct LegSpec {
  std::vector<Leg> legs;
};

/// Hub vertex 0, then each leg's remaining vertices in order. A P2 leg adds
/// one pendant vertex, P3 a pendant path of two, P4 a pendant path of three,
/// and K13 a vertex adjacent to the hub carrying two further leaves.
Forest star_construction(const LegSpec& spec);

/// The 8-vertex tree u1u2, u2u3, u3u4 with a pendant v_i on each u_i.
/// Vertices u1..u4 are 0..3 and v1..v4 are 4..7.
Forest lt8();

/// Largest number of maximum dissociation sets over trees of order n.
/// n = 1 and n = 2 return 1 (the closed form does not apply there; see
/// formula_applies). Throws ArgumentError for n = 0.
BigCount max_mds_formula(std::size_t n);
bool formula_applies(std::size_t n);

/// Whether the extremal trees of order n have a known characterization
/// (false for n < 3 and for n = 4).
bool extremal_family_characterized(std::size_t n);

/// Caveat attached to reports for orders outside the general pattern; empty otherwise.
std::string extremal_note(std::size_t n);

/// Candidate extremal trees of order n, deduplicated and sorted by canonical
/// code. Throws ArgumentError for n < 3.
std::vector<Forest> generate_extremal_family(std::size_t n);

struct ExtremalReport {
  std::size_t n = 0;
  std::uint64_t trees = 0;
  BigCount formula_value;
  BigCount observed_max;
  std::vector<CanonicalCode> extremal_codes;   // from the sweep, sorted
  std::vector<CanonicalCode> predicted_codes;  // from generate_extremal_family, sorted
  bool characterized = false;
  bool match = false;
  std::string note;
};

inline constexpr std::size_t kSweepLimit = 18;

struct SweepOptions {
  std::size_t max_n = kSweepLimit;
  std::size_t jobs = 1;
};

/// Runs the counting DP on every free tree of order n and compares the
/// maximum and its argmax classes with the formula and the generated family.
/// Throws GuardError above options.max_n.
ExtremalReport exhaustive_extremal_check(std::size_t n, const SweepOptions& options = {});

}  // namespace dissoc
