#pragma once
// Global (locally trivial) deformation contribution computed from the
// ramification data of the quotient map, and assembly of total dimensions
// from a global part plus per-point local bounds.

#include "defcurve/cohomology.hpp"
#include "defcurve/filtration.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace defcurve {

// One branch point of the quotient map, described by the orders of the
// higher ramification groups at a point above it: e_0 >= e_1 >= ... >= 2,
// one entry per lower-numbering index starting at 0.
struct BranchPoint {
  std::vector<long long> orders;
};

// Ramification data of a Galois cover X -> Y: the genus of Y and the branch
// points with their ramification-order sequences.
struct CoverData {
  long long quotient_genus = 0;
  std::vector<BranchPoint> branch_points;
};

// Throws std::invalid_argument when the cover data is structurally invalid:
// negative genus, an empty order sequence, an entry below 2, or a sequence
// that increases.  Divisibility between consecutive orders is not enforced
// here; see cover_warnings.
void validate_cover(const CoverData& cover);

// Non-fatal diagnostics: consecutive orders that fail divisibility (the
// orders of nested groups should divide each other), and a negative
// contribution value, which is not a dimension - check cover data.
std::vector<std::string> cover_warnings(const CoverData& cover);

// 3*g_Y - 3 + sum over branch points of ceil(sum_i (e_i - 1) / e_0).
// The raw value is returned even when negative; callers that want the
// accompanying diagnostics use cover_warnings.
long long global_contribution(const CoverData& cover);

// JSON shape: {"genus_quotient": int, "branch_points": [{"orders": [int,...]}]}.
CoverData cover_from_json(const nlohmann::json& j);
nlohmann::json cover_to_json(const CoverData& cover);

// Order sequence of the higher ramification groups attached to a filtration:
// e_0 = tame_order * wild_order, and for i >= 1 up to the last jump position
// e_i is the order of the first jump at position >= i (the groups stay
// constant between jumps).
std::vector<long long> cover_orders_from_filtration(const RamificationFiltration& filt);

// Total tangent-space dimension assembled from the global part and the
// per-point local bounds.  The interval is recomputed from its inputs:
// it collapses to a point exactly when every local bound is exact.
struct DimensionReport {
  long long global = 0;
  std::vector<DimBound> locals;
  long long total_lower = 0;
  long long total_upper = 0;
  std::vector<std::string> notes;

  bool is_exact() const { return total_lower == total_upper; }
};

// total interval = [global + sum of local lowers, global + sum of local
// uppers], where an exact local value replaces both of its bounds.
DimensionReport total_dimension(long long global, const std::vector<DimBound>& locals);

}  // namespace defcurve
