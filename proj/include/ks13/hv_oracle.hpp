#pragma once

// Brute-force noncontextual hidden-variable oracles. Every bound is
// established by exhaustive enumeration in exact integer arithmetic:
//
//   * all 2^13 = 8192 assignments a_r in {+1,-1} of the witness
//     expression, whose maximum is exactly 8;
//   * all {0,1} colorings obeying the exclusivity rule (no orthogonal
//     pair both 1) and the completeness rule (exactly one 1 per complete
//     triple), over which sum_a b_{h_a} is at most 1.
//
// Enumeration order is lexicographic over the canonical label order with
// +1 before -1 (resp. 0 before 1), so two runs produce identical output.
// The parallel search splits the assignment space into fixed chunks and
// merges per-chunk results in chunk order, which keeps the result
// byte-identical to the serial reference.

#include <array>
#include <cstdint>
#include <vector>

#include "ks13/common.hpp"
#include "ks13/qutrit.hpp"

namespace ks13 {

/// One +/-1 value per ray, canonical order. values[k] = a_{r_k}.
struct Assignment {
  std::array<std::int8_t, kNumRays> values;

  /// Assignment number m in [0, 2^13): bit (12-k) of m set means
  /// values[k] = -1, so increasing m is lexicographic with +1 first.
  static Assignment from_ordinal(std::uint32_t m);

  bool operator==(const Assignment&) const = default;
};

/// Exact value in quarter units (denominator 4, no rounding anywhere).
struct QuarterValue {
  long long quarters = 0;
  double value() const { return static_cast<double>(quarters) / 4.0; }
  bool operator==(const QuarterValue&) const = default;
};

/// Witness expression sum_r a_r - (1/2) sum_{edges} a_r a_s for one
/// assignment, exact. (The pair sum counts ordered compatible pairs with
/// weight 1/4; each unordered edge is evaluated once with weight 1/2.)
QuarterValue assignment_value(const Assignment& a, const CompatibilityGraph& g);

struct AssignmentSearch {
  QuarterValue maximum;
  std::vector<Assignment> maximizers;  // in enumeration order
};

/// Exhaustive maximum over all 2^13 assignments with every maximizer.
AssignmentSearch max_assignment_value(const CompatibilityGraph& g,
                                      ExecMode mode = ExecMode::Parallel);

/// One 0/1 value per ray, canonical order.
struct KsColoring {
  std::array<std::uint8_t, kNumRays> values;
  bool operator==(const KsColoring&) const = default;
};

/// True iff no edge has both endpoints 1 and every complete triple has
/// exactly one member 1.
bool is_valid_coloring(const KsColoring& c, const CompatibilityGraph& g);

/// All admissible colorings, found by depth-first search with edge and
/// triple pruning, emitted in lexicographic order (0 before 1).
std::vector<KsColoring> enumerate_colorings(const CompatibilityGraph& g);

/// Largest (resp. smallest) value of b_{h0}+b_{h1}+b_{h2}+b_{h3} over a
/// coloring list.
int max_h_count(const std::vector<KsColoring>& colorings,
                const CompatibilityGraph& g);
int min_h_count(const std::vector<KsColoring>& colorings,
                const CompatibilityGraph& g);

}  // namespace ks13
