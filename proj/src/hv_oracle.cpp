#include "ks13/hv_oracle.hpp"

#include <limits>

#include <omp.h>

namespace ks13 {

Assignment Assignment::from_ordinal(std::uint32_t m) {
  Assignment a{};
  for (int k = 0; k < kNumRays; ++k)
    a.values[k] = (m >> (kNumRays - 1 - k)) & 1u ? -1 : 1;
  return a;
}

QuarterValue assignment_value(const Assignment& a,
                              const CompatibilityGraph& g) {
  long long sum = 0;
  for (int k = 0; k < kNumRays; ++k) sum += a.values[k];
  long long pair_sum = 0;
  for (const auto& [i, j] : g.edges)
    pair_sum += static_cast<long long>(a.values[i]) * a.values[j];
  return {4 * sum - 2 * pair_sum};
}

namespace {

constexpr std::uint32_t kSpace = 1u << kNumRays;

AssignmentSearch search_range(std::uint32_t lo, std::uint32_t hi,
                              const CompatibilityGraph& g) {
  AssignmentSearch best;
  best.maximum.quarters = std::numeric_limits<long long>::min();
  for (std::uint32_t m = lo; m < hi; ++m) {
    const Assignment a = Assignment::from_ordinal(m);
    const QuarterValue v = assignment_value(a, g);
    if (v.quarters > best.maximum.quarters) {
      best.maximum = v;
      best.maximizers.clear();
      best.maximizers.push_back(a);
    } else if (v.quarters == best.maximum.quarters) {
      best.maximizers.push_back(a);
    }
  }
  return best;
}

void merge_into(AssignmentSearch& acc, AssignmentSearch&& part) {
  if (part.maximum.quarters > acc.maximum.quarters) {
    acc = std::move(part);
  } else if (part.maximum.quarters == acc.maximum.quarters) {
    acc.maximizers.insert(acc.maximizers.end(), part.maximizers.begin(),
                          part.maximizers.end());
  }
}

}  // namespace

AssignmentSearch max_assignment_value(const CompatibilityGraph& g,
                                      ExecMode mode) {
  if (mode == ExecMode::Serial) return search_range(0, kSpace, g);

  // Fixed chunking independent of the thread count; the ordered merge
  // reproduces the serial enumeration order exactly.
  constexpr int kChunks = 64;
  constexpr std::uint32_t kChunkSize = kSpace / kChunks;
  std::array<AssignmentSearch, kChunks> parts;
#pragma omp parallel for schedule(static)
  for (int c = 0; c < kChunks; ++c)
    parts[c] = search_range(c * kChunkSize, (c + 1) * kChunkSize, g);

  AssignmentSearch best;
  best.maximum.quarters = std::numeric_limits<long long>::min();
  for (auto& p : parts) merge_into(best, std::move(p));
  return best;
}

bool is_valid_coloring(const KsColoring& c, const CompatibilityGraph& g) {
  for (const auto& [i, j] : g.edges)
    if (c.values[i] == 1 && c.values[j] == 1) return false;
  for (const auto& t : g.triples) {
    const int ones = c.values[t[0]] + c.values[t[1]] + c.values[t[2]];
    if (ones != 1) return false;
  }
  return true;
}

namespace {

void color_dfs(int k, KsColoring& c, const CompatibilityGraph& g,
               std::vector<KsColoring>& out) {
  const int n = static_cast<int>(g.nodes.size());
  if (k == n) {
    out.push_back(c);
    return;
  }
  for (std::uint8_t v : {std::uint8_t{0}, std::uint8_t{1}}) {
    c.values[k] = v;
    bool ok = true;
    if (v == 1) {
      for (int nb : g.adjacency[k])
        if (nb < k && c.values[nb] == 1) { ok = false; break; }
    }
    if (ok) {
      // Triple rule: decided triples need exactly one 1, partially
      // decided ones must not already hold two.
      for (const auto& t : g.triples) {
        int ones = 0;
        for (int m : t)
          if (m <= k) ones += c.values[m];
        const bool decided = t[2] <= k;  // indices are sorted
        if (ones > 1 || (decided && ones != 1)) { ok = false; break; }
      }
    }
    if (ok) color_dfs(k + 1, c, g, out);
  }
  c.values[k] = 0;
}

int h_count(const KsColoring& c, const CompatibilityGraph& g) {
  int s = 0;
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    if (!g.nodes[k].empty() && g.nodes[k][0] == 'h') s += c.values[k];
  return s;
}

}  // namespace

std::vector<KsColoring> enumerate_colorings(const CompatibilityGraph& g) {
  std::vector<KsColoring> out;
  KsColoring c{};
  color_dfs(0, c, g, out);
  return out;
}

int max_h_count(const std::vector<KsColoring>& colorings,
                const CompatibilityGraph& g) {
  int best = 0;
  for (const auto& c : colorings) best = std::max(best, h_count(c, g));
  return best;
}

int min_h_count(const std::vector<KsColoring>& colorings,
                const CompatibilityGraph& g) {
  int best = kNumRays;
  for (const auto& c : colorings) best = std::min(best, h_count(c, g));
  return best;
}

}  // namespace ks13
