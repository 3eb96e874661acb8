#pragma once

// Exact qutrit machinery for the 13-ray state-independent contextuality
// test: states, the thirteen measurement directions, their projectors and
// dichotomic observables, the orthogonality (compatibility) graph, and
// closed-form evaluation of the two tested inequalities.
//
// The thirteen directions, in the canonical order used everywhere in this
// project (integer components, unnormalized):
//
//   z1 = ( 1, 0, 0)   z2 = ( 0, 1, 0)   z3 = ( 0, 0, 1)
//   y1- = (0, 1,-1)   y1+ = (0, 1, 1)
//   y2- = (-1,0, 1)   y2+ = (1, 0, 1)
//   y3- = (1,-1, 0)   y3+ = (1, 1, 0)
//   h0 = ( 1, 1, 1)   h1 = (-1, 1, 1)   h2 = (1,-1, 1)   h3 = (1, 1,-1)
//
// Exactly 24 unordered pairs are orthogonal, and exactly 4 triples are
// mutually orthogonal ({z1,z2,z3} and {z_m, ym+, ym-} for m = 1,2,3).
// Orthogonality is always decided on the integer components, never on
// floating-point normalized vectors.
//
// Each direction r carries a rank-1 projector B_r = |r><r| and the
// dichotomic observable A_r = I - 2 B_r with spectrum {+1, +1, -1}.
// Two operator identities pin the construction down:
//
//   sum_r A_r - (1/2) sum_{r<s orthogonal} A_r A_s  =  (25/3) I
//   sum_a B_{h_a}                                   =  (4/3)  I
//
// (the pair sum runs over ordered compatible pairs with weight 1/4;
// commuting pairs are accumulated once with weight 1/2). Any global sign
// or permutation convention satisfying these identities is equivalent.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ks13/common.hpp"

namespace ks13 {

/// Normalized pure state of the qutrit, basis {|0>, |1>, |2>}.
class Ket {
 public:
  /// Normalizes the amplitudes; throws UnsupportedStateError on a zero
  /// vector. Squared norm is 1 within 1e-12 afterwards.
  explicit Ket(const Vec3& amplitudes);

  static Ket basis(int k);
  /// (|0> + |1> + |2>) / sqrt(3)
  static Ket uniform();
  static Ket random(std::mt19937_64& rng);

  const Vec3& amplitudes() const { return a_; }

 private:
  Vec3 a_;
};

/// Validated qutrit density matrix: Hermitian and unit trace within
/// 1e-12, eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  static DensityMatrix pure(const Ket& k);
  static DensityMatrix from_matrix(const Mat3& m);
  static DensityMatrix maximally_mixed();
  /// Haar-random eigenbasis with uniform (Dirichlet) eigenvalues.
  static DensityMatrix random(std::mt19937_64& rng);

  const Mat3& matrix() const { return m_; }

 private:
  explicit DensityMatrix(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

/// A measurement direction with exact integer components.
struct Ray {
  std::string label;
  std::array<long long, 3> c{0, 0, 0};

  long long dot(const Ray& o) const {
    return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2];
  }
  long long norm2() const { return dot(*this); }
  bool orthogonal(const Ray& o) const { return dot(o) == 0; }
  bool parallel(const Ray& o) const;
  /// Normalized real direction; throws InvalidRayError on the zero vector.
  Eigen::Vector3d unit() const;
};

struct Projector {
  Mat3 matrix;
  Ray source;
};

struct Observable {
  Mat3 matrix;
  Ray source;
};

inline constexpr int kNumRays = 13;

/// Canonical label order z1..z3, y1-..y3+, h0..h3.
const std::array<std::string, kNumRays>& ray_labels();

/// Index of a label in the canonical order, -1 if not one of the 13.
int ray_index(const std::string& label);

/// The 13 directions in canonical order.
std::vector<Ray> yu_oh_rays();

/// Completion directions h0c..h3c. Each one extends {h_a, y3_s} to an
/// orthogonal basis; representable as rays but never part of the graph.
std::vector<Ray> completion_rays();

Projector projector(const Ray& r);
Observable observable(const Ray& r);

/// Orthogonality structure over a ray set. Edges are exactly the pairs
/// with integer dot product zero; triples are the complete mutually
/// orthogonal 3-subsets.
struct CompatibilityGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<int, int>> edges;          // i < j, lexicographic
  std::vector<std::array<int, 3>> triples;         // i < j < k
  std::vector<std::vector<int>> adjacency;

  bool has_edge(int i, int j) const;
  int edge_id(int i, int j) const;                 // -1 if absent
};

CompatibilityGraph compatibility(const std::vector<Ray>& rays);

/// JSON document with labels, integer components, edge and triple lists.
std::string ray_set_json(const std::vector<Ray>& rays,
                         const CompatibilityGraph& g);

/// Witness operator sum_r A_r - (1/2) sum_{edges} A_r A_s over a ray set.
Mat3 witness_operator(const std::vector<Ray>& rays,
                      const CompatibilityGraph& g);
/// Canonical 13-ray witness; equals (25/3) I within 1e-12.
Mat3 witness_operator();

/// Sum of the four h-direction projectors over a ray set.
Mat3 h_projector_sum(const std::vector<Ray>& rays);
/// Canonical form; equals (4/3) I within 1e-12.
Mat3 h_projector_sum();

/// Born-rule expectation Tr(rho op) for a Hermitian op; the imaginary
/// residue (< 1e-10 for valid inputs) is discarded.
double expectation(const DensityMatrix& rho, const Mat3& op);

/// Left-hand side of the full inequality for a state: sum <A_r> minus
/// half the sum of the 24 compatible-pair correlations. Equals 25/3 for
/// every valid state.
double witness_lhs(const DensityMatrix& rho);

/// Left-hand side of the projector inequality: sum_a <B_{h_a}>.
/// Equals 4/3 for every valid state.
double h_sum_lhs(const DensityMatrix& rho);

inline constexpr double kNoncontextualBoundWitness = 8.0;
inline constexpr double kQuantumWitnessValue = 25.0 / 3.0;
inline constexpr double kNoncontextualBoundHSum = 1.0;
inline constexpr double kQuantumHSumValue = 4.0 / 3.0;

}  // namespace ks13
