#include "ks13/qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "json.hpp"

namespace ks13 {

double trace_distance(const Mat3& a, const Mat3& b) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(a - b);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Ket::Ket(const Vec3& amplitudes) : a_(amplitudes) {
  const double n = a_.norm();
  if (n < 1e-14) throw UnsupportedStateError("ket amplitudes are all zero");
  a_ /= n;
}

Ket Ket::basis(int k) {
  Vec3 v = Vec3::Zero();
  v(k) = 1.0;
  return Ket(v);
}

Ket Ket::uniform() { return Ket(Vec3(1.0, 1.0, 1.0)); }

Ket Ket::random(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec3 v;
  for (int i = 0; i < 3; ++i) v(i) = Complex(g(rng), g(rng));
  return Ket(v);
}

DensityMatrix DensityMatrix::pure(const Ket& k) {
  return DensityMatrix(k.amplitudes() * k.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::from_matrix(const Mat3& m) {
  if (max_abs(m - m.adjoint()) > 1e-12)
    throw UnsupportedStateError("density matrix is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > 1e-12 ||
      std::abs(m.trace().imag()) > 1e-12)
    throw UnsupportedStateError("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat3> es(m);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw UnsupportedStateError("density matrix has a negative eigenvalue");
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Mat3::Identity() / 3.0);
}

DensityMatrix DensityMatrix::random(std::mt19937_64& rng) {
  // Eigenvalues uniform on the simplex, eigenbasis Haar via phase-fixed QR.
  std::exponential_distribution<double> ex(1.0);
  Eigen::Vector3d lam(ex(rng), ex(rng), ex(rng));
  lam /= lam.sum();

  std::normal_distribution<double> g(0.0, 1.0);
  Mat3 ginibre;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ginibre(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Mat3> qr(ginibre);
  Mat3 q = qr.householderQ();
  Mat3 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 3; ++j) {
    Complex d = r(j, j);
    q.col(j) *= (std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0));
  }
  Mat3 rho = Mat3::Zero();
  for (int j = 0; j < 3; ++j)
    rho += lam(j) * (q.col(j) * q.col(j).adjoint());
  return DensityMatrix((rho + rho.adjoint()) / 2.0);
}

bool Ray::parallel(const Ray& o) const {
  const long long cx = c[1] * o.c[2] - c[2] * o.c[1];
  const long long cy = c[2] * o.c[0] - c[0] * o.c[2];
  const long long cz = c[0] * o.c[1] - c[1] * o.c[0];
  return cx == 0 && cy == 0 && cz == 0;
}

Eigen::Vector3d Ray::unit() const {
  const long long n2 = norm2();
  if (n2 == 0)
    throw InvalidRayError("ray '" + label + "' has zero direction");
  Eigen::Vector3d v(static_cast<double>(c[0]), static_cast<double>(c[1]),
                    static_cast<double>(c[2]));
  return v / std::sqrt(static_cast<double>(n2));
}

const std::array<std::string, kNumRays>& ray_labels() {
  static const std::array<std::string, kNumRays> labels = {
      "z1", "z2", "z3", "y1-", "y1+", "y2-", "y2+",
      "y3-", "y3+", "h0", "h1", "h2", "h3"};
  return labels;
}

int ray_index(const std::string& label) {
  const auto& labels = ray_labels();
  for (int i = 0; i < kNumRays; ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::vector<Ray> yu_oh_rays() {
  return {
      {"z1", {1, 0, 0}},  {"z2", {0, 1, 0}},   {"z3", {0, 0, 1}},
      {"y1-", {0, 1, -1}}, {"y1+", {0, 1, 1}},
      {"y2-", {-1, 0, 1}}, {"y2+", {1, 0, 1}},
      {"y3-", {1, -1, 0}}, {"y3+", {1, 1, 0}},
      {"h0", {1, 1, 1}},  {"h1", {-1, 1, 1}},
      {"h2", {1, -1, 1}}, {"h3", {1, 1, -1}},
  };
}

std::vector<Ray> completion_rays() {
  return {
      {"h0c", {1, 1, -2}},
      {"h1c", {-1, 1, -2}},
      {"h2c", {1, -1, -2}},
      {"h3c", {1, 1, 2}},
  };
}

Projector projector(const Ray& r) {
  const Eigen::Vector3d u = r.unit();
  Mat3 m = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = u(i) * u(j);
  return {m, r};
}

Observable observable(const Ray& r) {
  return {Mat3::Identity() - 2.0 * projector(r).matrix, r};
}

bool CompatibilityGraph::has_edge(int i, int j) const {
  return edge_id(i, j) >= 0;
}

int CompatibilityGraph::edge_id(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].first == i && edges[e].second == j)
      return static_cast<int>(e);
  return -1;
}

CompatibilityGraph compatibility(const std::vector<Ray>& rays) {
  CompatibilityGraph g;
  const int n = static_cast<int>(rays.size());
  g.adjacency.assign(n, {});
  for (const auto& r : rays) g.nodes.push_back(r.label);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rays[i].orthogonal(rays[j])) {
        g.edges.emplace_back(i, j);
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (rays[i].orthogonal(rays[j]) && rays[i].orthogonal(rays[k]) &&
            rays[j].orthogonal(rays[k]))
          g.triples.push_back({i, j, k});
  return g;
}

std::string ray_set_json(const std::vector<Ray>& rays,
                         const CompatibilityGraph& g) {
  nlohmann::json doc;
  for (const auto& r : rays)
    doc["rays"].push_back({{"label", r.label},
                           {"components", {r.c[0], r.c[1], r.c[2]}}});
  doc["edges"] = nlohmann::json::array();
  for (const auto& [i, j] : g.edges)
    doc["edges"].push_back({g.nodes[i], g.nodes[j]});
  doc["triples"] = nlohmann::json::array();
  for (const auto& t : g.triples)
    doc["triples"].push_back({g.nodes[t[0]], g.nodes[t[1]], g.nodes[t[2]]});
  return doc.dump(2);
}

Mat3 witness_operator(const std::vector<Ray>& rays,
                      const CompatibilityGraph& g) {
  std::vector<Mat3> obs;
  obs.reserve(rays.size());
  for (const auto& r : rays) obs.push_back(observable(r).matrix);
  Mat3 s = Mat3::Zero();
  for (const auto& m : obs) s += m;
  // Compatible observables commute, so each unordered pair is accumulated
  // once; the factor 1/2 accounts for both orderings in the pair sum.
  for (const auto& [i, j] : g.edges) s -= 0.5 * (obs[i] * obs[j]);
  return s;
}

Mat3 witness_operator() {
  static const Mat3 s = [] {
    const auto rays = yu_oh_rays();
    return witness_operator(rays, compatibility(rays));
  }();
  return s;
}

Mat3 h_projector_sum(const std::vector<Ray>& rays) {
  Mat3 sum = Mat3::Zero();
  for (const auto& r : rays)
    if (!r.label.empty() && r.label[0] == 'h') sum += projector(r).matrix;
  return sum;
}

Mat3 h_projector_sum() {
  static const Mat3 s = h_projector_sum(yu_oh_rays());
  return s;
}

double expectation(const DensityMatrix& rho, const Mat3& op) {
  return (rho.matrix() * op).trace().real();
}

namespace {

struct CachedOperators {
  std::vector<Mat3> observables;
  std::vector<Mat3> pair_products;   // one per edge, canonical order
  std::vector<Mat3> h_projectors;
};

const CachedOperators& cached_operators() {
  static const CachedOperators ops = [] {
    CachedOperators c;
    const auto rays = yu_oh_rays();
    const auto g = compatibility(rays);
    for (const auto& r : rays) c.observables.push_back(observable(r).matrix);
    for (const auto& [i, j] : g.edges)
      c.pair_products.push_back(c.observables[i] * c.observables[j]);
    for (const auto& r : rays)
      if (r.label[0] == 'h') c.h_projectors.push_back(projector(r).matrix);
    return c;
  }();
  return ops;
}

}  // namespace

double witness_lhs(const DensityMatrix& rho) {
  const auto& ops = cached_operators();
  double v = 0.0;
  for (const auto& a : ops.observables) v += expectation(rho, a);
  for (const auto& p : ops.pair_products) v -= 0.5 * expectation(rho, p);
  return v;
}

double h_sum_lhs(const DensityMatrix& rho) {
  const auto& ops = cached_operators();
  double v = 0.0;
  for (const auto& b : ops.h_projectors) v += expectation(rho, b);
  return v;
}

}  // namespace ks13
