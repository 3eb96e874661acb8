#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ks13 {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;
using Mat2 = Eigen::Matrix2d;

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Largest entry magnitude of a 3x3 complex matrix.
inline double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

/// Trace distance (1/2)||a - b||_1 between two Hermitian matrices.
double trace_distance(const Mat3& a, const Mat3& b);

// Execution policy for the kernels that exist in both a serial reference
// form and an OpenMP form. Results are required to be identical.
enum class ExecMode { Serial, Parallel };

struct InvalidRayError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedStateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnrealizableSettingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidSettingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EmptySampleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// SplitMix64 mixing step. Used only for deriving per-run seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-run seed scheme: seed(master, a, b) = splitmix64(master XOR
/// splitmix64(a * 2^32 + b + 1)). Runs are reproducible under any
/// reordering or parallel schedule because each (a, b) slot owns its
/// own stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return splitmix64(master ^ splitmix64((a << 32) + b + 1));
}

}  // namespace ks13
