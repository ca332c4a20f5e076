#ifndef ROTKIT_VERIFY_HPP
#define ROTKIT_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rotkit/cover.hpp"
#include "rotkit/su2.hpp"

namespace rotkit::verify {

/// Deterministic generator with portable streams: mt19937_64 raw output,
/// uniforms as (x >> 11) * 2^-53, Gaussians via the Marsaglia polar
/// transform. Identical seeds reproduce identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal (polar method; second deviate cached).
  double normal();

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Substream seed for check number `stream` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform on S^2: three independent normals, normalized (redrawn when the
/// norm is < 1e-6).
UnitVec3 random_unit_vec(Rng& rng);

/// Haar-uniform on SU(2): four independent normals, normalized to the
/// 3-sphere and read as Pauli-basis coordinates.
Su2Op random_su2(Rng& rng);

struct NamedReport {
  std::string name;
  CheckReport report;
};

struct SuiteResult {
  bool pass = false;
  std::vector<NamedReport> reports;
  double elapsed_s = 0.0;
};

/// Runs the full battery of randomized identity checks (Pauli algebra,
/// eigenvectors, expectations, overlap law, Rodrigues, conjugation, double
/// cover, homomorphism, mirror composition, series exponential, axis-angle
/// roundtrips), each with its own derived substream, each reported as a
/// CheckReport. Failures are data, not exceptions.
SuiteResult run_identity_suite(std::int64_t samples, std::uint64_t seed, double tol);

}  // namespace rotkit::verify

#endif
