#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

#include "revtri/linalg.hpp"

namespace revtri {

/// mt19937_64 with hand-rolled conversions. The standard distributions are
/// implementation-defined, so they would break cross-platform reproducibility.
class Rng {
 public:
  static constexpr std::string_view algorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// exp(uniform(log lo, log hi))
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Box-Muller; one variate per call.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Uniform integer in [lo, hi].
  std::size_t integer(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Entries with independent standard normal real and imaginary parts.
inline Vector random_vector(std::size_t dim, Rng& rng) {
  std::vector<Complex> v(dim);
  for (auto& z : v) {
    const double re = rng.normal();
    z = Complex(re, rng.normal());
  }
  return Vector(std::move(v));
}

/// Uniformly distributed on the unit sphere of C^dim.
inline Reference random_reference(std::size_t dim, Rng& rng) {
  for (;;) {
    const Vector v = random_vector(dim, rng);
    if (norm(v) > 1e-8) return Reference::normalized(v);
  }
}

inline OrthonormalFamily random_orthonormal(std::size_t dim, std::size_t count, Rng& rng) {
  std::vector<Vector> raw;
  for (std::size_t k = 0; k < count; ++k) raw.push_back(random_vector(dim, rng));
  return orthonormalize(raw);
}

}  // namespace revtri
