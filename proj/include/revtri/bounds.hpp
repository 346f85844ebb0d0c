#pragma once

// Certified lower bounds factor * sum ||x_k|| <= ||sum x_k||.
//
// A certificate is only produced after the matching hypothesis check passes in
// the same call; otherwise the result carries the failing report alone.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "revtri/hypotheses.hpp"
#include "revtri/linalg.hpp"
#include "revtri/params.hpp"

namespace revtri {

/// Relative tolerance for the equality-case residual.
inline constexpr double eq_tol = 1e-8;

struct Certificate {
  Method method = Method::t21;
  MethodParams params;
  double factor = 0.0;
  double sum_of_norms = 0.0;
  double bound = 0.0;
  double actual = 0.0;
  double tightness = 1.0;  // bound / actual, 1 for 0/0
  bool equality = false;
  bool feasible = true;
  std::size_t skipped_zero_vectors = 0;
};

struct BoundResult {
  HypothesisReport report;
  std::optional<Certificate> certificate;

  bool certified() const noexcept { return certificate.has_value(); }
};

// ---------------------------------------------------------------------------
// Factors

inline double dm_factor(const DmParams& p) { return p.r; }

inline double cone_factor(const ConeParams& p) { return std::sqrt(p.r1 * p.r1 + p.r2 * p.r2); }

inline double disk_factor(const DiskParams& p) {
  return std::sqrt(2.0 - p.rho1 * p.rho1 - p.rho2 * p.rho2);
}

namespace detail {

inline double band_term(double lo, double hi) { return lo * hi / ((hi + lo) * (hi + lo)); }

/// 2 sqrt(lo hi) / (hi + lo), the cone ratio implied by a band.
inline double band_ratio(double lo, double hi) { return 2.0 * std::sqrt(lo * hi) / (hi + lo); }

}  // namespace detail

inline double band_factor(const BandParams& p) {
  return 2.0 * std::sqrt(detail::band_term(p.m1, p.M1) + detail::band_term(p.m2, p.M2));
}

inline double axis_real_factor(const AxisRealParams& p) {
  double acc = 0.0;
  for (double r : p.r) acc += r * r;
  return std::sqrt(acc);
}

inline double axis_factor(const AxisParams& p) {
  double acc = 0.0;
  for (std::size_t k = 0; k < p.r.size(); ++k) acc += p.r[k] * p.r[k] + p.rho[k] * p.rho[k];
  return std::sqrt(acc);
}

inline double axis_disk_factor(const AxisDiskParams& p) {
  double acc = 0.0;
  for (std::size_t k = 0; k < p.rho.size(); ++k)
    acc += 2.0 - p.rho[k] * p.rho[k] - p.eta[k] * p.eta[k];
  return std::sqrt(acc);
}

inline double axis_band_factor(const AxisBandParams& p) {
  double acc = 0.0;
  for (const auto& b : p.bands)
    acc += detail::band_term(b.m1, b.M1) + detail::band_term(b.m2, b.M2);
  return 2.0 * std::sqrt(acc);
}

inline double sector_factor(const SectorParams& p) {
  const double s = std::sin(p.phi1);
  const double c = std::cos(p.phi2);
  return std::sqrt(s * s + c * c);
}

inline double petrovich_factor(const PetrovichParams& p) { return std::cos(p.theta); }

// ---------------------------------------------------------------------------
// Equality cases

/// True when sum x_k = (sum ||x_k||) * direction up to eq_tol relative to sum ||x_k||.
inline bool detect_equality(const VectorFamily& family, const Vector& direction) {
  const double total = sum_of_norms(family);
  const Vector residual = family_sum(family) - Complex(total) * direction;
  return norm(residual) <= eq_tol * total;
}

namespace detail {

inline double tightness(double bound, double actual) {
  if (actual == 0.0) return bound == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return bound / actual;
}

/// Packages a certificate if the report is feasible. `direction` is the vector w of the
/// equality condition sum x_k = (sum ||x_k||) w; when absent, equality is judged from
/// bound and actual alone.
inline BoundResult certify(const VectorFamily& family, HypothesisReport report, double factor,
                           const std::optional<Vector>& direction) {
  BoundResult out{std::move(report), std::nullopt};
  if (!out.report.feasible) return out;
  Certificate c;
  c.method = out.report.method;
  c.params = *out.report.params;
  c.factor = factor;
  c.sum_of_norms = sum_of_norms(family);
  c.bound = factor * c.sum_of_norms;
  c.actual = norm(family_sum(family));
  c.tightness = tightness(c.bound, c.actual);
  const bool close = std::abs(c.bound - c.actual) <= eq_tol * std::max(1.0, c.actual);
  c.equality = close && (!direction || detect_equality(family, *direction));
  c.skipped_zero_vectors = out.report.skipped_zero_vectors;
  out.certificate = c;
  return out;
}

template <class Coef>
Vector axis_direction(const OrthonormalFamily& axes, Coef&& coefficient) {
  Vector w = Vector::zeros(axes.dim());
  for (std::size_t k = 0; k < axes.size(); ++k) w += coefficient(k) * axes[k];
  return w;
}

inline Complex disk_coefficient(double rho1, double rho2) {
  return {std::sqrt(1.0 - rho1 * rho1), std::sqrt(1.0 - rho2 * rho2)};
}

inline Complex band_coefficient(const BandParams& b) {
  return {band_ratio(b.m1, b.M1), band_ratio(b.m2, b.M2)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bounds against a single unit reference

inline BoundResult diaz_metcalf(const VectorFamily& family, const Reference& e,
                                const DmParams& p) {
  return detail::certify(family, check_dm(family, e, p), dm_factor(p),
                         Complex(p.r) * e.vector());
}

inline BoundResult diaz_metcalf(const VectorFamily& family, const Reference& e, double r) {
  return diaz_metcalf(family, e, DmParams{r});
}

inline BoundResult cone_bound(const VectorFamily& family, const Reference& e,
                               const ConeParams& p) {
  return detail::certify(family, check_cone(family, e, p), cone_factor(p),
                         Complex(p.r1, p.r2) * e.vector());
}

inline BoundResult disk_bound(const VectorFamily& family, const Reference& e,
                                 const DiskParams& p) {
  return detail::certify(family, check_disks(family, e, p), disk_factor(p),
                         detail::disk_coefficient(p.rho1, p.rho2) * e.vector());
}

inline BoundResult band_bound(const VectorFamily& family, const Reference& e,
                                 const BandParams& p) {
  return detail::certify(family, check_bands(family, e, p), band_factor(p),
                         detail::band_coefficient(p) * e.vector());
}

// ---------------------------------------------------------------------------
// Bounds against an orthonormal family

inline BoundResult axis_real_bound(const VectorFamily& family, const OrthonormalFamily& axes,
                               const AxisRealParams& p) {
  auto report = check_axis_real(family, axes, p);
  return detail::certify(family, std::move(report), axis_real_factor(p),
                         detail::axis_direction(axes, [&](std::size_t k) { return Complex(p.r[k]); }));
}

inline BoundResult axis_bound(const VectorFamily& family, const OrthonormalFamily& axes,
                               const AxisParams& p) {
  auto report = check_axis(family, axes, p);
  const double factor = axis_factor(p);
  if (report.feasible && factor > 1.0 + check_tol) {
    // Unreachable for a genuinely feasible family (Bessel); only tolerance slack gets here.
    report.feasible = false;
    report.params.reset();
    report.note = "factor exceeds 1: parameters admitted only within tolerance";
  }
  return detail::certify(family, std::move(report), factor,
                         detail::axis_direction(
                             axes, [&](std::size_t k) { return Complex(p.r[k], p.rho[k]); }));
}

inline BoundResult axis_disk_bound(const VectorFamily& family, const OrthonormalFamily& axes,
                                 const AxisDiskParams& p) {
  auto report = check_axis_disks(family, axes, p);
  return detail::certify(family, std::move(report), axis_disk_factor(p),
                         detail::axis_direction(axes, [&](std::size_t k) {
                           return detail::disk_coefficient(p.rho[k], p.eta[k]);
                         }));
}

inline BoundResult axis_band_bound(const VectorFamily& family, const OrthonormalFamily& axes,
                                 const AxisBandParams& p) {
  auto report = check_axis_bands(family, axes, p);
  return detail::certify(family, std::move(report), axis_band_factor(p),
                         detail::axis_direction(axes, [&](std::size_t k) {
                           return detail::band_coefficient(p.bands[k]);
                         }));
}

// ---------------------------------------------------------------------------
// Complex plane

inline BoundResult sector_bound(const VectorFamily& z, const SectorParams& p) {
  auto report = check_sector(z, p);
  return detail::certify(z, std::move(report), sector_factor(p),
                         Vector{Complex(std::cos(p.phi2), std::sin(p.phi1))});
}

inline BoundResult scalar_disk_bound(const VectorFamily& z, const Reference& u,
                                   const DiskParams& p) {
  auto report = check_scalar_disks(z, u, p);
  return detail::certify(z, std::move(report), disk_factor(p),
                         detail::disk_coefficient(p.rho1, p.rho2) * u.vector());
}

/// No equality condition is attached to the sector bound; equality is read off
/// bound == actual directly.
inline BoundResult petrovich(const VectorFamily& z, const PetrovichParams& p) {
  return detail::certify(z, check_petrovich(z, p), petrovich_factor(p), std::nullopt);
}

}  // namespace revtri
