#pragma once

// Hypothesis checks for every condition class, with best-parameter extraction.
//
// Margins are per-vector slacks: a vector satisfies the condition when its
// margin is >= -check_tol. Zero vectors satisfy every condition vacuously, so
// they are counted in skipped_zero_vectors and exempt from the verdict. Open
// upper limits (phi2 < pi/2, rho < 1, theta < pi/2) are enforced by shifting
// the margin by one extra check_tol.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "revtri/linalg.hpp"
#include "revtri/params.hpp"

namespace revtri {

inline constexpr double check_tol = 1e-9;
inline constexpr double equiv_tol = 1e-9;

struct HypothesisReport {
  Method method = Method::t21;
  bool feasible = false;
  std::optional<MethodParams> params;  // absent when infeasible
  std::vector<double> margins;
  std::size_t skipped_zero_vectors = 0;
  bool degenerate = false;           // every vector is zero
  bool geometry_infeasible = false;  // parameter geometry admits no non-zero vector at all
  std::optional<std::size_t> failing_index;
  std::optional<std::size_t> failing_axis;
  std::string note;
};

namespace detail {

inline std::vector<double> norms_of(const VectorFamily& family) {
  std::vector<double> out;
  out.reserve(family.size());
  for (const auto& x : family) out.push_back(norm(x));
  return out;
}

/// Fills feasibility, failing index and zero-vector bookkeeping from margins.
inline void finalize(HypothesisReport& rep, const std::vector<double>& norms,
                     const std::vector<std::size_t>* worst_axis = nullptr) {
  rep.feasible = !rep.geometry_infeasible;
  rep.skipped_zero_vectors = 0;
  for (std::size_t k = 0; k < norms.size(); ++k) {
    if (norms[k] == 0.0) {
      ++rep.skipped_zero_vectors;
      continue;
    }
    if (rep.margins[k] < -check_tol) {
      rep.feasible = false;
      if (!rep.failing_index) {
        rep.failing_index = k;
        if (worst_axis) rep.failing_axis = (*worst_axis)[k];
      }
    }
  }
  rep.degenerate = rep.skipped_zero_vectors == norms.size();
  if (!rep.feasible) rep.params.reset();
  if (rep.failing_index && rep.note.empty()) {
    rep.note = "condition violated by vector " + std::to_string(*rep.failing_index);
    if (rep.failing_axis) rep.note += " on axis " + std::to_string(*rep.failing_axis);
  }
}

inline void require_dim(const VectorFamily& family, std::size_t dim) {
  if (family.dim() != dim)
    throw Error(ErrorKind::input, "family dimension " + std::to_string(family.dim()) +
                                      " does not match reference dimension " +
                                      std::to_string(dim));
}

inline void require_scalar(const VectorFamily& family) {
  if (family.dim() != 1)
    throw Error(ErrorKind::input, "complex-plane methods require dimension 1, got " +
                                      std::to_string(family.dim()));
}

/// Minimum over non-zero vectors of value(k) / norm(k), or 0 for an all-zero family.
template <class F>
double min_ratio(const std::vector<double>& norms, F&& value) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < norms.size(); ++k) {
    if (norms[k] > 0.0) best = std::min(best, value(k) / norms[k]);
  }
  return std::isfinite(best) ? std::max(0.0, best) : 0.0;
}

/// Principal argument in (-pi, pi].
inline double principal_arg(Complex z) {
  const double a = std::arg(z);
  return a <= -std::numbers::pi ? std::numbers::pi : a;
}

/// |a - b| reduced modulo 2 pi into [0, pi].
inline double angular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * std::numbers::pi);
  return d > std::numbers::pi ? 2.0 * std::numbers::pi - d : d;
}

inline std::vector<double> scalar_args(const VectorFamily& z) {
  require_scalar(z);
  std::vector<double> args;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k][0] == Complex(0.0, 0.0))
      throw Error(ErrorKind::input, "argument undefined for zero entry at index " +
                                        std::to_string(k));
    args.push_back(principal_arg(z[k][0]));
  }
  return args;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single reference: Diaz-Metcalf and cone conditions

/// 0 <= r ||x_k|| <= Re<x_k, e>
inline HypothesisReport check_dm(const VectorFamily& family, const Reference& e,
                                 const DmParams& p) {
  validate(p);
  detail::require_dim(family, e.dim());
  HypothesisReport rep{.method = Method::dm, .params = p};
  const auto norms = detail::norms_of(family);
  for (std::size_t k = 0; k < family.size(); ++k)
    rep.margins.push_back(inner(family[k], e.vector()).real() - p.r * norms[k]);
  detail::finalize(rep, norms);
  return rep;
}

/// Largest r with 0 <= r ||x_k|| <= Re<x_k, e>; feasible iff every Re<x_k, e> >= 0.
inline HypothesisReport extract_dm_param(const VectorFamily& family, const Reference& e) {
  detail::require_dim(family, e.dim());
  HypothesisReport rep{.method = Method::dm};
  const auto norms = detail::norms_of(family);
  std::vector<double> re;
  for (const auto& x : family) re.push_back(inner(x, e.vector()).real());
  rep.margins = re;
  rep.params = DmParams{detail::min_ratio(norms, [&](std::size_t k) { return re[k]; })};
  detail::finalize(rep, norms);
  return rep;
}

/// margins: min(Re<x_k,e> - r1 ||x_k||, Im<x_k,e> - r2 ||x_k||)
inline HypothesisReport check_cone(const VectorFamily& family, const Reference& e,
                                   const ConeParams& p) {
  validate(p);
  detail::require_dim(family, e.dim());
  HypothesisReport rep{.method = Method::t21, .params = p};
  const auto norms = detail::norms_of(family);
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Complex w = inner(family[k], e.vector());
    rep.margins.push_back(std::min(w.real() - p.r1 * norms[k], w.imag() - p.r2 * norms[k]));
  }
  detail::finalize(rep, norms);
  return rep;
}

/// Componentwise-minimal ratios r1 = min Re<x_k,e>/||x_k||, r2 = min Im<x_k,e>/||x_k||.
/// Margins are min(Re<x_k,e>, Im<x_k,e>), the slack against the sign conditions.
inline HypothesisReport extract_cone_params(const VectorFamily& family, const Reference& e) {
  detail::require_dim(family, e.dim());
  HypothesisReport rep{.method = Method::t21};
  const auto norms = detail::norms_of(family);
  std::vector<Complex> w;
  for (const auto& x : family) w.push_back(inner(x, e.vector()));
  for (const auto& z : w) rep.margins.push_back(std::min(z.real(), z.imag()));
  rep.params = ConeParams{detail::min_ratio(norms, [&](std::size_t k) { return w[k].real(); }),
                          detail::min_ratio(norms, [&](std::size_t k) { return w[k].imag(); })};
  detail::finalize(rep, norms);
  if (rep.degenerate) rep.note = "degenerate family: every vector is zero";
  return rep;
}

// ---------------------------------------------------------------------------
// Disks around e and ie

/// Closed balls of radii rho1, rho2 around points at distance sqrt(2) share a point.
inline bool disk_pair_consistent(const DiskParams& p) {
  return p.rho1 + p.rho2 >= std::numbers::sqrt2 - check_tol;
}

/// ||x_k - e|| <= rho1 and ||x_k - ie|| <= rho2
inline HypothesisReport check_disks(const VectorFamily& family, const Reference& e,
                                    const DiskParams& p) {
  validate(p);
  detail::require_dim(family, e.dim());
  HypothesisReport rep{.method = Method::c22, .params = p};
  const Vector ie = imag_unit * e.vector();
  for (const auto& x : family)
    rep.margins.push_back(
        std::min(p.rho1 - distance(x, e.vector()), p.rho2 - distance(x, ie)));
  if (!disk_pair_consistent(p)) {
    rep.geometry_infeasible = true;
    rep.note = "disks around e and ie cannot intersect: rho1 + rho2 < sqrt(2)";
  }
  detail::finalize(rep, detail::norms_of(family), nullptr);
  return rep;
}

/// Tightest radii rho1 = max ||x_k - e||, rho2 = max ||x_k - ie||; feasible iff both < 1.
inline HypothesisReport extract_disk_radii(const VectorFamily& family, const Reference& e) {
  detail::require_dim(family, e.dim());
  HypothesisReport rep{.method = Method::c22};
  const auto norms = detail::norms_of(family);
  const Vector ie = imag_unit * e.vector();
  double rho1 = 0.0;
  double rho2 = 0.0;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const double d1 = distance(family[k], e.vector());
    const double d2 = distance(family[k], ie);
    rep.margins.push_back(1.0 - 2.0 * check_tol - std::max(d1, d2));
    if (norms[k] > 0.0) {
      rho1 = std::max(rho1, d1);
      rho2 = std::max(rho2, d2);
    }
  }
  detail::finalize(rep, norms);
  if (rep.feasible) {
    // An all-zero family gets the tangent pair, the smallest consistent radii.
    rep.params = rep.degenerate ? DiskParams{std::sqrt(0.5), std::sqrt(0.5)}
                                : DiskParams{rho1, rho2};
  } else {
    rep.note = "a disk radius reaches 1: rho1 = " + std::to_string(rho1) +
               ", rho2 = " + std::to_string(rho2);
  }
  return rep;
}

/// The disks D(1, rho1) and D(i, rho2) of the complex plane intersect iff rho1 + rho2 > sqrt(2).
inline bool disks_intersect(double rho1, double rho2) {
  validate(DiskParams{rho1, rho2});
  return rho1 + rho2 > std::numbers::sqrt2;
}

// ---------------------------------------------------------------------------
// Bands (ball form)

struct Ball {
  double center = 0.0;  // scale along the axis direction
  double radius = 0.0;
};

inline Ball real_band_ball(const BandParams& p) { return {(p.M1 + p.m1) / 2, (p.M1 - p.m1) / 2}; }
inline Ball imag_band_ball(const BandParams& p) { return {(p.M2 + p.m2) / 2, (p.M2 - p.m2) / 2}; }

/// Balls around c1 e and c2 ie (orthogonal directions) intersect.
inline bool band_balls_intersect(const BandParams& p) {
  const Ball a = real_band_ball(p);
  const Ball b = imag_band_ball(p);
  return std::hypot(a.center, b.center) <= a.radius + b.radius + check_tol;
}

/// Ball form: ||x_k - (M1+m1)/2 e|| <= (M1-m1)/2 and ||x_k - (M2+m2)/2 ie|| <= (M2-m2)/2.
inline HypothesisReport check_bands(const VectorFamily& family, const Reference& e,
                                    const BandParams& p) {
  validate(p);
  detail::require_dim(family, e.dim());
  HypothesisReport rep{.method = Method::c23, .params = p};
  const Ball a = real_band_ball(p);
  const Ball b = imag_band_ball(p);
  const Vector ca = Complex(a.center) * e.vector();
  const Vector cb = Complex(0.0, b.center) * e.vector();
  for (const auto& x : family)
    rep.margins.push_back(std::min(a.radius - distance(x, ca), b.radius - distance(x, cb)));
  if (!band_balls_intersect(p)) {
    rep.geometry_infeasible = true;
    rep.note = "band balls cannot intersect: center distance " +
               std::to_string(std::hypot(a.center, b.center)) + " exceeds radius sum " +
               std::to_string(a.radius + b.radius);
  }
  detail::finalize(rep, detail::norms_of(family));
  return rep;
}

struct EquivalenceResult {
  bool halfspace = false;          // Re<Z - x, x - z> >= -equiv_tol
  bool ball = false;               // ||Z - z||/2 - ||x - (Z + z)/2|| >= -equiv_tol
  double halfspace_scalar = 0.0;   // Re<Z - x, x - z>
  double ball_scalar = 0.0;        // ||Z - z||/2 - ||x - (Z + z)/2||
};

/// Evaluates both sides of Re<Z - x, x - z> >= 0  <=>  ||x - (Z + z)/2|| <= ||Z - z||/2.
inline EquivalenceResult ball_halfspace_equiv(const Vector& x, const Vector& z, const Vector& Z) {
  x.require_same_dim(z);
  x.require_same_dim(Z);
  EquivalenceResult out;
  out.halfspace_scalar = inner(Z - x, x - z).real();
  const Vector mid = Complex(0.5) * (Z + z);
  out.ball_scalar = 0.5 * distance(Z, z) - distance(x, mid);
  out.halfspace = out.halfspace_scalar >= -equiv_tol;
  out.ball = out.ball_scalar >= -equiv_tol;
  return out;
}

// ---------------------------------------------------------------------------
// Orthonormal families

namespace detail {

inline void require_axes(const VectorFamily& family, const OrthonormalFamily& axes,
                         std::size_t param_axes) {
  require_dim(family, axes.dim());
  if (param_axes != axes.size())
    throw Error(ErrorKind::parameter, "parameter list has " + std::to_string(param_axes) +
                                          " axes but the orthonormal family has " +
                                          std::to_string(axes.size()));
}

/// margins[j] = min_k slack(j, k); worst[j] = argmin.
template <class Slack>
void axis_margins(HypothesisReport& rep, std::vector<std::size_t>& worst, std::size_t n,
                  std::size_t m, Slack&& slack) {
  rep.margins.assign(n, std::numeric_limits<double>::infinity());
  worst.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const double s = slack(j, k);
      if (s < rep.margins[j]) {
        rep.margins[j] = s;
        worst[j] = k;
      }
    }
  }
}

/// <x_j, e_k> for every pair.
inline std::vector<std::vector<Complex>> coefficients(const VectorFamily& family,
                                                      const OrthonormalFamily& axes) {
  std::vector<std::vector<Complex>> w(family.size());
  for (std::size_t j = 0; j < family.size(); ++j)
    for (const auto& e : axes) w[j].push_back(inner(family[j], e));
  return w;
}

}  // namespace detail

/// 0 <= r_k ||x_j|| <= Re<x_j, e_k>
inline HypothesisReport check_axis_real(const VectorFamily& family, const OrthonormalFamily& axes,
                                        const AxisRealParams& p) {
  validate(p);
  detail::require_axes(family, axes, p.r.size());
  HypothesisReport rep{.method = Method::t31, .params = p};
  const auto norms = detail::norms_of(family);
  const auto w = detail::coefficients(family, axes);
  std::vector<std::size_t> worst;
  detail::axis_margins(rep, worst, family.size(), axes.size(), [&](std::size_t j, std::size_t k) {
    return w[j][k].real() - p.r[k] * norms[j];
  });
  detail::finalize(rep, norms, &worst);
  return rep;
}

inline HypothesisReport extract_axis_real_params(const VectorFamily& family,
                                                 const OrthonormalFamily& axes) {
  detail::require_axes(family, axes, axes.size());
  HypothesisReport rep{.method = Method::t31};
  const auto norms = detail::norms_of(family);
  const auto w = detail::coefficients(family, axes);
  std::vector<std::size_t> worst;
  detail::axis_margins(rep, worst, family.size(), axes.size(),
                       [&](std::size_t j, std::size_t k) { return w[j][k].real(); });
  AxisRealParams p;
  for (std::size_t k = 0; k < axes.size(); ++k)
    p.r.push_back(detail::min_ratio(norms, [&](std::size_t j) { return w[j][k].real(); }));
  rep.params = p;
  detail::finalize(rep, norms, &worst);
  return rep;
}

/// 0 <= r_k ||x_j|| <= Re<x_j, e_k> and 0 <= rho_k ||x_j|| <= Im<x_j, e_k>
inline HypothesisReport check_axis(const VectorFamily& family, const OrthonormalFamily& axes,
                                   const AxisParams& p) {
  validate(p);
  detail::require_axes(family, axes, p.r.size());
  HypothesisReport rep{.method = Method::t32, .params = p};
  const auto norms = detail::norms_of(family);
  const auto w = detail::coefficients(family, axes);
  std::vector<std::size_t> worst;
  detail::axis_margins(rep, worst, family.size(), axes.size(), [&](std::size_t j, std::size_t k) {
    return std::min(w[j][k].real() - p.r[k] * norms[j], w[j][k].imag() - p.rho[k] * norms[j]);
  });
  detail::finalize(rep, norms, &worst);
  return rep;
}

/// Per-axis minimal ratios; feasible iff every axis has nonnegative real and imaginary parts.
inline HypothesisReport extract_axis_params(const VectorFamily& family,
                                            const OrthonormalFamily& axes) {
  detail::require_axes(family, axes, axes.size());
  HypothesisReport rep{.method = Method::t32};
  const auto norms = detail::norms_of(family);
  const auto w = detail::coefficients(family, axes);
  std::vector<std::size_t> worst;
  detail::axis_margins(rep, worst, family.size(), axes.size(), [&](std::size_t j, std::size_t k) {
    return std::min(w[j][k].real(), w[j][k].imag());
  });
  AxisParams p;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    p.r.push_back(detail::min_ratio(norms, [&](std::size_t j) { return w[j][k].real(); }));
    p.rho.push_back(detail::min_ratio(norms, [&](std::size_t j) { return w[j][k].imag(); }));
  }
  rep.params = p;
  detail::finalize(rep, norms, &worst);
  return rep;
}

namespace detail {

/// Centers of the 2m balls are mutually orthogonal (over the reals), so two balls
/// with center scales c_a, c_b intersect iff hypot(c_a, c_b) <= R_a + R_b.
inline std::optional<std::string> pairwise_ball_conflict(const std::vector<Ball>& balls) {
  for (std::size_t a = 0; a < balls.size(); ++a) {
    for (std::size_t b = a + 1; b < balls.size(); ++b) {
      const double dist = std::hypot(balls[a].center, balls[b].center);
      if (dist > balls[a].radius + balls[b].radius + check_tol)
        return "balls " + std::to_string(a) + " and " + std::to_string(b) +
               " cannot intersect: center distance " + std::to_string(dist) +
               " exceeds radius sum " + std::to_string(balls[a].radius + balls[b].radius);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// ||x_j - e_k|| <= rho_k and ||x_j - i e_k|| <= eta_k
inline HypothesisReport check_axis_disks(const VectorFamily& family,
                                         const OrthonormalFamily& axes,
                                         const AxisDiskParams& p) {
  validate(p);
  detail::require_axes(family, axes, p.rho.size());
  HypothesisReport rep{.method = Method::c32, .params = p};
  std::vector<std::size_t> worst;
  detail::axis_margins(rep, worst, family.size(), axes.size(), [&](std::size_t j, std::size_t k) {
    return std::min(p.rho[k] - distance(family[j], axes[k]),
                    p.eta[k] - distance(family[j], imag_unit * axes[k]));
  });
  std::vector<Ball> balls;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    balls.push_back({1.0, p.rho[k]});
    balls.push_back({1.0, p.eta[k]});
  }
  if (auto conflict = detail::pairwise_ball_conflict(balls)) {
    rep.geometry_infeasible = true;
    rep.note = *conflict;
  }
  detail::finalize(rep, detail::norms_of(family), &worst);
  return rep;
}

/// Tightest per-axis radii; feasible iff all lie below 1.
inline HypothesisReport extract_axis_disk_radii(const VectorFamily& family,
                                                const OrthonormalFamily& axes) {
  detail::require_axes(family, axes, axes.size());
  HypothesisReport rep{.method = Method::c32};
  const auto norms = detail::norms_of(family);
  const std::size_t m = axes.size();
  AxisDiskParams p{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
  std::vector<std::size_t> worst;
  detail::axis_margins(rep, worst, family.size(), m, [&](std::size_t j, std::size_t k) {
    const double d1 = distance(family[j], axes[k]);
    const double d2 = distance(family[j], imag_unit * axes[k]);
    if (norms[j] > 0.0) {
      p.rho[k] = std::max(p.rho[k], d1);
      p.eta[k] = std::max(p.eta[k], d2);
    }
    return 1.0 - 2.0 * check_tol - std::max(d1, d2);
  });
  detail::finalize(rep, norms, &worst);
  if (rep.feasible && rep.degenerate) {
    // Smallest common radius whose 2m balls share a point (their centroid).
    const double r = std::sqrt(1.0 - 1.0 / (2.0 * static_cast<double>(m)));
    p = AxisDiskParams{std::vector<double>(m, r), std::vector<double>(m, r)};
  }
  if (rep.feasible) rep.params = p;
  return rep;
}

/// Per-axis band conditions in ball form, with a pairwise intersection precheck.
inline HypothesisReport check_axis_bands(const VectorFamily& family,
                                         const OrthonormalFamily& axes,
                                         const AxisBandParams& p) {
  validate(p);
  detail::require_axes(family, axes, p.bands.size());
  HypothesisReport rep{.method = Method::c33, .params = p};
  std::vector<Ball> balls;
  std::vector<Vector> real_centers;
  std::vector<Vector> imag_centers;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const Ball a = real_band_ball(p.bands[k]);
    const Ball b = imag_band_ball(p.bands[k]);
    balls.push_back(a);
    balls.push_back(b);
    real_centers.push_back(Complex(a.center) * axes[k]);
    imag_centers.push_back(Complex(0.0, b.center) * axes[k]);
  }
  std::vector<std::size_t> worst;
  detail::axis_margins(rep, worst, family.size(), axes.size(), [&](std::size_t j, std::size_t k) {
    return std::min(balls[2 * k].radius - distance(family[j], real_centers[k]),
                    balls[2 * k + 1].radius - distance(family[j], imag_centers[k]));
  });
  if (auto conflict = detail::pairwise_ball_conflict(balls)) {
    rep.geometry_infeasible = true;
    rep.note = *conflict + " (ball index 2k is axis k real band, 2k+1 its imaginary band)";
  }
  detail::finalize(rep, detail::norms_of(family), &worst);
  return rep;
}

// ---------------------------------------------------------------------------
// Complex plane (d = 1)

/// phi1 = min arg z_k, phi2 = max arg z_k; feasible iff every argument lies in [0, pi/2).
inline HypothesisReport extract_sector(const VectorFamily& z) {
  const auto args = detail::scalar_args(z);
  HypothesisReport rep{.method = Method::p41};
  for (double a : args)
    rep.margins.push_back(std::min(a, std::numbers::pi / 2 - 2.0 * check_tol - a));
  const auto [lo, hi] = std::minmax_element(args.begin(), args.end());
  const double phi1 = std::max(0.0, *lo);
  rep.params = SectorParams{phi1, std::max(phi1, *hi)};
  detail::finalize(rep, detail::norms_of(z));
  if (!rep.feasible) rep.note = "argument outside [0, pi/2)";
  return rep;
}

/// phi1 <= arg z_k <= phi2
inline HypothesisReport check_sector(const VectorFamily& z, const SectorParams& p) {
  validate(p);
  const auto args = detail::scalar_args(z);
  HypothesisReport rep{.method = Method::p41, .params = p};
  for (double a : args) rep.margins.push_back(std::min(a - p.phi1, p.phi2 - a));
  detail::finalize(rep, detail::norms_of(z));
  return rep;
}

/// Wrapped angular distance |arg z_k - a| <= theta.
inline HypothesisReport check_petrovich(const VectorFamily& z, const PetrovichParams& p) {
  validate(p);
  const auto args = detail::scalar_args(z);
  HypothesisReport rep{.method = Method::petrovich, .params = p};
  for (double a : args) rep.margins.push_back(p.theta - detail::angular_distance(a, p.a));
  detail::finalize(rep, detail::norms_of(z));
  return rep;
}

/// Smallest arc containing every argument: a is its midpoint, theta its half-width.
/// Feasible iff theta < pi/2.
inline HypothesisReport extract_petrovich(const VectorFamily& z) {
  auto args = detail::scalar_args(z);
  HypothesisReport rep{.method = Method::petrovich};
  std::vector<double> sorted = args;
  std::sort(sorted.begin(), sorted.end());
  // The complement of the largest circular gap is the minimal arc.
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::size_t gap_end = 0;  // arc starts at sorted[gap_end]
  double gap = sorted.front() + two_pi - sorted.back();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] > gap) {
      gap = sorted[i] - sorted[i - 1];
      gap_end = i;
    }
  }
  const double theta = std::max(0.0, (two_pi - gap) / 2);
  double a = sorted[gap_end] + theta;
  if (a > std::numbers::pi) a -= two_pi;
  for (double arg : args)
    rep.margins.push_back(std::numbers::pi / 2 - 2.0 * check_tol -
                          detail::angular_distance(arg, a));
  rep.params = PetrovichParams{a, theta};
  detail::finalize(rep, detail::norms_of(z));
  if (!rep.feasible) rep.note = "arguments span an arc of half-width >= pi/2";
  return rep;
}

/// |z_k - u| <= rho1 and |z_k - iu| <= rho2 for a unit complex u.
inline HypothesisReport check_scalar_disks(const VectorFamily& z, const Reference& u,
                                           const DiskParams& p) {
  detail::require_scalar(z);
  auto rep = check_disks(z, u, p);
  rep.method = Method::p42;
  return rep;
}

inline HypothesisReport extract_scalar_disk_radii(const VectorFamily& z, const Reference& u) {
  detail::require_scalar(z);
  auto rep = extract_disk_radii(z, u);
  rep.method = Method::p42;
  return rep;
}

}  // namespace revtri
