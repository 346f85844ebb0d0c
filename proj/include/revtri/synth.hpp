#pragma once

// Families that satisfy a hypothesis class by construction: exact equality
// families and rejection-sampled random feasible families.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "revtri/bounds.hpp"
#include "revtri/compare.hpp"
#include "revtri/hypotheses.hpp"
#include "revtri/random.hpp"

namespace revtri {

inline constexpr std::size_t max_attempts_per_vector = 100000;

struct SynthSpec {
  Method method = Method::t21;
  std::size_t dim = 1;
  std::size_t count = 1;
  MethodParams params;
  std::uint64_t seed = 0;
  // Drawn from the seed when absent.
  std::optional<Reference> reference;
  std::optional<OrthonormalFamily> axes;
};

struct SynthResult {
  VectorFamily family;
  MethodContext context;
};

// ---------------------------------------------------------------------------
// Equality families

inline std::vector<double> random_weights(std::size_t count, Rng& rng) {
  std::vector<double> t(count);
  for (auto& w : t) w = rng.uniform(0.5, 2.0);
  return t;
}

namespace detail {

inline void require_weights(const std::vector<double>& weights) {
  if (weights.empty()) throw Error(ErrorKind::parameter, "weights must be nonempty");
  for (double t : weights)
    if (!(t > 0.0) || !std::isfinite(t))
      throw Error(ErrorKind::parameter, "weights must be positive");
}

inline void require_normalized(double sum_sq) {
  if (std::abs(sum_sq - 1.0) > 1e-12)
    throw Error(ErrorKind::parameter,
                "equality needs unit coefficient norm, got squared norm " + std::to_string(sum_sq));
}

}  // namespace detail

/// x_k = t_k (r1 + i r2) e with r1^2 + r2^2 = 1.
inline VectorFamily synth_equality_t21(const Reference& e, const ConeParams& p,
                                       const std::vector<double>& weights) {
  validate(p);
  detail::require_normalized(p.r1 * p.r1 + p.r2 * p.r2);
  detail::require_weights(weights);
  const Vector direction = Complex(p.r1, p.r2) * e.vector();
  std::vector<Vector> xs;
  for (double t : weights) xs.push_back(Complex(t) * direction);
  return VectorFamily(std::move(xs));
}

/// x_j = t_j sum_k (r_k + i rho_k) e_k with sum_k (r_k^2 + rho_k^2) = 1.
inline VectorFamily synth_equality_t32(const OrthonormalFamily& axes, const AxisParams& p,
                                       const std::vector<double>& weights) {
  validate(p);
  if (p.r.size() != axes.size())
    throw Error(ErrorKind::parameter, "axis parameter count does not match the family");
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < p.r.size(); ++k) sum_sq += p.r[k] * p.r[k] + p.rho[k] * p.rho[k];
  detail::require_normalized(sum_sq);
  detail::require_weights(weights);
  const Vector direction =
      detail::axis_direction(axes, [&](std::size_t k) { return Complex(p.r[k], p.rho[k]); });
  std::vector<Vector> xs;
  for (double t : weights) xs.push_back(Complex(t) * direction);
  return VectorFamily(std::move(xs));
}

// ---------------------------------------------------------------------------
// Intersection of balls with mutually orthogonal centers

/// Ball of radius `radius` around scale * direction.
struct OrientedBall {
  Vector direction;  // unit; directions of distinct balls are real-orthogonal
  double scale = 0.0;
  double radius = 0.0;
};

struct BallCenter {
  Vector point;
  double slack = 0.0;  // every ball contains the slack-ball around point
};

namespace detail {

/// For x = sum_a t_a u_a with ||x||^2 = S, membership in ball a reads
/// t_a >= L_a(S) = (S + c_a^2 - R_a^2) / (2 c_a). Points exist for a given S iff
/// sum_a max(L_a(S), 0)^2 <= S; the left side minus S is convex in S.
inline std::optional<double> feasible_norm_sq(const std::vector<OrientedBall>& balls,
                                              double shrink) {
  double s_max = std::numeric_limits<double>::infinity();
  for (const auto& b : balls) {
    if (b.radius - shrink < 0.0) return std::nullopt;
    s_max = std::min(s_max, (b.scale + b.radius - shrink) * (b.scale + b.radius - shrink));
  }
  auto excess = [&](double s) {
    double acc = -s;
    for (const auto& b : balls) {
      const double r = b.radius - shrink;
      const double lower = (s + b.scale * b.scale - r * r) / (2.0 * b.scale);
      if (lower > 0.0) acc += lower * lower;
    }
    return acc;
  };
  double lo = 0.0;
  double hi = s_max;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3;
    const double m2 = hi - (hi - lo) / 3;
    if (excess(m1) <= excess(m2))
      hi = m2;
    else
      lo = m1;
  }
  const double s = 0.5 * (lo + hi);
  if (excess(s) <= 1e-14 * std::max(1.0, s_max)) return s;
  return std::nullopt;
}

}  // namespace detail

/// Approximate Chebyshev center of the intersection, or nullopt when it is empty.
inline std::optional<BallCenter> ball_intersection_center(const std::vector<OrientedBall>& balls) {
  if (!detail::feasible_norm_sq(balls, 0.0)) return std::nullopt;
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& b : balls) hi = std::min(hi, b.radius);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (detail::feasible_norm_sq(balls, mid))
      lo = mid;
    else
      hi = mid;
  }
  const double slack = 0.9 * lo;
  const double s = *detail::feasible_norm_sq(balls, slack);
  std::vector<double> t;
  double t_sq = 0.0;
  for (const auto& b : balls) {
    const double r = b.radius - slack;
    t.push_back(std::max(0.0, (s + b.scale * b.scale - r * r) / (2.0 * b.scale)));
    t_sq += t.back() * t.back();
  }
  // Raising coordinates keeps every t_a >= L_a(S); restore ||t||^2 = S.
  if (t_sq > 0.0) {
    const double grow = std::sqrt(s / t_sq);
    for (auto& v : t) v *= std::max(1.0, grow);
  } else {
    t.front() = std::sqrt(s);
  }
  Vector point = Vector::zeros(balls.front().direction.dim());
  for (std::size_t a = 0; a < balls.size(); ++a) point += Complex(t[a]) * balls[a].direction;
  return BallCenter{std::move(point), slack};
}

// ---------------------------------------------------------------------------
// Rejection sampling

namespace detail {

struct Region {
  Vector center;
  double slack = 0.0;
  bool scale_invariant = false;
};

inline std::vector<OrientedBall> balls_for(Method m, const MethodContext& ctx,
                                           const MethodParams& p) {
  std::vector<OrientedBall> balls;
  auto add_pair = [&](const Vector& e, double c1, double r1, double c2, double r2) {
    balls.push_back({Complex(1.0) * e, c1, r1});
    balls.push_back({imag_unit * e, c2, r2});
  };
  switch (m) {
    case Method::c22:
    case Method::p42: {
      const auto& q = std::get<DiskParams>(p);
      add_pair(ctx.reference->vector(), 1.0, q.rho1, 1.0, q.rho2);
      break;
    }
    case Method::c23: {
      const auto& q = std::get<BandParams>(p);
      const Ball a = real_band_ball(q);
      const Ball b = imag_band_ball(q);
      add_pair(ctx.reference->vector(), a.center, a.radius, b.center, b.radius);
      break;
    }
    case Method::c32: {
      const auto& q = std::get<AxisDiskParams>(p);
      for (std::size_t k = 0; k < q.rho.size(); ++k)
        add_pair((*ctx.axes)[k], 1.0, q.rho[k], 1.0, q.eta[k]);
      break;
    }
    case Method::c33: {
      const auto& q = std::get<AxisBandParams>(p);
      for (std::size_t k = 0; k < q.bands.size(); ++k) {
        const Ball a = real_band_ball(q.bands[k]);
        const Ball b = imag_band_ball(q.bands[k]);
        add_pair((*ctx.axes)[k], a.center, a.radius, b.center, b.radius);
      }
      break;
    }
    default: break;
  }
  return balls;
}

/// Solves sum_k (base_k + s)^2 = 1 for s >= 0; nullopt when sum base_k^2 > 1.
inline std::optional<double> uniform_lift(const std::vector<double>& base) {
  const double m = static_cast<double>(base.size());
  double lin = 0.0;
  double sq = 0.0;
  for (double b : base) {
    lin += b;
    sq += b * b;
  }
  if (sq > 1.0) return std::nullopt;
  const double disc = lin * lin - m * (sq - 1.0);
  return (-lin + std::sqrt(std::max(0.0, disc))) / m;
}

inline Region region_for(Method m, const MethodContext& ctx, const MethodParams& p) {
  auto fail = [&](const std::string& why) -> Region {
    throw Error(ErrorKind::generation, "cannot sample " + std::string(method_name(m)) + ": " +
                                           why + "; loosen the parameters");
  };
  switch (m) {
    case Method::dm: {
      const double r = std::get<DmParams>(p).r;
      if (r > 1.0) fail("r > 1 admits only the zero vector");
      return {ctx.reference->vector(), 1.0 - r, true};
    }
    case Method::t21: {
      const auto& q = std::get<ConeParams>(p);
      if (q.r1 > 1.0 || q.r2 > 1.0 || q.r1 * q.r1 + q.r2 * q.r2 > 1.0)
        fail("r1^2 + r2^2 > 1 admits only the zero vector");
      // Phase window [asin r2, acos r1] on the unit circle; take its midpoint.
      const double psi = 0.5 * (std::asin(q.r2) + std::acos(q.r1));
      const double slack = std::max(0.0, std::min(std::cos(psi) - q.r1, std::sin(psi) - q.r2));
      return {Complex(std::cos(psi), std::sin(psi)) * ctx.reference->vector(), slack, true};
    }
    case Method::t31: {
      const auto& q = std::get<AxisRealParams>(p);
      const auto s = uniform_lift(q.r);
      if (!s) fail("sum r_k^2 > 1 admits only the zero vector");
      return {axis_direction(*ctx.axes, [&](std::size_t k) { return Complex(q.r[k] + *s); }),
              *s, true};
    }
    case Method::t32: {
      const auto& q = std::get<AxisParams>(p);
      std::vector<double> base = q.r;
      base.insert(base.end(), q.rho.begin(), q.rho.end());
      const auto s = uniform_lift(base);
      if (!s) fail("sum (r_k^2 + rho_k^2) > 1 admits only the zero vector");
      return {axis_direction(*ctx.axes,
                             [&](std::size_t k) { return Complex(q.r[k] + *s, q.rho[k] + *s); }),
              *s, true};
    }
    case Method::c22:
    case Method::c23:
    case Method::c32:
    case Method::c33:
    case Method::p42: {
      const auto center = ball_intersection_center(balls_for(m, ctx, p));
      if (!center) fail("jointly infeasible geometry, the balls do not intersect");
      return {center->point, center->slack, false};
    }
    case Method::p41:
    case Method::petrovich: break;
  }
  return {Vector{1.0}, 0.0, false};
}

}  // namespace detail

/// Random family passing the method's hypothesis check with the given parameters.
/// Deterministic for a fixed spec. Reference and axes are drawn from the seed when
/// the spec omits them.
inline SynthResult sample_feasible(const SynthSpec& spec) {
  if (!params_fit(spec.method, spec.params))
    throw Error(ErrorKind::parameter,
                "parameter set does not match method " + std::string(method_name(spec.method)));
  validate(spec.params);
  if (spec.dim == 0 || spec.count == 0)
    throw Error(ErrorKind::parameter, "dimension and count must be >= 1");
  if (is_scalar_method(spec.method) && spec.dim != 1)
    throw Error(ErrorKind::parameter, std::string(method_name(spec.method)) +
                                          " works in the complex plane; dimension must be 1");
  Rng rng(spec.seed);
  MethodContext ctx{spec.reference, spec.axes};
  if (uses_reference(spec.method) && !ctx.reference)
    ctx.reference = random_reference(spec.dim, rng);
  if (uses_axes(spec.method) && !ctx.axes)
    ctx.axes = random_orthonormal(spec.dim, axis_count(spec.params), rng);
  if (ctx.reference && ctx.reference->dim() != spec.dim)
    throw Error(ErrorKind::parameter, "reference dimension does not match");
  if (ctx.axes && ctx.axes->dim() != spec.dim)
    throw Error(ErrorKind::parameter, "orthonormal family dimension does not match");

  std::vector<Vector> xs;
  const Method m = spec.method;

  if (m == Method::p41 || m == Method::petrovich) {
    double lo = 0.0;
    double hi = 0.0;
    if (m == Method::p41) {
      const auto& q = std::get<SectorParams>(spec.params);
      lo = q.phi1;
      hi = q.phi2;
    } else {
      const auto& q = std::get<PetrovichParams>(spec.params);
      lo = q.a - q.theta;
      hi = q.a + q.theta;
    }
    for (std::size_t k = 0; k < spec.count; ++k) {
      bool accepted = false;
      for (std::size_t attempt = 0; attempt < max_attempts_per_vector && !accepted; ++attempt) {
        const double angle = rng.uniform(lo, hi);
        const Vector z{std::polar(rng.log_uniform(0.1, 10.0), angle)};
        if (check(m, VectorFamily{z}, ctx, spec.params).feasible) {
          xs.push_back(z);
          accepted = true;
        }
      }
      if (!accepted)
        throw Error(ErrorKind::generation, "attempt cap exceeded; loosen the parameters");
    }
    return {VectorFamily(std::move(xs)), ctx};
  }

  const detail::Region region = detail::region_for(m, ctx, spec.params);
  const double noise_norm = std::sqrt(2.0 * static_cast<double>(spec.dim));
  for (std::size_t k = 0; k < spec.count; ++k) {
    bool accepted = false;
    double spread = 3.0;
    for (std::size_t attempt = 0; attempt < max_attempts_per_vector && !accepted; ++attempt) {
      Vector x = region.center;
      if (region.slack > 0.0) {
        const double size = region.slack * spread * rng.uniform();
        x += Complex(size / noise_norm) * random_vector(spec.dim, rng);
      }
      if (region.scale_invariant) x *= Complex(rng.log_uniform(0.1, 10.0));
      const auto rep = check(m, VectorFamily{x}, ctx, spec.params);
      // The center itself may sit on the boundary only when slack is zero.
      const double need = region.slack > 0.0 ? 0.0 : -check_tol;
      if (!rep.geometry_infeasible && rep.margins.front() >= need) {
        xs.push_back(std::move(x));
        accepted = true;
      } else {
        spread = std::max(0.5, spread * 0.9);
      }
    }
    if (!accepted)
      throw Error(ErrorKind::generation, "attempt cap exceeded; loosen the parameters");
  }
  return {VectorFamily(std::move(xs)), ctx};
}

inline bool has_equality_synthesis(Method m) {
  return m == Method::dm || m == Method::t21 || m == Method::t31 || m == Method::t32;
}

/// Equality family for dm (r = 1), t21, t31 and t32, with the reference or axes
/// drawn from the seed when the spec omits them. Weights are uniform in [0.5, 2].
inline SynthResult synth_equality(const SynthSpec& spec) {
  const Method m = spec.method;
  if (!has_equality_synthesis(m))
    throw Error(ErrorKind::parameter,
                "no equality synthesis for method " + std::string(method_name(m)));
  if (!params_fit(m, spec.params))
    throw Error(ErrorKind::parameter,
                "parameter set does not match method " + std::string(method_name(m)));
  if (spec.dim == 0 || spec.count == 0)
    throw Error(ErrorKind::parameter, "dimension and count must be >= 1");
  Rng rng(spec.seed);
  MethodContext ctx{spec.reference, spec.axes};
  if (uses_reference(m) && !ctx.reference) ctx.reference = random_reference(spec.dim, rng);
  if (uses_axes(m) && !ctx.axes)
    ctx.axes = random_orthonormal(spec.dim, axis_count(spec.params), rng);
  const auto weights = random_weights(spec.count, rng);
  switch (m) {
    case Method::dm: {
      const double r = std::get<DmParams>(spec.params).r;
      return {synth_equality_t21(*ctx.reference, ConeParams{r, 0.0}, weights), ctx};
    }
    case Method::t21:
      return {synth_equality_t21(*ctx.reference, std::get<ConeParams>(spec.params), weights), ctx};
    case Method::t31: {
      const auto& r = std::get<AxisRealParams>(spec.params).r;
      return {synth_equality_t32(*ctx.axes, AxisParams{r, std::vector<double>(r.size(), 0.0)},
                                 weights),
              ctx};
    }
    default:
      return {synth_equality_t32(*ctx.axes, std::get<AxisParams>(spec.params), weights), ctx};
  }
}

// ---------------------------------------------------------------------------
// Perturbation of equality families

/// Adds a random perturbation of relative size <= epsilon to every vector, halving
/// all perturbations together until `admissible(family)` holds again. Falls back to
/// the input after 64 halvings.
template <class Admissible>
VectorFamily perturb_equality(const VectorFamily& family, double epsilon, std::uint64_t seed,
                              Admissible&& admissible) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw Error(ErrorKind::parameter, "epsilon must be finite and >= 0");
  if (epsilon == 0.0) return family;
  Rng rng(seed);
  std::vector<Vector> deltas;
  for (const auto& x : family) {
    Vector g = random_vector(x.dim(), rng);
    const double size = epsilon * rng.uniform() * norm(x);
    deltas.push_back(g * Complex(size / norm(g)));
  }
  double scale = 1.0;
  for (int halving = 0; halving < 64; ++halving, scale *= 0.5) {
    std::vector<Vector> xs;
    for (std::size_t k = 0; k < family.size(); ++k)
      xs.push_back(family[k] + Complex(scale) * deltas[k]);
    VectorFamily candidate(std::move(xs));
    if (admissible(candidate)) return candidate;
  }
  return family;
}

/// Perturbation that keeps the cone sign conditions against e.
inline VectorFamily perturb_equality(const VectorFamily& family, const Reference& e,
                                     double epsilon, std::uint64_t seed) {
  return perturb_equality(family, epsilon, seed, [&](const VectorFamily& f) {
    return extract_cone_params(f, e).feasible;
  });
}

}  // namespace revtri
