#pragma once

// Search over the unit sphere of C^d for the reference that maximizes the
// certified cone bound of a family.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "revtri/bounds.hpp"
#include "revtri/hypotheses.hpp"
#include "revtri/random.hpp"

namespace revtri {

struct SearchConfig {
  std::size_t restarts = 8;
  std::size_t iterations = 200;
  double initial_step = 0.1;
  double decay = 0.7;  // step multiplier after a rejected move
  std::uint64_t seed = 0;
};

inline void validate(const SearchConfig& cfg) {
  if (cfg.restarts == 0 || cfg.iterations == 0)
    throw Error(ErrorKind::parameter, "restarts and iterations must be positive");
  if (!(cfg.initial_step > 0.0) || !std::isfinite(cfg.initial_step))
    throw Error(ErrorKind::parameter, "initial step must be positive");
  if (!(cfg.decay > 0.0 && cfg.decay < 1.0))
    throw Error(ErrorKind::parameter, "step decay must lie in (0, 1)");
}

inline constexpr std::size_t phase_samples = 64;

struct SearchResult {
  std::optional<Reference> reference;
  std::optional<Certificate> certificate;
  double sum_seed_bound = 0.0;    // e = s / ||s||, s = sum x_k
  double phase_seed_bound = 0.0;  // best of the 64-angle phase scan of that seed
  std::string note;

  bool found() const noexcept { return certificate.has_value(); }
};

/// Cone parameters extracted against e, then the certified bound.
inline BoundResult evaluate_reference(const VectorFamily& family, const Reference& e) {
  HypothesisReport rep = extract_cone_params(family, e);
  if (!rep.feasible) return {std::move(rep), std::nullopt};
  return cone_bound(family, e, std::get<ConeParams>(*rep.params));
}

namespace detail {

/// Certified bound, 0 when the extraction is infeasible.
inline double reference_score(const VectorFamily& family, const Reference& e) {
  const auto r = evaluate_reference(family, e);
  return r.certified() ? r.certificate->bound : 0.0;
}

inline Reference rotate(const Reference& base, double angle) {
  return Reference::normalized(std::polar(1.0, -angle) * base.vector());
}

/// Random direction in the real tangent space of the sphere at e.
inline Vector tangent_direction(const Reference& e, Rng& rng) {
  for (;;) {
    Vector g = random_vector(e.dim(), rng);
    g -= Complex(inner(g, e.vector()).real()) * e.vector();
    const double n = norm(g);
    if (n > 1e-12) return g * Complex(1.0 / n);
  }
}

struct Candidate {
  Reference e;
  double score;
};

}  // namespace detail

/// Best reference found and its certificate. The result never scores below the
/// two deterministic seeds: the normalized sum, and its best phase rotation
/// among 64 uniform angles.
inline SearchResult search_reference(const VectorFamily& family, const SearchConfig& cfg = {}) {
  validate(cfg);
  SearchResult out;
  const Vector s = family_sum(family);
  std::optional<Reference> base;
  if (norm(s) > 0.0) {
    base = Reference::normalized(s);
  } else {
    // The sum cancels; fall back to the first non-zero vector's direction.
    for (const auto& x : family)
      if (norm(x) > 0.0) {
        base = Reference::normalized(x);
        break;
      }
  }
  if (!base) {
    out.note = "no non-zero vector in the family";
    return out;
  }

  detail::Candidate best{*base, norm(s) > 0.0 ? detail::reference_score(family, *base) : 0.0};
  out.sum_seed_bound = best.score;

  constexpr double two_pi = 2.0 * std::numbers::pi;
  double best_angle = 0.0;
  double phase_best = -1.0;
  for (std::size_t j = 0; j < phase_samples; ++j) {
    const double angle = two_pi * static_cast<double>(j) / phase_samples;
    const double score = detail::reference_score(family, detail::rotate(*base, angle));
    if (score > phase_best) {
      phase_best = score;
      best_angle = angle;
    }
  }
  out.phase_seed_bound = phase_best;
  if (phase_best > best.score) best = {detail::rotate(*base, best_angle), phase_best};

  // Local refinement of the phase on shrinking brackets.
  double half_width = two_pi / phase_samples;
  for (int round = 0; round < 4; ++round) {
    double center = best_angle;
    for (int j = -8; j <= 8; ++j) {
      const double angle = center + half_width * j / 8.0;
      const Reference e = detail::rotate(*base, angle);
      const double score = detail::reference_score(family, e);
      if (score > best.score) {
        best = {e, score};
        best_angle = angle;
      }
    }
    half_width /= 8.0;
  }

  // Derivative-free local moves on the sphere from independent restarts.
  const detail::Candidate seed_best = best;
  for (std::size_t restart = 0; restart < cfg.restarts; ++restart) {
    Rng rng(cfg.seed + 0x9E3779B97F4A7C15ULL * restart);
    detail::Candidate current = seed_best;
    if (restart > 0) {
      const Vector moved = seed_best.e.vector() +
                           Complex(0.5) * detail::tangent_direction(seed_best.e, rng);
      const Reference e = Reference::normalized(moved);
      current = {e, detail::reference_score(family, e)};
    }
    double step = cfg.initial_step;
    for (std::size_t it = 0; it < cfg.iterations && step > 1e-14; ++it) {
      const Vector moved =
          current.e.vector() + Complex(step) * detail::tangent_direction(current.e, rng);
      const Reference e = Reference::normalized(moved);
      const double score = detail::reference_score(family, e);
      if (score > current.score)
        current = {e, score};
      else
        step *= cfg.decay;
    }
    // Ties keep the earlier restart.
    if (current.score > best.score) best = current;
  }

  auto result = evaluate_reference(family, best.e);
  if (!result.certified()) {
    out.note = "no feasible reference found";
    return out;
  }
  out.reference = best.e;
  out.certificate = result.certificate;
  return out;
}

}  // namespace revtri
