#pragma once

// Method identifiers and the parameter sets each bound consumes.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "revtri/error.hpp"

namespace revtri {

/// Enum order doubles as the tie-break order in method comparisons.
enum class Method { dm, t21, c22, c23, t31, t32, c32, c33, p41, p42, petrovich };

inline constexpr std::array<Method, 11> all_methods = {
    Method::dm,  Method::t21, Method::c22, Method::c23, Method::t31,      Method::t32,
    Method::c32, Method::c33, Method::p41, Method::p42, Method::petrovich};

inline constexpr std::string_view method_name(Method m) {
  switch (m) {
    case Method::dm: return "dm";
    case Method::t21: return "t21";
    case Method::c22: return "c22";
    case Method::c23: return "c23";
    case Method::t31: return "t31";
    case Method::t32: return "t32";
    case Method::c32: return "c32";
    case Method::c33: return "c33";
    case Method::p41: return "p41";
    case Method::p42: return "p42";
    case Method::petrovich: return "petrovich";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
  for (Method m : all_methods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

/// Complex-plane methods; they require d = 1.
inline constexpr bool is_scalar_method(Method m) {
  return m == Method::p41 || m == Method::p42 || m == Method::petrovich;
}

inline constexpr bool uses_axes(Method m) {
  return m == Method::t31 || m == Method::t32 || m == Method::c32 || m == Method::c33;
}

inline constexpr bool uses_reference(Method m) {
  return m == Method::dm || m == Method::t21 || m == Method::c22 || m == Method::c23 ||
         m == Method::p42;
}

struct DmParams {
  double r = 0.0;
};

struct ConeParams {
  double r1 = 0.0;
  double r2 = 0.0;
};

struct DiskParams {
  double rho1 = 0.0;
  double rho2 = 0.0;
};

/// Real-axis band [m1, M1] and imaginary-axis band [m2, M2].
struct BandParams {
  double m1 = 0.0;
  double M1 = 0.0;
  double m2 = 0.0;
  double M2 = 0.0;
};

struct AxisRealParams {
  std::vector<double> r;
};

struct AxisParams {
  std::vector<double> r;
  std::vector<double> rho;
};

struct AxisDiskParams {
  std::vector<double> rho;
  std::vector<double> eta;
};

struct AxisBandParams {
  std::vector<BandParams> bands;
};

struct SectorParams {
  double phi1 = 0.0;
  double phi2 = 0.0;
};

struct PetrovichParams {
  double a = 0.0;
  double theta = 0.0;
};

using MethodParams = std::variant<DmParams, ConeParams, DiskParams, BandParams, AxisRealParams,
                                  AxisParams, AxisDiskParams, AxisBandParams, SectorParams,
                                  PetrovichParams>;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::parameter, what);
}

inline bool nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
inline bool open_unit(double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; }

}  // namespace detail

inline void validate(const DmParams& p) { detail::require(detail::nonneg(p.r), "r must be >= 0"); }

inline void validate(const ConeParams& p) {
  detail::require(detail::nonneg(p.r1) && detail::nonneg(p.r2), "r1, r2 must be finite and >= 0");
}

inline void validate(const DiskParams& p) {
  detail::require(detail::open_unit(p.rho1) && detail::open_unit(p.rho2),
                  "rho1, rho2 must lie in (0, 1)");
}

inline void validate(const BandParams& p) {
  const bool finite = std::isfinite(p.m1) && std::isfinite(p.M1) && std::isfinite(p.m2) &&
                      std::isfinite(p.M2);
  detail::require(finite && p.M1 >= p.m1 && p.m1 > 0.0, "band requires M1 >= m1 > 0");
  detail::require(p.M2 >= p.m2 && p.m2 > 0.0, "band requires M2 >= m2 > 0");
}

inline void validate(const AxisRealParams& p) {
  detail::require(!p.r.empty(), "axis parameters must be nonempty");
  for (double v : p.r) detail::require(detail::nonneg(v), "axis r_k must be >= 0");
}

inline void validate(const AxisParams& p) {
  detail::require(!p.r.empty() && p.r.size() == p.rho.size(),
                  "axis r and rho lists must be nonempty and of equal length");
  for (std::size_t k = 0; k < p.r.size(); ++k)
    detail::require(detail::nonneg(p.r[k]) && detail::nonneg(p.rho[k]),
                    "axis r_k, rho_k must be >= 0");
}

inline void validate(const AxisDiskParams& p) {
  detail::require(!p.rho.empty() && p.rho.size() == p.eta.size(),
                  "axis rho and eta lists must be nonempty and of equal length");
  for (std::size_t k = 0; k < p.rho.size(); ++k)
    detail::require(detail::open_unit(p.rho[k]) && detail::open_unit(p.eta[k]),
                    "axis rho_k, eta_k must lie in (0, 1)");
}

inline void validate(const AxisBandParams& p) {
  detail::require(!p.bands.empty(), "axis band list must be nonempty");
  for (const auto& b : p.bands) validate(b);
}

inline void validate(const SectorParams& p) {
  detail::require(std::isfinite(p.phi1) && std::isfinite(p.phi2) && p.phi1 >= 0.0 &&
                      p.phi1 <= p.phi2 && p.phi2 < std::numbers::pi / 2,
                  "sector requires 0 <= phi1 <= phi2 < pi/2");
}

// theta = 0 is admitted: a family on a single ray gives factor 1, which is sound.
inline void validate(const PetrovichParams& p) {
  detail::require(std::isfinite(p.a) && std::isfinite(p.theta) && p.theta >= 0.0 &&
                      p.theta < std::numbers::pi / 2,
                  "petrovich requires 0 <= theta < pi/2");
}

inline void validate(const MethodParams& p) {
  std::visit([](const auto& q) { validate(q); }, p);
}

/// Whether a parameter set has the shape method m consumes.
inline bool params_fit(Method m, const MethodParams& p) {
  switch (m) {
    case Method::dm: return std::holds_alternative<DmParams>(p);
    case Method::t21: return std::holds_alternative<ConeParams>(p);
    case Method::c22:
    case Method::p42: return std::holds_alternative<DiskParams>(p);
    case Method::c23: return std::holds_alternative<BandParams>(p);
    case Method::t31: return std::holds_alternative<AxisRealParams>(p);
    case Method::t32: return std::holds_alternative<AxisParams>(p);
    case Method::c32: return std::holds_alternative<AxisDiskParams>(p);
    case Method::c33: return std::holds_alternative<AxisBandParams>(p);
    case Method::p41: return std::holds_alternative<SectorParams>(p);
    case Method::petrovich: return std::holds_alternative<PetrovichParams>(p);
  }
  return false;
}

/// Number of orthonormal axes a parameter set refers to (1 for single-reference sets).
inline std::size_t axis_count(const MethodParams& p) {
  if (auto* q = std::get_if<AxisRealParams>(&p)) return q->r.size();
  if (auto* q = std::get_if<AxisParams>(&p)) return q->r.size();
  if (auto* q = std::get_if<AxisDiskParams>(&p)) return q->rho.size();
  if (auto* q = std::get_if<AxisBandParams>(&p)) return q->bands.size();
  return 1;
}

}  // namespace revtri
