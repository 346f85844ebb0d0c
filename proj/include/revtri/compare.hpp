#pragma once

// Method dispatch by id, and side-by-side comparison of every applicable bound.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revtri/bounds.hpp"
#include "revtri/hypotheses.hpp"

namespace revtri {

/// Geometric inputs a method may need besides the family itself.
struct MethodContext {
  std::optional<Reference> reference;
  std::optional<OrthonormalFamily> axes;
};

namespace detail {

inline const Reference& need_reference(const VectorFamily& family, const MethodContext& ctx,
                                       Method m) {
  if (!ctx.reference)
    throw Error(ErrorKind::input,
                "method " + std::string(method_name(m)) + " requires a reference vector");
  require_dim(family, ctx.reference->dim());
  return *ctx.reference;
}

inline const OrthonormalFamily& need_axes(const MethodContext& ctx, Method m) {
  if (!ctx.axes)
    throw Error(ErrorKind::input,
                "method " + std::string(method_name(m)) + " requires an orthonormal family");
  return *ctx.axes;
}

template <class P>
const P& params_as(const MethodParams& p, Method m) {
  if (auto* q = std::get_if<P>(&p)) return *q;
  throw Error(ErrorKind::parameter,
              "parameter set does not match method " + std::string(method_name(m)));
}

inline void require_method_dim(const VectorFamily& family, Method m) {
  if (is_scalar_method(m)) require_scalar(family);
}

}  // namespace detail

/// Hypothesis check with explicit parameters.
inline HypothesisReport check(Method m, const VectorFamily& family, const MethodContext& ctx,
                              const MethodParams& p) {
  detail::require_method_dim(family, m);
  using detail::params_as;
  switch (m) {
    case Method::dm:
      return check_dm(family, detail::need_reference(family, ctx, m), params_as<DmParams>(p, m));
    case Method::t21:
      return check_cone(family, detail::need_reference(family, ctx, m),
                        params_as<ConeParams>(p, m));
    case Method::c22:
      return check_disks(family, detail::need_reference(family, ctx, m),
                         params_as<DiskParams>(p, m));
    case Method::c23:
      return check_bands(family, detail::need_reference(family, ctx, m),
                         params_as<BandParams>(p, m));
    case Method::t31:
      return check_axis_real(family, detail::need_axes(ctx, m), params_as<AxisRealParams>(p, m));
    case Method::t32:
      return check_axis(family, detail::need_axes(ctx, m), params_as<AxisParams>(p, m));
    case Method::c32:
      return check_axis_disks(family, detail::need_axes(ctx, m), params_as<AxisDiskParams>(p, m));
    case Method::c33:
      return check_axis_bands(family, detail::need_axes(ctx, m), params_as<AxisBandParams>(p, m));
    case Method::p41: return check_sector(family, params_as<SectorParams>(p, m));
    case Method::p42:
      return check_scalar_disks(family, detail::need_reference(family, ctx, m),
                                params_as<DiskParams>(p, m));
    case Method::petrovich: return check_petrovich(family, params_as<PetrovichParams>(p, m));
  }
  throw Error(ErrorKind::input, "unknown method");
}

/// Band methods have no extraction: (m, M) are under-determined by the data.
inline bool has_extraction(Method m) { return m != Method::c23 && m != Method::c33; }

/// Best-parameter extraction.
inline HypothesisReport extract(Method m, const VectorFamily& family, const MethodContext& ctx) {
  detail::require_method_dim(family, m);
  switch (m) {
    case Method::dm: return extract_dm_param(family, detail::need_reference(family, ctx, m));
    case Method::t21: return extract_cone_params(family, detail::need_reference(family, ctx, m));
    case Method::c22: return extract_disk_radii(family, detail::need_reference(family, ctx, m));
    case Method::t31: return extract_axis_real_params(family, detail::need_axes(ctx, m));
    case Method::t32: return extract_axis_params(family, detail::need_axes(ctx, m));
    case Method::c32: return extract_axis_disk_radii(family, detail::need_axes(ctx, m));
    case Method::p41: return extract_sector(family);
    case Method::p42:
      return extract_scalar_disk_radii(family, detail::need_reference(family, ctx, m));
    case Method::petrovich: return extract_petrovich(family);
    case Method::c23:
    case Method::c33: break;
  }
  throw Error(ErrorKind::parameter, "method " + std::string(method_name(m)) +
                                        " has no parameter extraction; supply band parameters");
}

/// Certified bound with explicit parameters.
inline BoundResult bound(Method m, const VectorFamily& family, const MethodContext& ctx,
                         const MethodParams& p) {
  detail::require_method_dim(family, m);
  using detail::params_as;
  switch (m) {
    case Method::dm:
      return diaz_metcalf(family, detail::need_reference(family, ctx, m),
                          params_as<DmParams>(p, m));
    case Method::t21:
      return cone_bound(family, detail::need_reference(family, ctx, m),
                         params_as<ConeParams>(p, m));
    case Method::c22:
      return disk_bound(family, detail::need_reference(family, ctx, m),
                           params_as<DiskParams>(p, m));
    case Method::c23:
      return band_bound(family, detail::need_reference(family, ctx, m),
                           params_as<BandParams>(p, m));
    case Method::t31:
      return axis_real_bound(family, detail::need_axes(ctx, m), params_as<AxisRealParams>(p, m));
    case Method::t32:
      return axis_bound(family, detail::need_axes(ctx, m), params_as<AxisParams>(p, m));
    case Method::c32:
      return axis_disk_bound(family, detail::need_axes(ctx, m), params_as<AxisDiskParams>(p, m));
    case Method::c33:
      return axis_band_bound(family, detail::need_axes(ctx, m), params_as<AxisBandParams>(p, m));
    case Method::p41: return sector_bound(family, params_as<SectorParams>(p, m));
    case Method::p42:
      return scalar_disk_bound(family, detail::need_reference(family, ctx, m),
                             params_as<DiskParams>(p, m));
    case Method::petrovich: return petrovich(family, params_as<PetrovichParams>(p, m));
  }
  throw Error(ErrorKind::input, "unknown method");
}

/// Extract-then-bound. An infeasible extraction is returned without a certificate.
inline BoundResult bound_auto(Method m, const VectorFamily& family, const MethodContext& ctx) {
  HypothesisReport rep = extract(m, family, ctx);
  if (!rep.feasible) return {std::move(rep), std::nullopt};
  return bound(m, family, ctx, *rep.params);
}

struct SkippedMethod {
  Method method;
  std::string reason;
};

struct Comparison {
  std::vector<Certificate> certificates;  // bound descending, ties in method order
  std::vector<SkippedMethod> skipped;
};

/// Runs every method whose inputs are present and whose hypothesis holds. Supplied
/// parameters take precedence over extraction. A one-dimensional family without a
/// reference uses u = 1.
inline Comparison compare_all(const VectorFamily& family, MethodContext ctx,
                              const std::map<Method, MethodParams>& params = {}) {
  if (!ctx.reference && family.dim() == 1) ctx.reference = Reference(Vector{1.0});
  Comparison out;
  for (Method m : all_methods) {
    auto skip = [&](std::string reason) { out.skipped.push_back({m, std::move(reason)}); };
    if (is_scalar_method(m) && family.dim() != 1) {
      skip("requires dimension 1");
      continue;
    }
    if (uses_reference(m) && !ctx.reference) {
      skip("no reference vector");
      continue;
    }
    if (uses_axes(m) && !ctx.axes) {
      skip("no orthonormal family");
      continue;
    }
    const auto supplied = params.find(m);
    if (supplied == params.end() && !has_extraction(m)) {
      skip("no parameters supplied");
      continue;
    }
    try {
      BoundResult r = supplied != params.end() ? bound(m, family, ctx, supplied->second)
                                               : bound_auto(m, family, ctx);
      if (r.certified())
        out.certificates.push_back(*r.certificate);
      else
        skip(r.report.note.empty() ? "hypothesis infeasible" : r.report.note);
    } catch (const Error& err) {
      skip(err.what());
    }
  }
  std::stable_sort(out.certificates.begin(), out.certificates.end(),
                   [](const Certificate& a, const Certificate& b) { return a.bound > b.bound; });
  return out;
}

}  // namespace revtri
