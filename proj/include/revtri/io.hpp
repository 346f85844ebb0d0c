#pragma once

// Dataset JSON ingestion and JSON serialization of reports and certificates.
//
// Dataset layout:
//   { "dim": d,
//     "vectors": [[[re, im], ...d], ...n],
//     "reference": [[re, im], ...d],                (optional)
//     "orthonormal": [[[re, im], ...d], ...m],      (optional)
//     "params": { "<method>": {...}, ... },          (optional)
//     "meta": {...} }                                (optional, ignored on read)

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "revtri/compare.hpp"
#include "revtri/refsearch.hpp"

namespace revtri {

using Json = nlohmann::ordered_json;

struct Dataset {
  std::size_t dim = 0;
  VectorFamily vectors{Vector{0.0}};
  std::optional<Reference> reference;
  std::optional<OrthonormalFamily> orthonormal;
  std::map<Method, MethodParams> params;
  Json meta;  // null when absent

  MethodContext context() const { return {reference, orthonormal}; }
};

namespace detail {

[[noreturn]] inline void bad_field(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::input, "field '" + field + "': " + what);
}

inline double number_at(const Json& j, const std::string& field) {
  if (!j.is_number()) bad_field(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad_field(field, "not finite");
  return v;
}

inline std::size_t count_at(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad_field(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline const Json& member(const Json& obj, const std::string& key, const std::string& field) {
  if (!obj.is_object()) bad_field(field, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad_field(field + "." + key, "missing");
  return *it;
}

inline Complex complex_at(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) bad_field(field, "expected [re, im]");
  return {number_at(j[0], field + "[0]"), number_at(j[1], field + "[1]")};
}

inline Vector vector_at(const Json& j, std::size_t dim, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected an array of [re, im] pairs");
  if (j.size() != dim)
    bad_field(field, "length " + std::to_string(j.size()) + " does not match dim " +
                         std::to_string(dim));
  std::vector<Complex> v;
  v.reserve(dim);
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(complex_at(j[i], field + "[" + std::to_string(i) + "]"));
  return Vector(std::move(v));
}

inline std::vector<Vector> vectors_at(const Json& j, std::size_t dim, const std::string& field) {
  if (!j.is_array() || j.empty()) bad_field(field, "expected a nonempty array of vectors");
  std::vector<Vector> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(vector_at(j[k], dim, field + "[" + std::to_string(k) + "]"));
  return out;
}

inline std::vector<double> numbers_at(const Json& j, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(number_at(j[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

inline BandParams band_at(const Json& j, const std::string& f) {
  return {number_at(member(j, "m1", f), f + ".m1"), number_at(member(j, "M1", f), f + ".M1"),
          number_at(member(j, "m2", f), f + ".m2"), number_at(member(j, "M2", f), f + ".M2")};
}

}  // namespace detail

/// Parses one method's parameter object. `field` names it in error messages.
inline MethodParams params_from_json(Method m, const Json& j, const std::string& field) {
  using detail::member;
  using detail::number_at;
  using detail::numbers_at;
  const auto num = [&](const char* key) {
    return number_at(member(j, key, field), field + "." + key);
  };
  const auto nums = [&](const char* key) {
    return numbers_at(member(j, key, field), field + "." + key);
  };
  MethodParams p;
  switch (m) {
    case Method::dm: p = DmParams{num("r")}; break;
    case Method::t21: p = ConeParams{num("r1"), num("r2")}; break;
    case Method::c22:
    case Method::p42: p = DiskParams{num("rho1"), num("rho2")}; break;
    case Method::c23: p = detail::band_at(j, field); break;
    case Method::t31: p = AxisRealParams{nums("r")}; break;
    case Method::t32: p = AxisParams{nums("r"), nums("rho")}; break;
    case Method::c32: p = AxisDiskParams{nums("rho"), nums("eta")}; break;
    case Method::c33: {
      const Json& bands = member(j, "bands", field);
      if (!bands.is_array()) detail::bad_field(field + ".bands", "expected an array");
      AxisBandParams q;
      for (std::size_t k = 0; k < bands.size(); ++k)
        q.bands.push_back(detail::band_at(bands[k], field + ".bands[" + std::to_string(k) + "]"));
      p = std::move(q);
      break;
    }
    case Method::p41: p = SectorParams{num("phi1"), num("phi2")}; break;
    case Method::petrovich: p = PetrovichParams{num("a"), num("theta")}; break;
  }
  try {
    validate(p);
  } catch (const Error& e) {
    detail::bad_field(field, e.what());
  }
  return p;
}

inline Json to_json(const MethodParams& p) {
  return std::visit(
      [](const auto& q) -> Json {
        using T = std::decay_t<decltype(q)>;
        const auto band = [](const BandParams& b) {
          return Json{{"m1", b.m1}, {"M1", b.M1}, {"m2", b.m2}, {"M2", b.M2}};
        };
        if constexpr (std::is_same_v<T, DmParams>) return {{"r", q.r}};
        else if constexpr (std::is_same_v<T, ConeParams>) return {{"r1", q.r1}, {"r2", q.r2}};
        else if constexpr (std::is_same_v<T, DiskParams>)
          return {{"rho1", q.rho1}, {"rho2", q.rho2}};
        else if constexpr (std::is_same_v<T, BandParams>) return band(q);
        else if constexpr (std::is_same_v<T, AxisRealParams>) return {{"r", q.r}};
        else if constexpr (std::is_same_v<T, AxisParams>) return {{"r", q.r}, {"rho", q.rho}};
        else if constexpr (std::is_same_v<T, AxisDiskParams>)
          return {{"rho", q.rho}, {"eta", q.eta}};
        else if constexpr (std::is_same_v<T, AxisBandParams>) {
          Json arr = Json::array();
          for (const auto& b : q.bands) arr.push_back(band(b));
          return {{"bands", arr}};
        } else if constexpr (std::is_same_v<T, SectorParams>)
          return {{"phi1", q.phi1}, {"phi2", q.phi2}};
        else
          return {{"a", q.a}, {"theta", q.theta}};
      },
      p);
}

inline Json to_json(const Vector& v) {
  Json arr = Json::array();
  for (const Complex& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

inline Dataset dataset_from_json(const Json& j) {
  if (!j.is_object()) detail::bad_field("<root>", "expected an object");
  Dataset ds;
  ds.dim = detail::count_at(detail::member(j, "dim", "<root>"), "dim");
  if (ds.dim == 0) detail::bad_field("dim", "must be positive");
  ds.vectors = VectorFamily(detail::vectors_at(detail::member(j, "vectors", "<root>"), ds.dim,
                                               "vectors"));
  if (auto it = j.find("reference"); it != j.end() && !it->is_null()) {
    const Vector v = detail::vector_at(*it, ds.dim, "reference");
    try {
      ds.reference = Reference(v);
    } catch (const Error& e) {
      detail::bad_field("reference", e.what());
    }
  }
  if (auto it = j.find("orthonormal"); it != j.end() && !it->is_null()) {
    auto vs = detail::vectors_at(*it, ds.dim, "orthonormal");
    try {
      ds.orthonormal = OrthonormalFamily(std::move(vs));
    } catch (const Error& e) {
      detail::bad_field("orthonormal", e.what());
    }
  }
  if (auto it = j.find("params"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) detail::bad_field("params", "expected an object");
    for (const auto& [key, value] : it->items()) {
      const auto m = parse_method(key);
      if (!m) detail::bad_field("params." + key, "unknown method");
      ds.params[*m] = params_from_json(*m, value, "params." + key);
    }
  }
  if (auto it = j.find("meta"); it != j.end()) ds.meta = *it;
  return ds;
}

inline Dataset parse_dataset(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::input, std::string("malformed JSON: ") + e.what());
  }
  return dataset_from_json(j);
}

inline Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::input, "cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

inline Json to_json(const Dataset& ds) {
  Json j;
  j["dim"] = ds.dim;
  Json vs = Json::array();
  for (const auto& v : ds.vectors) vs.push_back(to_json(v));
  j["vectors"] = vs;
  if (ds.reference) j["reference"] = to_json(ds.reference->vector());
  if (ds.orthonormal) {
    Json es = Json::array();
    for (const auto& e : *ds.orthonormal) es.push_back(to_json(e));
    j["orthonormal"] = es;
  }
  if (!ds.params.empty()) {
    Json ps = Json::object();
    for (const auto& [m, p] : ds.params) ps[std::string(method_name(m))] = to_json(p);
    j["params"] = ps;
  }
  if (!ds.meta.is_null()) j["meta"] = ds.meta;
  return j;
}

inline Json to_json(const Certificate& c) {
  return {{"method", method_name(c.method)},
          {"params", to_json(c.params)},
          {"factor", c.factor},
          {"sum_of_norms", c.sum_of_norms},
          {"bound", c.bound},
          {"actual", c.actual},
          {"tightness", c.tightness},
          {"equality", c.equality},
          {"feasible", c.feasible},
          {"skipped_zero_vectors", c.skipped_zero_vectors}};
}

inline Json to_json(const HypothesisReport& r) {
  Json j{{"method", method_name(r.method)}, {"feasible", r.feasible}};
  j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
  j["margins"] = r.margins;
  j["skipped_zero_vectors"] = r.skipped_zero_vectors;
  j["degenerate"] = r.degenerate;
  j["geometry_infeasible"] = r.geometry_infeasible;
  j["failing_index"] = r.failing_index ? Json(*r.failing_index) : Json(nullptr);
  j["failing_axis"] = r.failing_axis ? Json(*r.failing_axis) : Json(nullptr);
  j["note"] = r.note;
  return j;
}

/// Certificate when present, otherwise the infeasible report.
inline Json to_json(const BoundResult& r) {
  if (r.certificate) return to_json(*r.certificate);
  Json j = to_json(r.report);
  j["feasible"] = false;
  return j;
}

inline Json to_json(const SearchResult& r) {
  Json j;
  j["reference"] = r.reference ? to_json(r.reference->vector()) : Json(nullptr);
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  j["sum_seed_bound"] = r.sum_seed_bound;
  j["phase_seed_bound"] = r.phase_seed_bound;
  j["note"] = r.note;
  return j;
}

inline Json to_json(const Comparison& c) {
  Json arr = Json::array();
  for (const auto& cert : c.certificates) arr.push_back(to_json(cert));
  return arr;
}

/// Fixed-width text table of a comparison, one row per certificate and per skip.
inline std::string comparison_table(const Comparison& c) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %12s %14s %14s %12s %8s\n", "method", "factor", "bound",
                "actual", "tightness", "equality");
  os << line;
  for (const auto& cert : c.certificates) {
    std::snprintf(line, sizeof line, "%-10s %12.9f %14.9g %14.9g %12.9f %8s\n",
                  std::string(method_name(cert.method)).c_str(), cert.factor, cert.bound,
                  cert.actual, cert.tightness, cert.equality ? "yes" : "no");
    os << line;
  }
  for (const auto& s : c.skipped)
    os << std::string(method_name(s.method)) << "  skipped: " << s.reason << '\n';
  return os.str();
}

}  // namespace revtri
