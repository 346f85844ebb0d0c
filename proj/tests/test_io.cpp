#include <gtest/gtest.h>

#include "support.hpp"

using namespace revtri;
using oracle::C;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_dataset(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Dataset, ParsesAllFields) {
  const auto ds = parse_dataset(R"({
    "dim": 2,
    "vectors": [[[1, 2], [3, 4]], [[0, 0], [1, -1]]],
    "reference": [[1, 0], [0, 0]],
    "orthonormal": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]],
    "params": {"t21": {"r1": 0.1, "r2": 0.2},
               "c33": {"bands": [{"m1": 0.1, "M1": 10, "m2": 0.1, "M2": 10}]}},
    "meta": {"seed": 1}
  })");
  EXPECT_EQ(ds.dim, 2u);
  EXPECT_EQ(ds.vectors.size(), 2u);
  EXPECT_EQ(ds.vectors[0][1], C(3, 4));
  ASSERT_TRUE(ds.reference && ds.orthonormal);
  EXPECT_EQ(ds.orthonormal->size(), 2u);
  EXPECT_EQ(std::get<ConeParams>(ds.params.at(Method::t21)).r2, 0.2);
  EXPECT_EQ(std::get<AxisBandParams>(ds.params.at(Method::c33)).bands.size(), 1u);
}

TEST(Dataset, ErrorsNameTheField) {
  EXPECT_NE(error_of(R"({"dim": 2, "vectors": [[[1, 0]]]})").find("vectors[0]"), std::string::npos);
  EXPECT_NE(error_of(R"({"vectors": [[[1, 0]]]})").find("dim"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 1, "vectors": [[[1, 0]]], "reference": [[2, 0]]})").find("reference"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 1, "vectors": [[[1]]]})").find("vectors[0][0]"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 1, "vectors": [[[1, 0]]], "params": {"t21": {"r1": 1}}})")
                .find("params.t21.r2"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 1, "vectors": [[[1, 0]]], "params": {"zz": {}}})").find("params.zz"),
            std::string::npos);
  EXPECT_NE(error_of("{not json").find("malformed"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "vectors": [[[1, 0], [0, 0]]],
                         "orthonormal": [[[1, 0], [0, 0]], [[1, 0], [0, 0]]]})")
                .find("orthonormal"),
            std::string::npos);
}

TEST(Dataset, RoundTrip) {
  const auto s = sample_feasible({Method::t32, 3, 4, AxisParams{{0.2, 0.1}, {0.1, 0.2}}, 9});
  Dataset ds;
  ds.dim = 3;
  ds.vectors = s.family;
  ds.orthonormal = s.context.axes;
  ds.params[Method::t32] = AxisParams{{0.2, 0.1}, {0.1, 0.2}};
  const auto back = dataset_from_json(Json::parse(to_json(ds).dump()));
  EXPECT_EQ(back.vectors, ds.vectors);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ((*back.orthonormal)[k], (*ds.orthonormal)[k]);
  EXPECT_EQ(std::get<AxisParams>(back.params.at(Method::t32)).rho[1], 0.2);
}

TEST(Certificate, SchemaFields) {
  const auto r = cone_bound(scalars({C(3, 4)}), unit_one(), {0.5, 0.5});
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"method", "params", "factor", "sum_of_norms", "bound",
                                            "actual", "tightness", "equality", "feasible",
                                            "skipped_zero_vectors"}));
  EXPECT_EQ(j["method"], "t21");
  EXPECT_EQ(j["params"]["r1"], 0.5);
}

TEST(Certificate, DoublesRoundTripExactly) {
  const double x = 0.1 + 0.2;
  const Json j = Json::parse(Json{{"v", x}}.dump());
  EXPECT_EQ(j["v"].get<double>(), x);
}
