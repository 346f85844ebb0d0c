#pragma once

// Independent direct-arithmetic oracles for the tests. Nothing here calls the
// library's numerics.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "revtri/revtri.hpp"

namespace oracle {

using C = std::complex<double>;
using Raw = std::vector<std::vector<C>>;

inline C dot(const std::vector<C>& x, const std::vector<C>& y) {
  C acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

inline double length(const std::vector<C>& x) {
  double acc = 0.0;
  for (const C& z : x) acc += std::norm(z);
  return std::sqrt(acc);
}

inline double actual(const Raw& xs) {
  std::vector<C> s(xs.front().size());
  for (const auto& x : xs)
    for (std::size_t i = 0; i < x.size(); ++i) s[i] += x[i];
  return length(s);
}

inline double norm_sum(const Raw& xs) {
  double acc = 0.0;
  for (const auto& x : xs) acc += length(x);
  return acc;
}

inline Raw raw(const revtri::VectorFamily& f) {
  Raw out;
  for (const auto& v : f) out.emplace_back(v.begin(), v.end());
  return out;
}

inline std::vector<C> raw(const revtri::Vector& v) { return {v.begin(), v.end()}; }

}  // namespace oracle

inline revtri::VectorFamily scalars(std::initializer_list<std::complex<double>> zs) {
  std::vector<revtri::Vector> vs;
  for (auto z : zs) vs.push_back(revtri::Vector{z});
  return revtri::VectorFamily(std::move(vs));
}

inline revtri::Reference unit_one() { return revtri::Reference(revtri::Vector{1.0}); }

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}
