#pragma once

#include "pbwdegen/acceptance.hpp"

#include <gtest/gtest.h>

#include <random>

namespace pbwdegen::testing {

/// Weight system from a flat list in lexicographic pair order.
inline WeightSystem triangle(int n, std::initializer_list<long> values) {
  WeightSystem A(n);
  auto it = values.begin();
  for (const auto& [i, j] : all_pairs(n)) A.set(i, j, Integer(*it++));
  return A;
}

inline PlueckerIndex idx(int n, std::vector<int> e) { return PlueckerIndex(n, std::move(e)); }

inline Monomial mono(int n, std::vector<std::vector<int>> factors) {
  std::vector<PlueckerIndex> f;
  for (auto& e : factors) f.emplace_back(n, std::move(e));
  return Monomial(std::move(f));
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(4711);
  return r;
}

/// Canonical systems plus `extra` random cone points.
inline std::vector<WeightSystem> sample_cone(int n, std::size_t extra) {
  std::vector<WeightSystem> out;
  for (const auto& [label, A] : canonical_weight_systems(n)) out.push_back(A);
  for (auto& A : acceptance::random_cone_points(n, extra, rng())) out.push_back(std::move(A));
  return out;
}

}  // namespace pbwdegen::testing
