// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace spinbloch {

/// Exact binomial coefficient; n stays far below the uint64 overflow point
/// for every size this library admits.
constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

constexpr std::uint64_t factorial(int n) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

inline constexpr int kMaxLogFactorial = 128;

/// log(n!) for 0 <= n < kMaxLogFactorial.
inline double log_factorial(int n) {
  static const std::array<double, kMaxLogFactorial> table = [] {
    std::array<double, kMaxLogFactorial> t{};
    for (int i = 1; i < kMaxLogFactorial; ++i) t[i] = t[i - 1] + std::log(static_cast<double>(i));
    return t;
  }();
  if (n < 0 || n >= kMaxLogFactorial) throw std::out_of_range("log_factorial argument out of range");
  return table[n];
}

}  // namespace spinbloch
