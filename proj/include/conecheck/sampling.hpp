// Copyright 2026 The conecheck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONECHECK_SAMPLING_HPP_
#define CONECHECK_SAMPLING_HPP_

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "conecheck/rational.hpp"

namespace conecheck {

/// Seeded sampling parameters shared by every law check and suite.
/// All checks are deterministic functions of (seed, config).
struct SampleConfig {
  std::uint64_t seed = 1;
  std::uint32_t sample_count = 1000;
  std::uint32_t max_index = 8;
  std::uint32_t max_numerator = 64;
  std::uint32_t max_denominator = 64;
  std::uint64_t rho_cap = std::uint64_t(1) << 20;
  Rational w = Rational(1);

  void validate() const {
    if (sample_count == 0)
      throw std::invalid_argument("SampleConfig: sample_count must be >= 1");
    if (max_index == 0 || max_numerator == 0 || max_denominator == 0)
      throw std::invalid_argument("SampleConfig: bounds must be >= 1");
    if (!w.positive())
      throw std::invalid_argument("SampleConfig: w must be > 0");
  }
};

/// splitmix64. Standard distributions are implementation-defined, so all
/// sampling goes through this generator to keep reports byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform-ish in [lo, hi].
  std::uint32_t range_u32(std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(below(hi - lo + 1));
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

/// FNV-1a, used to derive independent per-law seeds from the config seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h ^ seed;
}

/// Rational in [0, max_numerator] with denominator in [1, max_denominator].
inline Rational sample_rational(Rng& rng, const SampleConfig& cfg) {
  auto num = rng.below(cfg.max_numerator + 1);
  auto den = 1 + rng.below(cfg.max_denominator);
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

inline Rational sample_positive_rational(Rng& rng, const SampleConfig& cfg) {
  auto num = 1 + rng.below(cfg.max_numerator);
  auto den = 1 + rng.below(cfg.max_denominator);
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

/// Rational in [lo, hi], hitting both endpoints with nonzero probability.
inline Rational sample_in_interval(Rng& rng, const Rational& lo,
                                   const Rational& hi) {
  switch (rng.below(6)) {
    case 0:
      return lo;
    case 1:
      return hi;
    default: {
      auto den = 2 + rng.below(30);
      auto num = rng.below(den + 1);
      Rational t(static_cast<long long>(num), static_cast<long long>(den));
      return lo + t * (hi - lo);
    }
  }
}

/// Proper fraction in (0, 1), exclusive at both ends.
inline Rational sample_unit_open(Rng& rng) {
  auto den = 2 + rng.below(30);
  auto num = 1 + rng.below(den - 1);
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

inline long long ipow10(std::uint64_t e) {
  long long r = 1;
  while (e--) r *= 10;
  return r;
}

/// n exact rationals spread over (1e-3, 1e3), a few per decade, strictly
/// inside the interval. Used by the refutation sweep.
inline std::vector<Rational> log_spread_grid(std::uint32_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint64_t d = (std::uint64_t(7) * k) / n;       // decade 0..6
    std::uint64_t frac = (std::uint64_t(7) * k) % n;    // position in decade
    // multiplier in (1, 10)
    Rational mult = Rational(1) + Rational(9) * Rational(static_cast<long long>(frac + 1),
                                                         static_cast<long long>(n + 1));
    Rational decade = d >= 3
                          ? Rational(static_cast<long long>(ipow10(d - 3)))
                          : Rational(1, static_cast<long long>(ipow10(3 - d)));
    out.push_back(mult * decade);
  }
  return out;
}

}  // namespace conecheck

#endif  // CONECHECK_SAMPLING_HPP_
