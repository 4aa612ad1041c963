#pragma once

#include <random>
#include <set>
#include <vector>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/hecke.hpp"

namespace testing_support {

using namespace iwahori;

inline std::mt19937& rng() {
  static std::mt19937 gen(20261015u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Random dominant coweight with first-half entries in [lo, hi]; for GSp the
// similitude is drawn from [0, 1].
inline Coweight random_dominant(const RootDatum& rd, int lo, int hi) {
  std::vector<int> half(static_cast<std::size_t>(rd.rank()));
  for (int& x : half) x = uniform(lo, hi);
  std::sort(half.rbegin(), half.rend());
  if (rd.kind() == GroupKind::GL) return Coweight(half);
  const int c = uniform(0, 1);
  // dominance for GSp also needs l_d >= c - l_d
  for (int& x : half) x = std::max(x, (c + 1) / 2);
  return rd.complete(half, c);
}

// All elements of length <= max_len whose Omega-component lies in [0, max_omega].
inline std::vector<AffineWeylElement> short_elements(const AffineWeylGroup& g, int max_len, int max_omega) {
  std::set<AffineWeylElement> seen;
  std::vector<AffineWeylElement> frontier;
  for (int k = 0; k <= max_omega; ++k) frontier.push_back(g.omega_power(k));
  seen.insert(frontier.begin(), frontier.end());
  for (int len = 0; len < max_len; ++len) {
    std::vector<AffineWeylElement> next;
    for (const auto& x : frontier)
      for (const auto& s : g.simple_reflections()) {
        AffineWeylElement y = g.multiply(s, x);
        if (g.length(y) == len + 1 && seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline HeckeElement random_hecke(const std::vector<AffineWeylElement>& pool, int terms) {
  HeckeElement h;
  for (int i = 0; i < terms; ++i) {
    const auto& x = pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
    h.add(x, Laurent::monomial(uniform(-3, 3) == 0 ? 1 : uniform(-3, 3), uniform(-2, 2)));
  }
  return h;
}

}  // namespace testing_support
