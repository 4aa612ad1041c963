#pragma once

// Extended affine Weyl group W~ = X_* x| W_0 of GL(d) / GSp(2d).
//
// An element t^lambda w acts on coweights by v -> lambda + w v. Lengths use
// the Iwahori-Matsumoto formula; W~ = W_a x| Omega with Omega ~ Z the
// length-zero subgroup, generated by a single element omega of degree 1
// (degree = coordinate sum for GL, similitude for GSp).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "iwahori/root_data.hpp"

namespace iwahori {

class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(const Coweight& translation, const Permutation& finite, std::uint8_t tag);

  Coweight translation(int n) const;
  int translation_entry(int i) const { return translation_[static_cast<std::size_t>(i)]; }
  const Permutation& finite_part() const noexcept { return finite_; }
  std::uint8_t tag() const noexcept { return tag_; }

  auto operator<=>(const AffineWeylElement&) const = default;

  std::size_t hash() const noexcept;

 private:
  friend class AffineWeylGroup;
  std::array<std::int16_t, kMaxAmbient> translation_{};
  Permutation finite_;
  std::uint8_t tag_ = 0;
};

struct AffineWeylHash {
  std::size_t operator()(const AffineWeylElement& x) const noexcept { return x.hash(); }
};

// x = s_{letters[0]} ... s_{letters[k-1]} * omega^omega_power
struct ReducedWord {
  std::vector<int> letters;
  int omega_power = 0;
  auto operator<=>(const ReducedWord&) const = default;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum rd);

  const RootDatum& datum() const noexcept { return rd_; }
  std::uint8_t tag() const noexcept { return tag_; }

  AffineWeylElement identity() const;
  AffineWeylElement translation(const Coweight& lambda) const;
  AffineWeylElement finite(const Permutation& w) const;
  AffineWeylElement make(const Coweight& lambda, const Permutation& w) const;

  AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement invert(const AffineWeylElement& x) const;
  Coweight translation_part(const AffineWeylElement& x) const { return x.translation(rd_.ambient()); }

  int length(const AffineWeylElement& x) const;
  // Omega-component index of x.
  int degree(const AffineWeylElement& x) const;

  // Index 0 is the affine reflection s_0 = t^{theta^vee} s_theta, indices
  // 1..r the finite simple reflections. Empty for GL(1).
  const std::vector<AffineWeylElement>& simple_reflections() const noexcept { return simple_; }
  int num_simple() const noexcept { return static_cast<int>(simple_.size()); }
  const AffineWeylElement& omega() const noexcept { return omega_; }
  AffineWeylElement omega_power(int k) const;

  bool is_left_descent(int s, const AffineWeylElement& x) const;
  bool is_right_descent(const AffineWeylElement& x, int s) const;

  // Lexicographically least reduced word (memoized; safe for concurrent use).
  ReducedWord reduced_word(const AffineWeylElement& x) const;
  AffineWeylElement from_word(const ReducedWord& word) const;

  bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const;
  // {x : x <= y}, sorted.
  std::vector<AffineWeylElement> bruhat_interval_below(const AffineWeylElement& y) const;
  // Adm(mu) = {x : x <= t^{mu'} for some mu' in W_0 mu}, sorted.
  std::vector<AffineWeylElement> admissible_set(const Coweight& mu) const;
  // W_0 t^mu W_0, sorted.
  std::vector<AffineWeylElement> double_coset(const Coweight& mu) const;

  // Reduced-word memo, exposed for persistence. import_memo validates every
  // entry and silently drops invalid ones; returns the number accepted.
  std::vector<std::pair<AffineWeylElement, ReducedWord>> export_memo() const;
  std::size_t import_memo(const std::vector<std::pair<AffineWeylElement, ReducedWord>>& entries) const;

 private:
  void check(const AffineWeylElement& x) const;
  ReducedWord compute_reduced_word(const AffineWeylElement& x) const;

  RootDatum rd_;
  std::uint8_t tag_;
  std::vector<AffineWeylElement> simple_;
  AffineWeylElement omega_;
  AffineWeylElement omega_inverse_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<AffineWeylElement, ReducedWord, AffineWeylHash> memo_;
};

}  // namespace iwahori
