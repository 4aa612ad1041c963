#pragma once

// Iwahori-Hecke algebra H(G//I) in the T-basis over Z[v, v^-1], q = v^2.
//
// T_w is the characteristic function of I w I, with I given measure 1. The
// product is determined by
//   T_x T_s = T_{xs}                       if l(xs) > l(x)
//   T_x T_s = q T_{xs} + (q - 1) T_x       otherwise
//   T_x T_omega = T_{x omega}              for omega of length zero.

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/laurent.hpp"

namespace iwahori {

class HeckeElement {
 public:
  using TermMap = std::unordered_map<AffineWeylElement, Laurent, AffineWeylHash>;

  HeckeElement() = default;

  void add(const AffineWeylElement& w, const Laurent& c);
  Laurent coefficient(const AffineWeylElement& w) const;
  const TermMap& terms() const noexcept { return terms_; }
  std::vector<std::pair<AffineWeylElement, Laurent>> sorted_terms() const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement operator+(const HeckeElement& other) const;
  HeckeElement operator-(const HeckeElement& other) const;
  HeckeElement operator-() const;
  HeckeElement scaled(const Laurent& c) const;

  bool operator==(const HeckeElement& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

// Image of a Hecke element under v -> 1: an element of the group algebra Z[W~].
using GroupAlgebraElement = std::map<AffineWeylElement, std::int64_t>;

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group);
  explicit HeckeAlgebra(const RootDatum& rd);

  const AffineWeylGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const noexcept { return group_; }
  const RootDatum& datum() const noexcept { return group_->datum(); }

  HeckeElement unit() const;
  HeckeElement t_basis(const AffineWeylElement& w) const;

  HeckeElement right_multiply_simple(const HeckeElement& a, int s) const;
  HeckeElement left_multiply_simple(int s, const HeckeElement& a) const;
  HeckeElement right_multiply_omega(const HeckeElement& a, int power) const;
  HeckeElement left_multiply_omega(int power, const HeckeElement& a) const;

  // Product a*b. Uses the OpenMP kernel when built with OpenMP and the right
  // factor is large enough; results are identical to multiply_serial.
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement multiply_parallel(const HeckeElement& a, const HeckeElement& b) const;
  // Reference implementation: expands every pair T_x T_y separately.
  HeckeElement multiply_serial(const HeckeElement& a, const HeckeElement& b) const;

  // T_s^-1 = q^-1 T_s - (1 - q^-1) T_e
  HeckeElement invert_simple(int s) const;
  HeckeElement invert_t(const AffineWeylElement& w) const;

  // Commutes with every T_s and with T_omega.
  bool is_central(const HeckeElement& a) const;

  GroupAlgebraElement specialize_at_one(const HeckeElement& a) const;
  GroupAlgebraElement group_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const;

 private:
  void right_multiply_simple_into(const AffineWeylElement& x, const Laurent& c, int s, HeckeElement& out) const;

  std::shared_ptr<const AffineWeylGroup> group_;
};

}  // namespace iwahori
