#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace iwahori {

// Arithmetic in F_q for q in {2, 3, 4} via lookup tables. Elements are
// encoded as 0..q-1; for F_4 = F_2[a]/(a^2+a+1) the code of x0 + x1*a is
// x0 + 2*x1.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a][neg_[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;
  // Image of an integer under Z -> F_p -> F_q.
  std::uint8_t from_int(long long value) const;

  // Generator of the multiplicative group.
  std::uint8_t primitive() const noexcept { return primitive_; }
  // Basis of F_q as an F_p-vector space.
  const std::vector<std::uint8_t>& additive_basis() const noexcept { return basis_; }

 private:
  int q_;
  int p_;
  std::array<std::array<std::uint8_t, 4>, 4> add_{};
  std::array<std::array<std::uint8_t, 4>, 4> mul_{};
  std::array<std::uint8_t, 4> neg_{};
  std::uint8_t primitive_ = 1;
  std::vector<std::uint8_t> basis_;
};

}  // namespace iwahori
