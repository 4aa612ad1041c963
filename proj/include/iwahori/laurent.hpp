#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace iwahori {

// Element of Z[v, v^-1]; q := v^2. Stored densely from the lowest nonzero
// exponent with no leading or trailing zero coefficients. Arithmetic is
// checked: overflow of the 64-bit coefficients throws std::overflow_error.
class Laurent {
 public:
  Laurent() = default;
  Laurent(std::int64_t constant);  // NOLINT: implicit from integers is intended
  static Laurent monomial(std::int64_t coefficient, int exponent);
  static Laurent v_power(int exponent) { return monomial(1, exponent); }
  static Laurent q() { return v_power(2); }
  static Laurent q_power(int k) { return v_power(2 * k); }
  static Laurent from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int exponent) const;
  // Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, std::int64_t>> terms() const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent operator+(const Laurent& other) const;
  Laurent operator-(const Laurent& other) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& other) const;
  Laurent& operator*=(const Laurent& other) { return *this = *this * other; }
  Laurent shifted(int exponent) const;  // multiply by v^exponent

  // v -> 1
  std::int64_t at_one() const;
  // v -> v^-1
  Laurent bar() const;
  // Evaluate at an integer q; only polynomials in q = v^2 are accepted.
  std::int64_t evaluate_q(std::int64_t q) const;

  bool operator==(const Laurent& other) const = default;

  std::string str() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace iwahori
