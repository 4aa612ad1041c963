#include "iwahori/finite_field.hpp"

#include "iwahori/errors.hpp"

namespace iwahori {

FiniteField::FiniteField(int q) : q_(q) {
  if (q == 2 || q == 3) {
    p_ = q;
    for (int a = 0; a < q; ++a) {
      neg_[a] = static_cast<std::uint8_t>((q - a) % q);
      for (int b = 0; b < q; ++b) {
        add_[a][b] = static_cast<std::uint8_t>((a + b) % q);
        mul_[a][b] = static_cast<std::uint8_t>((a * b) % q);
      }
    }
    primitive_ = static_cast<std::uint8_t>(q == 2 ? 1 : 2);
    basis_ = {1};
    return;
  }
  if (q == 4) {
    p_ = 2;
    // a*a = a + 1; represent elements as bit pairs (x0, x1).
    auto mul4 = [](int a, int b) {
      const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
      int c0 = (a0 & b0) ^ (a1 & b1);
      int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
      return c0 | (c1 << 1);
    };
    for (int a = 0; a < 4; ++a) {
      neg_[a] = static_cast<std::uint8_t>(a);
      for (int b = 0; b < 4; ++b) {
        add_[a][b] = static_cast<std::uint8_t>(a ^ b);
        mul_[a][b] = static_cast<std::uint8_t>(mul4(a, b));
      }
    }
    primitive_ = 2;
    basis_ = {1, 2};
    return;
  }
  throw InvalidInput("supported field sizes are 2, 3 and 4; got " + std::to_string(q));
}

std::uint8_t FiniteField::inv(std::uint8_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in a finite field");
  for (int b = 1; b < q_; ++b)
    if (mul_[a][b] == 1) return static_cast<std::uint8_t>(b);
  throw std::logic_error("finite field table has no inverse");
}

std::uint8_t FiniteField::from_int(long long value) const {
  long long r = value % p_;
  if (r < 0) r += p_;
  return static_cast<std::uint8_t>(r);
}

}  // namespace iwahori
